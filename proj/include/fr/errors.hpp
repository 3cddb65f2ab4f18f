#ifndef FR_ERRORS_HPP
#define FR_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fr {

// Reason codes for invalid inputs and violated preconditions. Kept as a flat
// enum so callers (and the CLI) can branch without string matching.
enum class Errc {
    EmptyStructure,
    InvalidStructure,
    NonUniformBlockSize,
    NonUniformPointDegree,
    ParameterMismatch,
    BadParameters,
    NonDivisible,
    NotPrime,
    NotRegular,
    InadmissibleOrder,
    NotSteiner,
    RhoOutOfRange,
    NotOrthogonal,
    OrderMismatch,
    KOutOfRange,
    EllOutOfRange,
    FileTooLarge,
    Unrepairable,
    OutOfTheoremRange,
    DegenerateDenominator,
    ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

// Thrown when an exhaustive search would exceed its work budget. Kept apart
// from Error so callers can map it to a distinct exit status.
class SizeLimitExceeded : public std::runtime_error {
public:
    explicit SizeLimitExceeded(std::uint64_t budget)
        : std::runtime_error("work budget of " + std::to_string(budget) + " subsets exceeded"),
          budget_(budget) {}

    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

}  // namespace fr

#endif  // FR_ERRORS_HPP
