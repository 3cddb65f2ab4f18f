#ifndef FR_DESIGNS_HPP
#define FR_DESIGNS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fr/incidence.hpp"

namespace fr {

// Block indices partitioned into parallel classes, each class's blocks
// partitioning the point set.
struct ResolvableDesign {
    IncidenceStructure structure;
    std::vector<std::vector<int>> parallel_classes;
};

struct ResolvableFrCode {
    FrCode code;
    std::vector<std::vector<int>> parallel_classes;
};

// n x n array over symbols 1..n, each symbol once per row and column.
struct LatinSquare {
    int order = 0;
    std::vector<std::vector<int>> cells;
};

// An S(2,3,theta) as an FR code: n = theta(theta-1)/6 blocks, alpha = 3,
// rho = (theta-1)/2. Bose construction for theta = 3 (mod 6), Skolem for
// theta = 1 (mod 6); Error(InadmissibleOrder) for other theta or theta < 7.
FrCode steiner_triple_system(int theta);

// True iff every unordered point pair lies in exactly one block.
bool is_steiner_system(const FrCode& c);

// Point set of the given size meeting every block in 0 or 2 points, if one
// exists. Depth-first over points in ascending label order with pruning on
// any block met three times or forced odd; returns the lexicographically
// least arc. Error(NotSteiner) when c is not a Steiner system.
std::optional<std::vector<int>> maximal_arc_search(const FrCode& c, int size);

// Parallel classes of hyperplanes of the m-dimensional affine space over the
// prime field F_q; the first rho nonzero normal directions in lexicographic
// order of projective representatives yield a (q*rho, q^(m-1), rho)-FR code.
ResolvableFrCode affine_fr_code(int q, int m, int rho);

// The paper-side restriction under which the affine file-size law is stated:
// rho > m when q > m, rho <= m when q <= m. Advisory for the law checks; the
// construction itself only requires rho within range.
bool satisfies_affine_side_condition(int q, int m, int rho);

// p-1 mutually orthogonal Latin squares of prime order p.
std::vector<LatinSquare> mols_prime(int p);

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

// Cells of the common order-N grid as points; the first rho squares each
// contribute a parallel class of N symbol-blocks, giving a (rho*N, N, rho)-FR
// code. Errors: NotOrthogonal, RhoOutOfRange, OrderMismatch.
FrCode mols_fr_code(const std::vector<LatinSquare>& squares, int rho);

// Partition of blocks into parallel classes if one exists (exact-cover search
// per class, backtracking over classes); nullopt otherwise, including when
// alpha does not divide theta.
std::optional<ResolvableDesign> is_resolvable(const FrCode& c);

// {"order":N,"squares":[[[...],...],...]} -> validated squares.
std::vector<LatinSquare> latin_squares_from_json(const std::string& text);

}  // namespace fr

#endif  // FR_DESIGNS_HPP
