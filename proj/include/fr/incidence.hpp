#ifndef FR_INCIDENCE_HPP
#define FR_INCIDENCE_HPP

#include <string>
#include <vector>

namespace fr {

// Points and blocks with an incidence relation. Point labels are arbitrary
// distinct non-negative integers and keep their order; each block is stored
// as an ascending sequence of labels, so block equality is canonical. Block
// order is significant for identity and serialization.
struct IncidenceStructure {
    std::vector<int> point_ids;
    std::vector<std::vector<int>> blocks;

    bool operator==(const IncidenceStructure&) const = default;
};

// Throws Error(EmptyStructure/InvalidStructure) unless the structure has
// nonempty points and blocks, distinct non-negative labels, and every block
// is a set of known labels. Sorts block contents in place.
void normalize_structure(IncidenceStructure& s);

// An (n, alpha, rho)-regular incidence structure: n blocks of alpha points
// each, every point in exactly rho blocks, theta = n*alpha/rho points total.
struct FrCode {
    IncidenceStructure structure;
    int n = 0;
    int alpha = 0;
    int rho = 0;
    int theta = 0;

    bool operator==(const FrCode&) const = default;
};

// Checks regularity and derives (n, alpha, rho, theta); alpha and rho are
// inferred from the structure, never supplied. Errors name the first
// offending block or point.
FrCode validate_fr(IncidenceStructure s);

// The (theta, rho, alpha) dual: one block per original point, holding the
// indices of the original blocks incident with it. The original block at
// position i becomes point i.
FrCode dual(const FrCode& c);

// True iff two blocks have identical point sets.
bool has_repeated_blocks(const FrCode& c);

// Relabels b's points above a's and concatenates the block lists; requires
// matching alpha and rho (Error(ParameterMismatch) otherwise).
FrCode disjoint_union(const FrCode& a, const FrCode& b);

// Replaces each label by its position in point_ids; the form in which a code
// compares equal to its double dual.
IncidenceStructure relabel_points_to_positions(const IncidenceStructure& s);

// JSON document {"points":[...],"blocks":[[...],...]}; blocks emitted sorted
// ascending, in stored order. The sole ingestion format for external designs.
std::string to_json(const IncidenceStructure& s);
IncidenceStructure structure_from_json(const std::string& text);

}  // namespace fr

#endif  // FR_INCIDENCE_HPP
