#ifndef FR_DISTANCE_HPP
#define FR_DISTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fr/incidence.hpp"
#include "fr/min_union.hpp"

namespace fr {

// Closed integer interval of reconstruction degrees; lo > hi means empty.
struct KInterval {
    int lo = 1;
    int hi = 0;

    bool empty() const { return lo > hi; }
    bool contains(int k) const { return lo <= k && k <= hi; }
};

// Worst case over blocks of the minimum number of other blocks whose union
// contains the lost block; exact set cover by branch and bound.
// Error(Unrepairable) when rho = 1.
int repair_locality(const FrCode& c);

// Exact minimum distance for stored-file size M: the supported file size of
// the dual at reconstruction degree theta - M + 1 (equivalently, the smallest
// failure-set size leaving fewer than M distinct points among survivors).
int min_distance(const FrCode& c, int M, std::uint64_t budget = kDefaultBudget);

// n - ceil(M/alpha) + 1
int singleton_bound(int n, int alpha, int M);

// n - ceil(M/alpha) - ceil(M/(d*alpha)) + 2; coincides with the Singleton
// bound whenever M <= d*alpha.
int locality_bound(int n, int alpha, int d, int M);

// min(psi(theta - M + 1), #{k : phi(k) > M - 1})
int improved_bound(int n, int alpha, int rho, int M);
int improved_bound(const FrCode& c, int M);

// n - ceil(n'(1 - 1/rho') * floor((M-1)rho'/(n'alpha)) + M/alpha) + 1,
// evaluated in exact rational arithmetic before the outer ceiling.
int local_structure_bound(int n, int alpha, int n_local, int rho_local, int M);

// k = ceil(M_k/alpha), using exact M_k.
bool attains_singleton(const FrCode& c, int k, std::uint64_t budget = kDefaultBudget);

// k = ceil(M_k/alpha) + ceil(M_k/(d*alpha)) - 1 with d the repair locality.
bool attains_locality_bound(const FrCode& c, int k, std::uint64_t budget = kDefaultBudget);

// Attainment ranges predicted for the construction families.
KInterval singleton_range_regular(int alpha, int g);         // [1, min(alpha, g-1)]
KInterval singleton_range_regular_beyond(int alpha, int g);  // [g, min(alpha-1, g+ceil(g/2)-2)] when g < alpha
KInterval singleton_range_turan(int n, int r);
KInterval singleton_range_steiner(int rho);
KInterval singleton_range_affine(int q, int m);
KInterval singleton_range_mols(long long p_power, int rho);

// Largest k0 with q(1-1/q)^k0 + k0 - q < 1, found by ascending scan in exact
// integer arithmetic.
int affine_k0(long long q);

// Which requirement case (and branch) a reconstruction degree k > alpha
// satisfies for an alpha-regular girth-g graph code to attain the locality
// bound, or nullopt. Cases follow the decomposition k = a*alpha + b:
// 1: b = 0 with k <= g-1; 2: 1 <= b < alpha with k <= g-1; 3: g <= k.
struct GraphLocalityMatch {
    int requirement_case = 0;
    std::string branch;  // "", "delta<=0", "delta>0:low", "delta>0:high"
};
std::optional<GraphLocalityMatch> graph_locality_requirement(int alpha, int g, int k);

// File sizes at which the dual of an alpha-regular girth-g graph code attains
// the locality bound: the integral in-window Lambda candidates. `regime` says
// which file-size law window produced the case ("below-girth" for k <= g-1,
// "at-girth" for g <= k); `residue` is M mod 4.
struct DualGraphCase {
    std::string regime;
    int residue = 0;
    long long lambda = 0;
    int file_size = 0;
};
std::vector<DualGraphCase> dual_graph_optimal_cases(int n, int alpha, int g);

// Aggregated per-M view: the exact minimum distance when affordable, every
// applicable upper bound, and attainment flags (set only alongside an exact
// minimum distance).
struct BoundReport {
    int file_size = 0;
    std::optional<int> d_min_exact;
    int bound_singleton = 0;
    int bound_locality = 0;
    int bound_improved = 0;
    std::optional<int> bound_local_structure;
    std::optional<bool> attains_singleton_bound;
    std::optional<bool> attains_locality_bound;
    std::optional<bool> attains_improved_bound;
};

struct BoundReportOptions {
    std::uint64_t budget = kDefaultBudget;
    bool compute_exact = true;
    std::optional<std::pair<int, int>> local_structure;  // (n', rho')
};

BoundReport bound_report(const FrCode& c, int M, const BoundReportOptions& opts = {});

}  // namespace fr

#endif  // FR_DISTANCE_HPP
