#include "fr/distance.hpp"

#include <algorithm>
#include <bit>

#include <boost/multiprecision/cpp_int.hpp>

#include "fr/errors.hpp"
#include "fr/filesize.hpp"
#include "fr/intmath.hpp"

namespace fr {

namespace {

// Exact minimum set cover of `target` by the given rows, branching on the
// lowest uncovered point.
struct CoverSearch {
    const BlockBitsets& bits;
    const std::uint64_t* target;
    int skip;  // index of the lost block
    int best;

    int count_missing(const std::vector<std::uint64_t>& cov) const {
        int missing = 0;
        for (int w = 0; w < bits.words; ++w)
            missing += std::popcount(target[w] & ~cov[w]);
        return missing;
    }

    int lowest_missing(const std::vector<std::uint64_t>& cov) const {
        for (int w = 0; w < bits.words; ++w) {
            std::uint64_t miss = target[w] & ~cov[w];
            if (miss) return w * 64 + std::countr_zero(miss);
        }
        return -1;
    }

    void dfs(std::vector<std::uint64_t>& cov, int chosen, int max_block_size) {
        int p = lowest_missing(cov);
        if (p < 0) {
            best = std::min(best, chosen);
            return;
        }
        int missing = count_missing(cov);
        if (chosen + static_cast<int>(ceil_div(missing, max_block_size)) >= best) return;
        for (int b = 0; b < bits.n_blocks; ++b) {
            if (b == skip) continue;
            const std::uint64_t* row = bits.row(b);
            if (!(row[p / 64] & (1ULL << (p % 64)))) continue;
            std::vector<std::uint64_t> next(cov);
            for (int w = 0; w < bits.words; ++w) next[w] |= row[w];
            dfs(next, chosen + 1, max_block_size);
        }
    }
};

}  // namespace

int repair_locality(const FrCode& c) {
    if (c.rho < 2)
        throw Error(Errc::Unrepairable, "rho=" + std::to_string(c.rho) +
                                            ": some packet has no surviving replica");
    BlockBitsets bits = pack_blocks(c);
    int worst = 0;
    for (int lost = 0; lost < c.n; ++lost) {
        CoverSearch search{bits, bits.row(lost), lost, c.alpha + 1};
        std::vector<std::uint64_t> cov(bits.words, 0);
        search.dfs(cov, 0, c.alpha);
        worst = std::max(worst, search.best);
    }
    return worst;
}

int min_distance(const FrCode& c, int M, std::uint64_t budget) {
    if (M < 1 || M > c.theta)
        throw Error(Errc::FileTooLarge,
                    "M=" + std::to_string(M) + " outside 1.." + std::to_string(c.theta));
    return supported_file_size(dual(c), c.theta - M + 1, budget);
}

int singleton_bound(int n, int alpha, int M) {
    return n - static_cast<int>(ceil_div(M, alpha)) + 1;
}

int locality_bound(int n, int alpha, int d, int M) {
    return n - static_cast<int>(ceil_div(M, alpha)) -
           static_cast<int>(ceil_div(M, static_cast<long long>(d) * alpha)) + 2;
}

int improved_bound(int n, int alpha, int rho, int M) {
    const long long theta = static_cast<long long>(n) * alpha / rho;
    if (M < 1 || M > theta)
        throw Error(Errc::FileTooLarge,
                    "M=" + std::to_string(M) + " outside 1.." + std::to_string(theta));
    const int psi = psi_bound(n, alpha, rho, static_cast<int>(theta) - M + 1);
    int indicator = 0;
    for (int phi : phi_sequence(n, alpha, rho))
        if (phi > M - 1) ++indicator;
    return std::min(psi, indicator);
}

int improved_bound(const FrCode& c, int M) { return improved_bound(c.n, c.alpha, c.rho, M); }

int local_structure_bound(int n, int alpha, int n_local, int rho_local, int M) {
    if (n < n_local || rho_local < 1 || alpha < 1 || M < 1)
        throw Error(Errc::BadParameters, "need n >= n_local, rho_local >= 1, M >= 1");
    const long long f =
        floor_div(static_cast<long long>(M - 1) * rho_local, static_cast<long long>(n_local) * alpha);
    // n'(1-1/rho')*f + M/alpha over the common denominator rho'*alpha
    const long long numerator =
        static_cast<long long>(n_local) * (rho_local - 1) * f * alpha +
        static_cast<long long>(M) * rho_local;
    const long long denominator = static_cast<long long>(rho_local) * alpha;
    return n - static_cast<int>(ceil_div(numerator, denominator)) + 1;
}

bool attains_singleton(const FrCode& c, int k, std::uint64_t budget) {
    const int m = supported_file_size(c, k, budget);
    return k == static_cast<int>(ceil_div(m, c.alpha));
}

bool attains_locality_bound(const FrCode& c, int k, std::uint64_t budget) {
    const int d = repair_locality(c);
    const int m = supported_file_size(c, k, budget);
    return k == static_cast<int>(ceil_div(m, c.alpha)) +
                    static_cast<int>(ceil_div(m, static_cast<long long>(d) * c.alpha)) - 1;
}

KInterval singleton_range_regular(int alpha, int g) {
    return {1, std::min(alpha, g - 1)};
}

KInterval singleton_range_regular_beyond(int alpha, int g) {
    if (g >= alpha) return {1, 0};
    return {g, std::min(alpha - 1, g + static_cast<int>(ceil_div(g, 2)) - 2)};
}

KInterval singleton_range_turan(int n, int r) {
    if (n < 2 || r < 2) throw Error(Errc::BadParameters, "need n >= 2 and r >= 2");
    if (n % r != 0)
        throw Error(Errc::NonDivisible, std::to_string(r) + " does not divide " + std::to_string(n));
    int k_root = 0;
    while (static_cast<long long>(k_root + 1) * (k_root + 1) < 2LL * n) ++k_root;
    return {1, std::min(n / r * (r - 1), k_root)};
}

KInterval singleton_range_steiner(int rho) { return {1, ceil_triangular_root(rho)}; }

int affine_k0(long long q) {
    if (q < 2) throw Error(Errc::BadParameters, "need q >= 2");
    using boost::multiprecision::cpp_int;
    // q(1-1/q)^k + k - q < 1  <=>  (q-1)^k < q^(k-1) * (q+1-k)
    cpp_int lhs = q - 1;        // (q-1)^k
    cpp_int scale = 1;          // q^(k-1)
    int k = 1;
    while (true) {
        const int next = k + 1;
        if (q + 1 - next <= 0) return k;
        cpp_int l = lhs * (q - 1);
        cpp_int s = scale * q;
        if (l >= s * (q + 1 - next)) return k;
        lhs = l;
        scale = s;
        k = next;
    }
}

KInterval singleton_range_affine(int q, int m) {
    return {1, std::min(m, affine_k0(q))};
}

KInterval singleton_range_mols(long long p_power, int rho) {
    return {1, static_cast<int>(std::min<long long>(rho, ceil_triangular_root(p_power)))};
}

namespace {

// alpha > num/den for positive den
bool strictly_above(int alpha, long long num, long long den) {
    return static_cast<long long>(alpha) * den > num;
}

// alpha >= num/den + 1 for positive den
bool at_least_one_above(int alpha, long long num, long long den) {
    return static_cast<long long>(alpha - 1) * den >= num;
}

// 2*alpha <= (b-a) - sqrt(delta), exact
bool below_low_root(int alpha, long long b_minus_a, long long delta) {
    const long long lhs = b_minus_a - 2LL * alpha;
    return lhs >= 0 && lhs * lhs >= delta;
}

// 2*alpha >= (b-a) + sqrt(delta), exact
bool above_high_root(int alpha, long long b_minus_a, long long delta) {
    const long long lhs = 2LL * alpha - b_minus_a;
    return lhs >= 0 && lhs * lhs >= delta;
}

}  // namespace

std::optional<GraphLocalityMatch> graph_locality_requirement(int alpha, int g, int k) {
    if (alpha < 2 || g < 3) throw Error(Errc::BadParameters, "need alpha >= 2 and g >= 3");
    const int horizon = g + static_cast<int>(ceil_div(g, 2)) - 2;
    if (k <= alpha || k > horizon)
        throw Error(Errc::OutOfTheoremRange,
                    "k=" + std::to_string(k) + " outside alpha+1.." + std::to_string(horizon));

    const int a = k / alpha;
    const int b = k % alpha;

    if (k <= g - 1) {
        if (b == 0) {
            // case 1: k = a*alpha with a > 1
            if (a <= alpha) return GraphLocalityMatch{1, ""};
            return std::nullopt;
        }
        // case 2: k = a*alpha + b, 1 <= b < alpha, a >= 1
        if (a < 1 || a >= b) return std::nullopt;
        const long long delta = static_cast<long long>(b - a) * (b - a) - 4LL * b + 4;
        if (delta <= 0) {
            if (strictly_above(alpha, b - 1, b - a)) return GraphLocalityMatch{2, "delta<=0"};
            return std::nullopt;
        }
        if (strictly_above(alpha, b - 1, b - a) && below_low_root(alpha, b - a, delta))
            return GraphLocalityMatch{2, "delta>0:low"};
        if (above_high_root(alpha, b - a, delta) && at_least_one_above(alpha, b - 1, b - a))
            return GraphLocalityMatch{2, "delta>0:high"};
        return std::nullopt;
    }

    // case 3: g <= k = a*alpha + b <= g + ceil(g/2) - 2, 1 <= b < alpha
    if (b == 0 || a < 1 || a >= b) return std::nullopt;
    const long long delta = static_cast<long long>(b - a) * (b - a) - 4LL * b;
    if (delta <= 0) {
        if (strictly_above(alpha, b, b - a)) return GraphLocalityMatch{3, "delta<=0"};
        return std::nullopt;
    }
    if (strictly_above(alpha, b, b - a) && below_low_root(alpha, b - a, delta))
        return GraphLocalityMatch{3, "delta>0:low"};
    if (above_high_root(alpha, b - a, delta) && at_least_one_above(alpha, b, b - a))
        return GraphLocalityMatch{3, "delta>0:high"};
    return std::nullopt;
}

std::vector<DualGraphCase> dual_graph_optimal_cases(int n, int alpha, int g) {
    if (8LL * alpha - 14 <= 0)
        throw Error(Errc::DegenerateDenominator, "8*alpha - 14 <= 0 for alpha=" + std::to_string(alpha));
    if (alpha < 2 || g < 3) throw Error(Errc::BadParameters, "need alpha >= 2 and g >= 3");

    const long long denom = 8LL * alpha - 14;
    const long long half_up = ceil_div(g, 2);

    struct Candidate {
        const char* regime;
        int residue;      // M = 4*Lambda + residue
        long long numerator;
        long long w_lo;   // window on n - 4*Lambda
        long long w_hi;
    };
    const Candidate candidates[] = {
        {"below-girth", 0, (n + 2LL) * (alpha - 2), 0, g - 2LL},
        {"below-girth", 1, n * (alpha - 2LL) + 2, 1, g - 1LL},
        {"below-girth", 2, (n - 2LL) * (alpha - 2), 2, static_cast<long long>(g)},
        {"below-girth", 3, (n - 4LL) * (alpha - 2), 3, g + 1LL},
        {"at-girth", 0, n * (alpha - 2LL) + 2 * (alpha - 3LL), g - 1LL, g + half_up - 3},
        {"at-girth", 1, n * (alpha - 2LL), static_cast<long long>(g), g + half_up - 2},
        {"at-girth", 2, n * (alpha - 2LL) - 2 * (alpha - 1LL), g + 1LL, g + half_up - 1},
        {"at-girth", 3, n * (alpha - 2LL) - 2 * (alpha - 3LL), g + 2LL, g + half_up},
    };

    std::vector<DualGraphCase> out;
    for (const auto& c : candidates) {
        if (c.numerator <= 0 || c.numerator % denom != 0) continue;
        const long long lambda = c.numerator / denom;
        const long long w = n - 4 * lambda;
        if (w < c.w_lo || w > c.w_hi) continue;
        out.push_back({c.regime, c.residue, lambda, static_cast<int>(4 * lambda + c.residue)});
    }
    return out;
}

BoundReport bound_report(const FrCode& c, int M, const BoundReportOptions& opts) {
    if (M < 1 || M > c.theta)
        throw Error(Errc::FileTooLarge,
                    "M=" + std::to_string(M) + " outside 1.." + std::to_string(c.theta));

    BoundReport r;
    r.file_size = M;
    r.bound_singleton = singleton_bound(c.n, c.alpha, M);
    r.bound_locality = locality_bound(c.n, c.alpha, repair_locality(c), M);
    r.bound_improved = improved_bound(c, M);
    if (opts.local_structure)
        r.bound_local_structure = local_structure_bound(c.n, c.alpha, opts.local_structure->first,
                                                        opts.local_structure->second, M);
    if (opts.compute_exact) {
        try {
            r.d_min_exact = min_distance(c, M, opts.budget);
        } catch (const SizeLimitExceeded&) {
            // bounds only; attainment flags stay unset rather than guessed
        }
    }
    if (r.d_min_exact) {
        r.attains_singleton_bound = *r.d_min_exact == r.bound_singleton;
        r.attains_locality_bound = *r.d_min_exact == r.bound_locality;
        r.attains_improved_bound = *r.d_min_exact == r.bound_improved;
    }
    return r;
}

}  // namespace fr
