#include "fr/designs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "fr/errors.hpp"
#include "fr/intmath.hpp"
#include "fr/min_union.hpp"
#include "json.hpp"

namespace fr {

namespace {

int point_index(int x, int i) { return 3 * x + i; }

// Bose: theta = 6t+3, idempotent commutative quasigroup on Z_{2t+1} with
// x*y = (x+y)/2 (halving is multiplication by t+1).
IncidenceStructure bose_sts(int t) {
    const int m = 2 * t + 1;
    auto half = [&](int v) { return (v % m) * (t + 1) % m; };

    IncidenceStructure s;
    s.point_ids.resize(3 * m);
    std::iota(s.point_ids.begin(), s.point_ids.end(), 0);
    for (int x = 0; x < m; ++x)
        s.blocks.push_back({point_index(x, 0), point_index(x, 1), point_index(x, 2)});
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
            for (int i = 0; i < 3; ++i)
                s.blocks.push_back(
                    {point_index(x, i), point_index(y, i), point_index(half(x + y), (i + 1) % 3)});
    return s;
}

// Skolem: theta = 6t+1, half-idempotent commutative quasigroup on Z_{2t}
// (rename the addition table so the diagonal reads 0,0,1,1,...), plus one
// extra point.
IncidenceStructure skolem_sts(int t) {
    const int m = 2 * t;
    const int infinity = 6 * t;
    auto rename = [&](int e) { return e % 2 == 0 ? e / 2 : t + (e - 1) / 2; };
    auto op = [&](int x, int y) { return rename((x + y) % m); };

    IncidenceStructure s;
    s.point_ids.resize(6 * t + 1);
    std::iota(s.point_ids.begin(), s.point_ids.end(), 0);
    for (int x = 0; x < t; ++x)
        s.blocks.push_back({point_index(x, 0), point_index(x, 1), point_index(x, 2)});
    for (int x = 0; x < t; ++x)
        for (int i = 0; i < 3; ++i)
            s.blocks.push_back({infinity, point_index(t + x, i), point_index(x, (i + 1) % 3)});
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
            for (int i = 0; i < 3; ++i)
                s.blocks.push_back(
                    {point_index(x, i), point_index(y, i), point_index(op(x, y), (i + 1) % 3)});
    return s;
}

}  // namespace

FrCode steiner_triple_system(int theta) {
    if (theta < 7 || (theta % 6 != 1 && theta % 6 != 3))
        throw Error(Errc::InadmissibleOrder,
                    "theta=" + std::to_string(theta) + " is not 1 or 3 (mod 6) with theta >= 7");
    IncidenceStructure s =
        theta % 6 == 3 ? bose_sts((theta - 3) / 6) : skolem_sts((theta - 1) / 6);
    return validate_fr(std::move(s));
}

bool is_steiner_system(const FrCode& c) {
    const int theta = c.theta;
    std::unordered_map<int, int> pos;
    for (int j = 0; j < theta; ++j) pos[c.structure.point_ids[j]] = j;

    std::vector<int> pair_count(static_cast<std::size_t>(theta) * theta, 0);
    for (const auto& b : c.structure.blocks)
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                ++pair_count[static_cast<std::size_t>(pos[b[i]]) * theta + pos[b[j]]];

    for (int i = 0; i < theta; ++i)
        for (int j = i + 1; j < theta; ++j)
            if (pair_count[static_cast<std::size_t>(i) * theta + j] != 1) return false;
    return true;
}

namespace {

struct ArcSearch {
    int theta;
    int size;
    const std::vector<std::vector<int>>& blocks_of;  // block indices per dense point
    std::vector<int> selected;                        // per block
    std::vector<int> undecided;                       // per block
    int odd_blocks = 0;
    int chosen = 0;
    std::vector<int> picks;

    bool dead_after_decide(int p) const {
        for (int b : blocks_of[p])
            if (undecided[b] == 0 && selected[b] == 1) return true;
        return false;
    }

    bool dfs(int p) {
        if (chosen == size) return odd_blocks == 0;
        if (p == theta || theta - p < size - chosen) return false;

        bool can_include = true;
        for (int b : blocks_of[p])
            if (selected[b] == 2) can_include = false;

        if (can_include) {
            for (int b : blocks_of[p]) {
                odd_blocks += (++selected[b] == 1) ? 1 : -1;
                --undecided[b];
            }
            picks.push_back(p);
            ++chosen;
            if (!dead_after_decide(p) && dfs(p + 1)) return true;
            --chosen;
            picks.pop_back();
            for (int b : blocks_of[p]) {
                odd_blocks += (selected[b]-- == 1) ? -1 : 1;
                ++undecided[b];
            }
        }

        for (int b : blocks_of[p]) --undecided[b];
        bool found = !dead_after_decide(p) && dfs(p + 1);
        for (int b : blocks_of[p]) ++undecided[b];
        return found;
    }
};

}  // namespace

std::optional<std::vector<int>> maximal_arc_search(const FrCode& c, int size) {
    if (!is_steiner_system(c))
        throw Error(Errc::NotSteiner, "arc search requires a Steiner system");
    if (size < 0 || size > c.theta) return std::nullopt;
    if (size == 0) return std::vector<int>{};

    std::unordered_map<int, int> pos;
    for (int j = 0; j < c.theta; ++j) pos[c.structure.point_ids[j]] = j;
    std::vector<std::vector<int>> blocks_of(c.theta);
    for (int i = 0; i < c.n; ++i)
        for (int p : c.structure.blocks[i]) blocks_of[pos[p]].push_back(i);

    ArcSearch search{c.theta, size, blocks_of,
                     std::vector<int>(c.n, 0), std::vector<int>(c.n, 0), 0, 0, {}};
    for (int i = 0; i < c.n; ++i)
        search.undecided[i] = static_cast<int>(c.structure.blocks[i].size());

    if (!search.dfs(0)) return std::nullopt;
    std::vector<int> labels;
    labels.reserve(search.picks.size());
    for (int p : search.picks) labels.push_back(c.structure.point_ids[p]);
    return labels;
}

namespace {

long long ipow(long long base, int exp) {
    long long r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace

bool satisfies_affine_side_condition(int q, int m, int rho) {
    return q > m ? rho > m : rho <= m;
}

ResolvableFrCode affine_fr_code(int q, int m, int rho) {
    if (!is_prime(q)) throw Error(Errc::NotPrime, std::to_string(q) + " is not prime");
    if (m < 2) throw Error(Errc::BadParameters, "need m >= 2");
    const long long max_rho = (ipow(q, m) - 1) / (q - 1);
    if (rho < 1 || rho > max_rho)
        throw Error(Errc::RhoOutOfRange,
                    "rho=" + std::to_string(rho) + " outside 1.." + std::to_string(max_rho));

    const long long n_points = ipow(q, m);
    // all vectors of F_q^m in lexicographic order; index doubles as label
    std::vector<std::vector<int>> vectors(n_points, std::vector<int>(m, 0));
    for (long long idx = 0; idx < n_points; ++idx) {
        long long rem = idx;
        for (int t = m - 1; t >= 0; --t) {
            vectors[idx][t] = static_cast<int>(rem % q);
            rem /= q;
        }
    }

    // normalized directions (first nonzero coordinate = 1), in lex order
    std::vector<std::vector<int>> directions;
    for (const auto& v : vectors) {
        int first = -1;
        for (int t = 0; t < m; ++t)
            if (v[t] != 0) {
                first = t;
                break;
            }
        if (first >= 0 && v[first] == 1) directions.push_back(v);
        if (static_cast<int>(directions.size()) == rho) break;
    }

    IncidenceStructure s;
    s.point_ids.resize(n_points);
    std::iota(s.point_ids.begin(), s.point_ids.end(), 0);
    std::vector<std::vector<int>> classes;
    for (int d = 0; d < rho; ++d) {
        std::vector<int> cls;
        for (int c = 0; c < q; ++c) {
            std::vector<int> block;
            for (long long idx = 0; idx < n_points; ++idx) {
                int dot = 0;
                for (int t = 0; t < m; ++t) dot += directions[d][t] * vectors[idx][t];
                if (dot % q == c) block.push_back(static_cast<int>(idx));
            }
            cls.push_back(static_cast<int>(s.blocks.size()));
            s.blocks.push_back(std::move(block));
        }
        classes.push_back(std::move(cls));
    }

    return {validate_fr(std::move(s)), std::move(classes)};
}

namespace {

void check_latin(const LatinSquare& sq) {
    const int n = sq.order;
    if (n < 1 || static_cast<int>(sq.cells.size()) != n)
        throw Error(Errc::BadParameters, "latin square shape mismatch");
    for (const auto& row : sq.cells)
        if (static_cast<int>(row.size()) != n)
            throw Error(Errc::BadParameters, "latin square row length mismatch");
    std::vector<bool> seen(n + 1);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), false);
        for (int j = 0; j < n; ++j) {
            int v = sq.cells[i][j];
            if (v < 1 || v > n || seen[v])
                throw Error(Errc::BadParameters,
                            "row " + std::to_string(i) + " is not a permutation of 1.." +
                                std::to_string(n));
            seen[v] = true;
        }
    }
    for (int j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), false);
        for (int i = 0; i < n; ++i) {
            int v = sq.cells[i][j];
            if (seen[v])
                throw Error(Errc::BadParameters,
                            "column " + std::to_string(j) + " repeats symbol " + std::to_string(v));
            seen[v] = true;
        }
    }
}

}  // namespace

std::vector<LatinSquare> mols_prime(int p) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    std::vector<LatinSquare> squares;
    for (int a = 1; a < p; ++a) {
        LatinSquare sq;
        sq.order = p;
        sq.cells.assign(p, std::vector<int>(p));
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) sq.cells[i][j] = (a * i + j) % p + 1;
        squares.push_back(std::move(sq));
    }
    return squares;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    if (a.order != b.order)
        throw Error(Errc::OrderMismatch, std::to_string(a.order) + " vs " + std::to_string(b.order));
    const int n = a.order;
    std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::size_t key = static_cast<std::size_t>(a.cells[i][j] - 1) * n + (b.cells[i][j] - 1);
            if (seen[key]) return false;
            seen[key] = true;
        }
    return true;
}

FrCode mols_fr_code(const std::vector<LatinSquare>& squares, int rho) {
    if (squares.empty()) throw Error(Errc::BadParameters, "no squares given");
    if (rho < 1 || rho > static_cast<int>(squares.size()))
        throw Error(Errc::RhoOutOfRange, "rho=" + std::to_string(rho) + " outside 1.." +
                                             std::to_string(squares.size()));
    const int n = squares[0].order;
    for (const auto& sq : squares) {
        if (sq.order != n)
            throw Error(Errc::OrderMismatch,
                        std::to_string(sq.order) + " vs " + std::to_string(n));
        check_latin(sq);
    }
    for (std::size_t i = 0; i < squares.size(); ++i)
        for (std::size_t j = i + 1; j < squares.size(); ++j)
            if (!are_orthogonal(squares[i], squares[j]))
                throw Error(Errc::NotOrthogonal, "squares " + std::to_string(i) + " and " +
                                                     std::to_string(j) + " are not orthogonal");

    IncidenceStructure s;
    s.point_ids.resize(static_cast<std::size_t>(n) * n);
    std::iota(s.point_ids.begin(), s.point_ids.end(), 0);
    for (int sq = 0; sq < rho; ++sq)
        for (int v = 1; v <= n; ++v) {
            std::vector<int> block;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (squares[sq].cells[i][j] == v) block.push_back(i * n + j);
            s.blocks.push_back(std::move(block));
        }
    return validate_fr(std::move(s));
}

namespace {

// Backtracking over parallel classes; each class is completed by exact cover
// of the point set, always extending at the lowest uncovered point. The
// first full partition found is the lexicographically least one.
struct ResolvabilitySearch {
    const BlockBitsets& bits;
    std::vector<bool> used;
    std::vector<std::vector<int>> classes;

    int lowest_uncovered(const std::vector<std::uint64_t>& cov) const {
        for (int w = 0; w < bits.words; ++w) {
            std::uint64_t inv = ~cov[w];
            if (w == bits.words - 1 && bits.n_points % 64 != 0)
                inv &= (1ULL << (bits.n_points % 64)) - 1;
            if (inv) return w * 64 + std::countr_zero(inv);
        }
        return -1;
    }

    bool disjoint(int b, const std::vector<std::uint64_t>& cov) const {
        const std::uint64_t* row = bits.row(b);
        for (int w = 0; w < bits.words; ++w)
            if (cov[w] & row[w]) return false;
        return true;
    }

    void flip(int b, std::vector<std::uint64_t>& cov) const {
        const std::uint64_t* row = bits.row(b);
        for (int w = 0; w < bits.words; ++w) cov[w] ^= row[w];
    }

    bool extend(std::vector<int>& cls, std::vector<std::uint64_t>& cov) {
        int p = lowest_uncovered(cov);
        if (p < 0) {
            classes.push_back(cls);
            if (solve()) return true;
            classes.pop_back();
            return false;
        }
        for (int b = 0; b < bits.n_blocks; ++b) {
            if (used[b]) continue;
            if (!(bits.row(b)[p / 64] & (1ULL << (p % 64)))) continue;
            if (!disjoint(b, cov)) continue;
            used[b] = true;
            cls.push_back(b);
            flip(b, cov);
            if (extend(cls, cov)) return true;
            flip(b, cov);
            cls.pop_back();
            used[b] = false;
        }
        return false;
    }

    bool solve() {
        int seed = -1;
        for (int b = 0; b < bits.n_blocks; ++b)
            if (!used[b]) {
                seed = b;
                break;
            }
        if (seed < 0) return true;  // every block placed
        used[seed] = true;
        std::vector<int> cls{seed};
        std::vector<std::uint64_t> cov(bits.words, 0);
        flip(seed, cov);
        bool ok = extend(cls, cov);
        used[seed] = false;
        return ok;
    }
};

}  // namespace

std::optional<ResolvableDesign> is_resolvable(const FrCode& c) {
    if (c.theta % c.alpha != 0) return std::nullopt;
    const int class_size = c.theta / c.alpha;
    if (c.n % class_size != 0) return std::nullopt;

    BlockBitsets bits = pack_blocks(c);
    ResolvabilitySearch search{bits, std::vector<bool>(c.n, false), {}};
    if (!search.solve()) return std::nullopt;
    return ResolvableDesign{c.structure, std::move(search.classes)};
}

std::vector<LatinSquare> latin_squares_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    if (!j.is_object() || !j.contains("order") || !j.contains("squares"))
        throw Error(Errc::ParseError, "expected object with \"order\" and \"squares\"");

    std::vector<LatinSquare> squares;
    try {
        int order = j["order"].get<int>();
        for (const auto& cells : j["squares"]) {
            LatinSquare sq;
            sq.order = order;
            sq.cells = cells.get<std::vector<std::vector<int>>>();
            squares.push_back(std::move(sq));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    for (const auto& sq : squares) check_latin(sq);
    return squares;
}

}  // namespace fr
