#include <bit>
#include <unordered_map>

#include "fr/errors.hpp"
#include "fr/min_union.hpp"

namespace fr {

BlockBitsets pack_blocks(const FrCode& c) {
    std::unordered_map<int, int> pos;
    pos.reserve(c.structure.point_ids.size());
    for (std::size_t j = 0; j < c.structure.point_ids.size(); ++j)
        pos[c.structure.point_ids[j]] = static_cast<int>(j);

    BlockBitsets b;
    b.n_blocks = c.n;
    b.n_points = c.theta;
    b.words = (c.theta + 63) / 64;
    b.rows.assign(static_cast<std::size_t>(c.n) * b.words, 0);
    for (int i = 0; i < c.n; ++i)
        for (int p : c.structure.blocks[i]) {
            int q = pos[p];
            b.rows[static_cast<std::size_t>(i) * b.words + q / 64] |= 1ULL << (q % 64);
        }
    return b;
}

namespace {

// Reference search: one stack of per-depth union buffers, blocks taken in
// ascending index order so every k-subset is visited exactly once.
struct SerialScan {
    const BlockBitsets& b;
    int k;
    std::uint64_t remaining;
    std::uint64_t budget;
    int best;
    std::vector<std::uint64_t> levels;  // (k+1) rows of `words`

    SerialScan(const BlockBitsets& bits, int kk, std::uint64_t bud)
        : b(bits), k(kk), remaining(bud), budget(bud), best(first_k_union(bits, kk)),
          levels(static_cast<std::size_t>(kk + 1) * bits.words, 0) {}

    void dfs(int next, int depth) {
        const std::uint64_t* cur = levels.data() + static_cast<std::size_t>(depth) * b.words;
        std::uint64_t* out = levels.data() + static_cast<std::size_t>(depth + 1) * b.words;
        for (int i = next; i <= b.n_blocks - k + depth; ++i) {
            if (remaining-- == 0) throw SizeLimitExceeded(budget);
            const std::uint64_t* row = b.row(i);
            int cnt = 0;
            for (int w = 0; w < b.words; ++w) {
                out[w] = cur[w] | row[w];
                cnt += std::popcount(out[w]);
            }
            if (depth + 1 == k) {
                if (cnt < best) best = cnt;
            } else if (cnt < best) {
                dfs(i + 1, depth + 1);
            }
        }
    }
};

}  // namespace

int min_union_size_serial(const BlockBitsets& b, int k, std::uint64_t budget) {
    if (k < 1 || k > b.n_blocks)
        throw Error(Errc::KOutOfRange, "k=" + std::to_string(k) + " outside 1.." +
                                           std::to_string(b.n_blocks));
    SerialScan scan(b, k, budget);
    scan.dfs(0, 0);
    return scan.best;
}

}  // namespace fr
