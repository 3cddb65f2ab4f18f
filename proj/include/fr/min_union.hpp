#ifndef FR_MIN_UNION_HPP
#define FR_MIN_UNION_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "fr/incidence.hpp"

namespace fr {

inline constexpr std::uint64_t kDefaultBudget = 100000000ULL;

// Blocks packed as bitset rows over dense point indices 0..n_points-1.
// Row i occupies words [i*words, (i+1)*words).
struct BlockBitsets {
    int n_blocks = 0;
    int n_points = 0;
    int words = 0;
    std::vector<std::uint64_t> rows;

    const std::uint64_t* row(int i) const { return rows.data() + static_cast<std::size_t>(i) * words; }
};

BlockBitsets pack_blocks(const FrCode& c);

// Union size of the first k blocks; an achievable value, so a valid
// incumbent seed for the searches.
inline int first_k_union(const BlockBitsets& b, int k) {
    int cnt = 0;
    for (int w = 0; w < b.words; ++w) {
        std::uint64_t acc = 0;
        for (int i = 0; i < k; ++i) acc |= b.row(i)[w];
        cnt += std::popcount(acc);
    }
    return cnt;
}

// Exact minimum, over all k-subsets of blocks, of the union size. Depth-first
// over ascending block indices with an incumbent: a partial selection is
// abandoned as soon as its union size reaches the incumbent, which is exact
// because unions only grow. Visited partial selections are counted against
// `budget`; SizeLimitExceeded is thrown when the count runs out.
//
// Serial version is the reference; the parallel version fans the top-level
// branches out to OpenMP workers sharing an atomic incumbent and returns the
// identical minimum.
int min_union_size_serial(const BlockBitsets& b, int k, std::uint64_t budget = kDefaultBudget);
int min_union_size_parallel(const BlockBitsets& b, int k, std::uint64_t budget = kDefaultBudget);

// Dispatch: parallel when OpenMP is available and the instance is nontrivial.
int min_union_size(const BlockBitsets& b, int k, std::uint64_t budget = kDefaultBudget);

}  // namespace fr

#endif  // FR_MIN_UNION_HPP
