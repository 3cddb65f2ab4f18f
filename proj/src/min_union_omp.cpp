#include <atomic>
#include <bit>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fr/errors.hpp"
#include "fr/min_union.hpp"

namespace fr {

namespace {

void atomic_min(std::atomic<int>& a, int v) {
    int cur = a.load(std::memory_order_relaxed);
    while (v < cur && !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
}

constexpr std::uint64_t kBudgetChunk = 4096;

// Same ascending-index search as the serial reference, with the incumbent in
// a shared atomic and budget credits drawn from a shared pool in chunks.
struct Worker {
    const BlockBitsets& b;
    int k;
    std::atomic<int>& best;
    std::atomic<std::uint64_t>& pool;
    std::atomic<bool>& exhausted;
    std::uint64_t local_credits = 0;
    std::vector<std::uint64_t> levels;

    Worker(const BlockBitsets& bits, int kk, std::atomic<int>& bst,
           std::atomic<std::uint64_t>& pl, std::atomic<bool>& ex)
        : b(bits), k(kk), best(bst), pool(pl), exhausted(ex),
          levels(static_cast<std::size_t>(kk + 1) * bits.words, 0) {}

    bool draw_credit() {
        if (local_credits > 0) {
            --local_credits;
            return true;
        }
        std::uint64_t have = pool.load(std::memory_order_relaxed);
        while (have > 0) {
            std::uint64_t take = have < kBudgetChunk ? have : kBudgetChunk;
            if (pool.compare_exchange_weak(have, have - take, std::memory_order_relaxed)) {
                local_credits = take - 1;
                return true;
            }
        }
        exhausted.store(true, std::memory_order_relaxed);
        return false;
    }

    // returns false when the budget pool ran dry
    bool dfs(int next, int depth) {
        const std::uint64_t* cur = levels.data() + static_cast<std::size_t>(depth) * b.words;
        std::uint64_t* out = levels.data() + static_cast<std::size_t>(depth + 1) * b.words;
        for (int i = next; i <= b.n_blocks - k + depth; ++i) {
            if (!draw_credit()) return false;
            const std::uint64_t* row = b.row(i);
            int cnt = 0;
            for (int w = 0; w < b.words; ++w) {
                out[w] = cur[w] | row[w];
                cnt += std::popcount(out[w]);
            }
            if (depth + 1 == k) {
                atomic_min(best, cnt);
            } else if (cnt < best.load(std::memory_order_relaxed)) {
                if (!dfs(i + 1, depth + 1)) return false;
            }
        }
        return true;
    }
};

}  // namespace

int min_union_size_parallel(const BlockBitsets& b, int k, std::uint64_t budget) {
    if (k < 1 || k > b.n_blocks)
        throw Error(Errc::KOutOfRange, "k=" + std::to_string(k) + " outside 1.." +
                                           std::to_string(b.n_blocks));

    std::atomic<int> best{first_k_union(b, k)};
    std::atomic<std::uint64_t> pool{budget};
    std::atomic<bool> exhausted{false};
    const int top = b.n_blocks - k;  // last admissible first index

#ifdef _OPENMP
#pragma omp parallel
    {
        Worker w(b, k, best, pool, exhausted);
#pragma omp for schedule(dynamic, 1)
        for (int i = 0; i <= top; ++i) {
            if (exhausted.load(std::memory_order_relaxed)) continue;
            // seed depth 1 with block i, then walk its subtree
            if (!w.draw_credit()) continue;
            std::uint64_t* out = w.levels.data() + w.b.words;
            const std::uint64_t* row = b.row(i);
            int cnt = 0;
            for (int wd = 0; wd < b.words; ++wd) {
                out[wd] = row[wd];
                cnt += std::popcount(out[wd]);
            }
            if (k == 1) {
                atomic_min(best, cnt);
            } else if (cnt < best.load(std::memory_order_relaxed)) {
                w.dfs(i + 1, 1);
            }
        }
    }
#else
    {
        Worker w(b, k, best, pool, exhausted);
        (void)w.dfs(0, 0);
    }
#endif

    if (exhausted.load()) throw SizeLimitExceeded(budget);
    return best.load();
}

int min_union_size(const BlockBitsets& b, int k, std::uint64_t budget) {
#ifdef _OPENMP
    // parallel pays off once the choice tree has some width
    if (b.n_blocks - k >= 4 && k >= 2) return min_union_size_parallel(b, k, budget);
#endif
    return min_union_size_serial(b, k, budget);
}

}  // namespace fr
