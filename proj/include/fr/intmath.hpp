#ifndef FR_INTMATH_HPP
#define FR_INTMATH_HPP

#include <cstdint>

namespace fr {

// Ceiling of a/b for b > 0, exact for negative a as well.
inline long long ceil_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && (a > 0) == (b > 0)) ++q;
    return q;
}

// Floor of a/b for b > 0, exact for negative a as well.
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && (a > 0) != (b > 0)) --q;
    return q;
}

// C(n,k) saturated at `cap` (returns cap+1 once the value exceeds it), so
// budget checks never overflow.
inline std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    // running product of C(n,i) stays integral at every step
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (acc > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(acc);
}

// Smallest k >= 0 with k >= (sqrt(1+8x)-1)/2, i.e. the ceiling of that root.
inline int ceil_triangular_root(long long x) {
    int k = 0;
    while (static_cast<long long>(2 * k + 1) * (2 * k + 1) < 1 + 8 * x) ++k;
    return k;
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace fr

#endif  // FR_INTMATH_HPP
