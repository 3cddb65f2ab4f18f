#ifndef FR_FILESIZE_HPP
#define FR_FILESIZE_HPP

#include <cstdint>
#include <vector>

#include "fr/incidence.hpp"
#include "fr/min_union.hpp"

namespace fr {

// Exact supported file sizes M_1..M_n and their complements N_k = theta - M_k.
struct FileSizeProfile {
    int n = 0;
    int alpha = 0;
    int rho = 0;
    int theta = 0;
    std::vector<int> m_values;
    std::vector<int> n_values;

    int m(int k) const { return m_values[k - 1]; }
    int complementary(int k) const { return n_values[k - 1]; }
};

// Exact minimum, over all k-subsets of blocks, of the size of their union.
int supported_file_size(const FrCode& c, int k, std::uint64_t budget = kDefaultBudget);

// All M_k and N_k. Throws SizeLimitExceeded when C(n, n/2) exceeds the budget
// before any work starts.
FileSizeProfile file_size_profile(const FrCode& c, std::uint64_t budget = kDefaultBudget);

// Recursive file-size bound: phi(1) = alpha,
// phi(k+1) = phi(k) + alpha - ceil((rho*phi(k) - k*alpha)/(n-k)).
int phi_bound(int n, int alpha, int rho, int k);
std::vector<int> phi_sequence(int n, int alpha, int rho);

// Dual-side recursion over ell = 1..theta: psi(1) = rho,
// psi(ell+1) = psi(ell) + rho - ceil((alpha*psi(ell) - ell*rho)/(theta-ell)).
int psi_bound(int n, int alpha, int rho, int ell);
std::vector<int> psi_sequence(int n, int alpha, int rho);

// Indicator-sum file-size bound derived from psi:
// sum over ell of [k > n - psi(ell)].
int dual_indicator_bound(int n, int alpha, int rho, int k);

// M_k computed solely from the dual's complementary profile: the value
// theta - j with N_{j+1}(dual) < k <= N_j(dual). The second form reuses a
// precomputed dual profile.
int file_size_from_dual(const FrCode& c, int k, std::uint64_t budget = kDefaultBudget);
int file_size_from_dual(const FrCode& c, int k, const FileSizeProfile& dual_profile);

}  // namespace fr

#endif  // FR_FILESIZE_HPP
