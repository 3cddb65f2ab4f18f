#include "fr/filesize.hpp"

#include <string>

#include "fr/errors.hpp"
#include "fr/intmath.hpp"

namespace fr {

int supported_file_size(const FrCode& c, int k, std::uint64_t budget) {
    if (k < 1 || k > c.n)
        throw Error(Errc::KOutOfRange,
                    "k=" + std::to_string(k) + " outside 1.." + std::to_string(c.n));
    return min_union_size(pack_blocks(c), k, budget);
}

FileSizeProfile file_size_profile(const FrCode& c, std::uint64_t budget) {
    if (binomial_capped(c.n, c.n / 2, budget) > budget) throw SizeLimitExceeded(budget);

    FileSizeProfile p;
    p.n = c.n;
    p.alpha = c.alpha;
    p.rho = c.rho;
    p.theta = c.theta;
    BlockBitsets bits = pack_blocks(c);
    for (int k = 1; k <= c.n; ++k) {
        int m = min_union_size(bits, k, budget);
        p.m_values.push_back(m);
        p.n_values.push_back(c.theta - m);
    }
    return p;
}

namespace {

std::vector<int> phi_all(int n, int alpha, int rho) {
    std::vector<int> phi(n);
    phi[0] = alpha;
    for (int k = 1; k < n; ++k) {
        long long num = static_cast<long long>(rho) * phi[k - 1] - static_cast<long long>(k) * alpha;
        phi[k] = phi[k - 1] + alpha - static_cast<int>(ceil_div(num, n - k));
    }
    return phi;
}

int derive_theta(int n, int alpha, int rho) {
    long long prod = static_cast<long long>(n) * alpha;
    if (prod % rho != 0)
        throw Error(Errc::BadParameters, "n*alpha not divisible by rho");
    return static_cast<int>(prod / rho);
}

std::vector<int> psi_all(int n, int alpha, int rho) {
    const int theta = derive_theta(n, alpha, rho);
    std::vector<int> psi(theta);
    psi[0] = rho;
    for (int l = 1; l < theta; ++l) {
        long long num = static_cast<long long>(alpha) * psi[l - 1] - static_cast<long long>(l) * rho;
        psi[l] = psi[l - 1] + rho - static_cast<int>(ceil_div(num, theta - l));
    }
    return psi;
}

}  // namespace

int phi_bound(int n, int alpha, int rho, int k) {
    if (k < 1 || k > n)
        throw Error(Errc::KOutOfRange, "k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
    return phi_all(n, alpha, rho)[k - 1];
}

std::vector<int> phi_sequence(int n, int alpha, int rho) { return phi_all(n, alpha, rho); }

int psi_bound(int n, int alpha, int rho, int ell) {
    const int theta = derive_theta(n, alpha, rho);
    if (ell < 1 || ell > theta)
        throw Error(Errc::EllOutOfRange,
                    "ell=" + std::to_string(ell) + " outside 1.." + std::to_string(theta));
    return psi_all(n, alpha, rho)[ell - 1];
}

std::vector<int> psi_sequence(int n, int alpha, int rho) { return psi_all(n, alpha, rho); }

int dual_indicator_bound(int n, int alpha, int rho, int k) {
    if (k < 1 || k > n)
        throw Error(Errc::KOutOfRange, "k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
    int count = 0;
    for (int psi : psi_all(n, alpha, rho))
        if (k > n - psi) ++count;
    return count;
}

int file_size_from_dual(const FrCode& c, int k, const FileSizeProfile& dual_profile) {
    if (k < 1 || k > c.n)
        throw Error(Errc::KOutOfRange,
                    "k=" + std::to_string(k) + " outside 1.." + std::to_string(c.n));

    const int theta = c.theta;
    // N_j(dual) non-increasing in j, down to N_theta = 0
    if (k > dual_profile.complementary(1)) return theta;
    for (int j = 1; j < theta; ++j)
        if (dual_profile.complementary(j + 1) < k && k <= dual_profile.complementary(j))
            return theta - j;
    return 1;  // unreachable for well-formed profiles
}

int file_size_from_dual(const FrCode& c, int k, std::uint64_t budget) {
    return file_size_from_dual(c, k, file_size_profile(dual(c), budget));
}

}  // namespace fr
