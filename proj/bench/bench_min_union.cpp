// Compares the serial reference kernel against the OpenMP one on a few
// representative instances and prints a timing table.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fr/designs.hpp"
#include "fr/graphs.hpp"
#include "fr/incidence.hpp"
#include "fr/min_union.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void run_case(const std::string& name, const fr::FrCode& code, int k) {
    fr::BlockBitsets bits = fr::pack_blocks(code);

    auto t0 = std::chrono::steady_clock::now();
    int serial = fr::min_union_size_serial(bits, k);
    double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    int parallel = fr::min_union_size_parallel(bits, k);
    double t_parallel = seconds_since(t0);

    std::printf("%-28s k=%-3d M_k=%-4d serial %8.3f ms  parallel %8.3f ms  speedup %5.2fx%s\n",
                name.c_str(), k, serial, t_serial * 1e3, t_parallel * 1e3,
                t_parallel > 0 ? t_serial / t_parallel : 0.0,
                serial == parallel ? "" : "  MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel path falls back to serial\n");
#endif

    fr::FrCode pg3 = fr::graph_to_fr(fr::projective_plane_incidence_graph(3));
    run_case("pg-incidence q=3 (26,4,2)", pg3, 7);
    run_case("pg-incidence q=3 (26,4,2)", pg3, 10);

    fr::FrCode turan = fr::graph_to_fr(fr::turan_graph(8, 4));
    fr::FrCode turan_dual = fr::dual(turan);
    run_case("dual of turan(8,4) (24,2,6)", turan_dual, 12);

    fr::FrCode mols = fr::mols_fr_code(fr::mols_prime(7), 6);
    run_case("mols p=7 rho=6 (42,7,6)", mols, 6);

    fr::FrCode sts = fr::steiner_triple_system(19);
    run_case("sts(19) (57,3,9)", sts, 8);
    return 0;
}
