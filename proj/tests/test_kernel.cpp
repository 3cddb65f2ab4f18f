#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fr/errors.hpp"
#include "fr/graphs.hpp"
#include "fr/min_union.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

TEST_CASE("serial kernel equals unpruned enumeration on every fixture") {
    for (const auto& [name, c] : fixtures::sweep_fixtures()) {
        if (c.n > 12) continue;  // keep the unpruned side cheap
        CAPTURE(name);
        fr::BlockBitsets bits = fr::pack_blocks(c);
        for (int k = 1; k <= c.n; ++k)
            CHECK(fr::min_union_size_serial(bits, k) == oracles::min_union_brute(c, k));
    }
}

TEST_CASE("parallel kernel is bit-identical to the serial reference") {
    for (const auto& [name, c] : fixtures::sweep_fixtures()) {
        CAPTURE(name);
        fr::BlockBitsets bits = fr::pack_blocks(c);
        for (int k = 1; k <= c.n; ++k)
            CHECK(fr::min_union_size_parallel(bits, k) == fr::min_union_size_serial(bits, k));
    }

    // a couple of wider instances
    for (const auto& c : {fr::dual(fr::graph_to_fr(fr::turan_graph(8, 4))),
                          fr::graph_to_fr(fr::projective_plane_incidence_graph(3))}) {
        fr::BlockBitsets bits = fr::pack_blocks(c);
        for (int k = 2; k <= c.n; k += 5)
            CHECK(fr::min_union_size_parallel(bits, k) == fr::min_union_size_serial(bits, k));
    }
}

TEST_CASE("kernel rejects out-of-range k") {
    fr::BlockBitsets bits = fr::pack_blocks(fixtures::fano_733());
    CHECK_THROWS_AS((void)fr::min_union_size_serial(bits, 0), fr::Error);
    CHECK_THROWS_AS((void)fr::min_union_size_serial(bits, 8), fr::Error);
    CHECK_THROWS_AS((void)fr::min_union_size_parallel(bits, 0), fr::Error);
}

TEST_CASE("exhausted budgets raise SizeLimitExceeded") {
    fr::FrCode c = fr::graph_to_fr(fr::projective_plane_incidence_graph(3));
    fr::BlockBitsets bits = fr::pack_blocks(c);
    CHECK_THROWS_AS((void)fr::min_union_size_serial(bits, 10, 50), fr::SizeLimitExceeded);
    CHECK_THROWS_AS((void)fr::min_union_size_parallel(bits, 10, 50), fr::SizeLimitExceeded);
    // a generous budget succeeds
    CHECK(fr::min_union_size_serial(bits, 10) == fr::min_union_size_parallel(bits, 10));
}
