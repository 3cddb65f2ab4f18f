#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "fr/designs.hpp"
#include "fr/errors.hpp"
#include "fr/graphs.hpp"
#include "fr/incidence.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using fr::Errc;
using fr::Error;
using fr::FrCode;
using fr::LatinSquare;

TEST_CASE("steiner triple systems have the right shape and pair coverage") {
    for (int theta : {7, 9, 13, 15, 19, 21, 25}) {
        CAPTURE(theta);
        FrCode c = fr::steiner_triple_system(theta);
        CHECK(c.theta == theta);
        CHECK(c.alpha == 3);
        CHECK(c.rho == (theta - 1) / 2);
        CHECK(c.n == theta * (theta - 1) / 6);
        CHECK(fr::is_steiner_system(c));
    }

    try {
        (void)fr::steiner_triple_system(8);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InadmissibleOrder);
    }
    CHECK_THROWS_AS((void)fr::steiner_triple_system(11), Error);
    CHECK_THROWS_AS((void)fr::steiner_triple_system(3), Error);
}

TEST_CASE("sts(7) is a (7,3,3) code like the Fano plane") {
    FrCode c = fr::steiner_triple_system(7);
    CHECK(c.n == 7);
    CHECK(c.alpha == 3);
    CHECK(c.rho == 3);
    CHECK(fr::is_steiner_system(fixtures::fano_733()));
}

TEST_CASE("is_steiner_system rejects non-Steiner codes") {
    CHECK_FALSE(fr::is_steiner_system(fr::graph_to_fr(fr::cycle_graph(5))));
    CHECK_FALSE(fr::is_steiner_system(fixtures::union_18_3_3()));
}

TEST_CASE("arc search matches unpruned enumeration on small Steiner systems") {
    for (int theta : {7, 9, 13, 15}) {
        CAPTURE(theta);
        FrCode c = fr::steiner_triple_system(theta);
        int rho = c.rho;
        auto pruned = fr::maximal_arc_search(c, rho + 1);
        auto brute = oracles::arc_brute(c, rho + 1);
        CHECK(pruned.has_value() == brute.has_value());
        if (pruned && brute) CHECK(*pruned == *brute);  // both lexicographically least
        // nonempty arcs of the wrong size cannot exist
        if (rho >= 2) CHECK_FALSE(fr::maximal_arc_search(c, rho).has_value());
    }
}

TEST_CASE("fano arcs are the block complements") {
    FrCode fano = fixtures::fano_733();
    auto arc = fr::maximal_arc_search(fano, 4);
    REQUIRE(arc.has_value());
    CHECK(*arc == std::vector<int>{1, 2, 3, 6});  // least complement of a block
    CHECK(*arc == *oracles::arc_brute(fano, 4));
}

TEST_CASE("pg32 sts(15) has an arc, the Bose instance does not") {
    FrCode pg = fixtures::pg32_sts15();
    CHECK(fr::is_steiner_system(pg));
    CHECK(pg.rho == 7);
    auto arc = fr::maximal_arc_search(pg, 8);
    REQUIRE(arc.has_value());
    // every block must meet the arc in 0 or 2 points
    std::set<int> chosen(arc->begin(), arc->end());
    for (const auto& b : pg.structure.blocks) {
        int hits = 0;
        for (int p : b) hits += chosen.count(p);
        CHECK((hits == 0 || hits == 2));
    }

    CHECK_FALSE(fr::maximal_arc_search(fr::steiner_triple_system(15), 8).has_value());
}

TEST_CASE("arc search requires a Steiner system") {
    try {
        (void)fr::maximal_arc_search(fr::graph_to_fr(fr::cycle_graph(5)), 3);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotSteiner);
    }
}

TEST_CASE("affine codes: parameters and parallel classes") {
    auto a223 = fr::affine_fr_code(2, 2, 3);
    CHECK(a223.code.n == 6);
    CHECK(a223.code.alpha == 2);
    CHECK(a223.code.rho == 3);
    CHECK(a223.code.theta == 4);
    CHECK(a223.parallel_classes.size() == 3);

    auto a324 = fr::affine_fr_code(3, 2, 4);
    CHECK(a324.code.n == 12);
    CHECK(a324.code.alpha == 3);
    CHECK(a324.code.rho == 4);
    CHECK(a324.code.theta == 9);
    // AG(2,3) with all four classes is an S(2,3,9)
    CHECK(fr::is_steiner_system(a324.code));

    CHECK_THROWS_AS((void)fr::affine_fr_code(4, 2, 3), Error);   // not prime
    CHECK_THROWS_AS((void)fr::affine_fr_code(2, 2, 4), Error);   // rho out of range
    CHECK_THROWS_AS((void)fr::affine_fr_code(2, 1, 1), Error);   // m too small
}

TEST_CASE("affine blocks: disjoint within a class, q^(m-2) across classes") {
    for (auto [q, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
        CAPTURE(q);
        CAPTURE(m);
        auto built = fr::affine_fr_code(q, m, 3);
        const auto& blocks = built.code.structure.blocks;
        long long expected_cross = 1;
        for (int t = 0; t < m - 2; ++t) expected_cross *= q;
        for (std::size_t ci = 0; ci < built.parallel_classes.size(); ++ci)
            for (std::size_t cj = ci; cj < built.parallel_classes.size(); ++cj)
                for (int bi : built.parallel_classes[ci])
                    for (int bj : built.parallel_classes[cj]) {
                        if (bi >= bj) continue;
                        std::vector<int> inter;
                        std::set_intersection(blocks[bi].begin(), blocks[bi].end(),
                                              blocks[bj].begin(), blocks[bj].end(),
                                              std::back_inserter(inter));
                        if (ci == cj)
                            CHECK(inter.empty());
                        else
                            CHECK(static_cast<long long>(inter.size()) == expected_cross);
                    }
    }
}

TEST_CASE("affine side condition") {
    CHECK(fr::satisfies_affine_side_condition(3, 2, 4));   // q>m, rho>m
    CHECK_FALSE(fr::satisfies_affine_side_condition(3, 2, 2));
    CHECK(fr::satisfies_affine_side_condition(2, 2, 2));   // q<=m, rho<=m
    CHECK_FALSE(fr::satisfies_affine_side_condition(2, 3, 7));
}

TEST_CASE("mols: construction, orthogonality, net code") {
    auto m3 = fr::mols_prime(3);
    REQUIRE(m3.size() == 2);
    CHECK(fr::are_orthogonal(m3[0], m3[1]));
    CHECK_FALSE(fr::are_orthogonal(m3[0], m3[0]));

    auto m5 = fr::mols_prime(5);
    REQUIRE(m5.size() == 4);
    for (std::size_t i = 0; i < m5.size(); ++i)
        for (std::size_t j = i + 1; j < m5.size(); ++j) CHECK(fr::are_orthogonal(m5[i], m5[j]));

    CHECK(fr::mols_prime(2).size() == 1);
    CHECK_THROWS_AS((void)fr::mols_prime(6), Error);

    FrCode net = fr::mols_fr_code(m5, 4);
    CHECK(net.n == 20);
    CHECK(net.alpha == 5);
    CHECK(net.rho == 4);
    CHECK(net.theta == 25);

    // rho = 1 gives N disjoint blocks partitioning the cells
    FrCode single = fr::mols_fr_code(m3, 1);
    CHECK(single.n == 3);
    CHECK(single.rho == 1);
    std::set<int> all;
    for (const auto& b : single.structure.blocks) all.insert(b.begin(), b.end());
    CHECK(all.size() == 9);

    CHECK_THROWS_AS((void)fr::mols_fr_code(m5, 5), Error);  // rho out of range
    std::vector<LatinSquare> same = {m3[0], m3[0]};
    try {
        (void)fr::mols_fr_code(same, 2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotOrthogonal);
    }
}

TEST_CASE("mols net: any two blocks from different classes share one cell") {
    FrCode net = fr::mols_fr_code(fr::mols_prime(5), 3);
    const auto& blocks = net.structure.blocks;
    for (int bi = 0; bi < net.n; ++bi)
        for (int bj = bi + 1; bj < net.n; ++bj) {
            std::vector<int> inter;
            std::set_intersection(blocks[bi].begin(), blocks[bi].end(), blocks[bj].begin(),
                                  blocks[bj].end(), std::back_inserter(inter));
            if (bi / 5 == bj / 5)
                CHECK(inter.empty());
            else
                CHECK(inter.size() == 1);
        }
}

TEST_CASE("prime-power orders arrive by ingestion: three mols of order 4") {
    auto squares = fr::latin_squares_from_json(R"({"order":4,"squares":[
        [[1,2,3,4],[2,1,4,3],[3,4,1,2],[4,3,2,1]],
        [[1,2,3,4],[3,4,1,2],[4,3,2,1],[2,1,4,3]],
        [[1,2,3,4],[4,3,2,1],[2,1,4,3],[3,4,1,2]]]})");
    REQUIRE(squares.size() == 3);
    FrCode net = fr::mols_fr_code(squares, 3);
    CHECK(net.n == 12);
    CHECK(net.alpha == 4);
    CHECK(net.rho == 3);
    CHECK(net.theta == 16);
    // the net file-size law at prime-power order
    CHECK(fr::is_resolvable(net).has_value());
}

TEST_CASE("latin square json ingestion") {
    auto squares = fr::latin_squares_from_json(
        R"({"order":3,"squares":[[[1,2,3],[2,3,1],[3,1,2]],[[1,2,3],[3,1,2],[2,3,1]]]})");
    REQUIRE(squares.size() == 2);
    CHECK(fr::are_orthogonal(squares[0], squares[1]));
    CHECK(fr::mols_fr_code(squares, 2).n == 6);

    CHECK_THROWS_AS((void)fr::latin_squares_from_json(R"({"order":2})"), Error);
    // a row that is not a permutation
    CHECK_THROWS_AS(
        (void)fr::latin_squares_from_json(R"({"order":2,"squares":[[[1,1],[2,2]]]})"), Error);
}

TEST_CASE("resolvability search") {
    auto a223 = fr::affine_fr_code(2, 2, 3);
    auto design = fr::is_resolvable(a223.code);
    REQUIRE(design.has_value());
    CHECK(design->parallel_classes.size() == 3);
    CHECK(design->parallel_classes == a223.parallel_classes);

    // 3 does not divide 7: precondition fails, none
    CHECK_FALSE(fr::is_resolvable(fixtures::fano_733()).has_value());

    FrCode net = fr::mols_fr_code(fr::mols_prime(3), 2);
    auto net_design = fr::is_resolvable(net);
    REQUIRE(net_design.has_value());
    std::vector<std::vector<int>> expected = {{0, 1, 2}, {3, 4, 5}};
    CHECK(net_design->parallel_classes == expected);

    // sts(9) = AG(2,3) is resolvable; each class has 3 blocks
    auto sts9 = fr::is_resolvable(fr::steiner_triple_system(9));
    REQUIRE(sts9.has_value());
    CHECK(sts9->parallel_classes.size() == 4);

    // a parallel class of the Petersen code would be an independent set of
    // five vertices covering every edge; the largest independent set has four
    auto petersen = fr::is_resolvable(fr::graph_to_fr(fr::petersen_graph()));
    CHECK_FALSE(petersen.has_value());
}
