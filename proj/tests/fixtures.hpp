// Shared construction fixtures for the test suites.

#ifndef FR_TESTS_FIXTURES_HPP
#define FR_TESTS_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "fr/designs.hpp"
#include "fr/graphs.hpp"
#include "fr/incidence.hpp"

namespace fixtures {

// The (7,3,3) code on points 1..7 (the Fano plane).
inline fr::FrCode fano_733() {
    fr::IncidenceStructure s;
    s.point_ids = {1, 2, 3, 4, 5, 6, 7};
    s.blocks = {{1, 2, 4}, {1, 3, 7}, {1, 5, 6}, {2, 3, 5}, {2, 6, 7}, {3, 4, 6}, {4, 5, 7}};
    return fr::validate_fr(std::move(s));
}

// The 18-block (18,3,3) code printed as the disjoint union of two (9,3,3)
// codes; minimum distance 5 at file size 17.
inline fr::FrCode union_18_3_3() {
    fr::IncidenceStructure s;
    s.point_ids.resize(18);
    for (int i = 0; i < 18; ++i) s.point_ids[i] = i + 1;
    s.blocks = {
        {1, 4, 7},    {2, 5, 9},    {3, 6, 8},    {10, 13, 16}, {11, 14, 18}, {12, 15, 17},
        {1, 6, 9},    {2, 4, 8},    {3, 5, 7},    {10, 15, 18}, {11, 13, 17}, {12, 14, 16},
        {1, 5, 8},    {2, 6, 7},    {3, 4, 9},    {10, 14, 17}, {11, 15, 16}, {12, 13, 18},
    };
    return fr::validate_fr(std::move(s));
}

// An (8,3,2) code from a 3-regular graph on 8 vertices (girth 4).
inline fr::FrCode circulant_832() {
    return fr::graph_to_fr(fr::circulant_graph(8, {1, 4}));
}

// STS(15) with a maximal arc: points are the nonzero vectors of a 4-dim
// binary space, blocks the triples summing to zero.
inline fr::FrCode pg32_sts15() {
    fr::IncidenceStructure s;
    s.point_ids.resize(15);
    for (int i = 0; i < 15; ++i) s.point_ids[i] = i + 1;
    for (int x = 1; x <= 15; ++x)
        for (int y = x + 1; y <= 15; ++y) {
            int z = x ^ y;
            if (z > y) s.blocks.push_back({x, y, z});
        }
    return fr::validate_fr(std::move(s));
}

// Construction fixtures small enough for full profile sweeps.
inline std::vector<std::pair<std::string, fr::FrCode>> sweep_fixtures() {
    std::vector<std::pair<std::string, fr::FrCode>> out;
    out.emplace_back("fano(7,3,3)", fano_733());
    out.emplace_back("cycle5", fr::graph_to_fr(fr::cycle_graph(5)));
    out.emplace_back("cycle8", fr::graph_to_fr(fr::cycle_graph(8)));
    out.emplace_back("complete5", fr::graph_to_fr(fr::complete_graph(5)));
    out.emplace_back("petersen", fr::graph_to_fr(fr::petersen_graph()));
    out.emplace_back("circulant(8,{1,4})", circulant_832());
    out.emplace_back("turan(6,3)", fr::graph_to_fr(fr::turan_graph(6, 3)));
    out.emplace_back("turan(8,2)", fr::graph_to_fr(fr::turan_graph(8, 2)));
    out.emplace_back("turan(8,4)", fr::graph_to_fr(fr::turan_graph(8, 4)));
    out.emplace_back("pg-incidence(2)", fr::graph_to_fr(fr::projective_plane_incidence_graph(2)));
    out.emplace_back("sts(9)", fr::steiner_triple_system(9));
    out.emplace_back("affine(2,2,3)", fr::affine_fr_code(2, 2, 3).code);
    out.emplace_back("affine(3,2,4)", fr::affine_fr_code(3, 2, 4).code);
    out.emplace_back("affine(2,3,7)", fr::affine_fr_code(2, 3, 7).code);
    out.emplace_back("mols(3,2)", fr::mols_fr_code(fr::mols_prime(3), 2));
    out.emplace_back("dual(petersen)", fr::dual(fr::graph_to_fr(fr::petersen_graph())));
    out.emplace_back("union(fano,fano)", fr::disjoint_union(fano_733(), fano_733()));
    return out;
}

}  // namespace fixtures

#endif  // FR_TESTS_FIXTURES_HPP
