#ifndef FR_GRAPHS_HPP
#define FR_GRAPHS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "fr/incidence.hpp"

namespace fr {

// Simple undirected graph; edges are distinct (u,v) pairs with u < v, kept
// sorted lexicographically. Vertex ids run 0..vertex_count-1.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency() const;
};

// Complete multipartite graph with r equal parts of size n/r; every vertex
// has degree (r-1)*n/r.
Graph turan_graph(int n, int r);

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();

// Connects i to i+off (mod n) for each offset; offsets distinct, in 1..n/2.
Graph circulant_graph(int n, const std::vector<int>& offsets);

// Bipartite point/line incidence graph of the projective plane of prime
// order q: 2(q^2+q+1) vertices, (q+1)-regular, girth 6.
Graph projective_plane_incidence_graph(int q);

// Length of the shortest cycle; nullopt for acyclic graphs.
std::optional<int> girth(const Graph& g);

// Vertices become blocks, edges become points (edges numbered 0..|E|-1 in
// sorted order), yielding an (n, alpha, 2)-FR code from an alpha-regular
// graph. Error(NotRegular) if degrees are not uniform and positive.
FrCode graph_to_fr(const Graph& g);

}  // namespace fr

#endif  // FR_GRAPHS_HPP
