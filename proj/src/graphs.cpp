#include "fr/graphs.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <string>

#include "fr/errors.hpp"
#include "fr/intmath.hpp"

namespace fr {

std::vector<int> Graph::degrees() const {
    std::vector<int> d(vertex_count, 0);
    for (auto [u, v] : edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

namespace {

Graph from_edge_set(int n, std::set<std::pair<int, int>> es) {
    Graph g;
    g.vertex_count = n;
    g.edges.assign(es.begin(), es.end());
    return g;
}

std::pair<int, int> ordered(int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

}  // namespace

Graph turan_graph(int n, int r) {
    if (n < 2 || r < 2) throw Error(Errc::BadParameters, "need n >= 2 and r >= 2");
    if (n % r != 0)
        throw Error(Errc::NonDivisible, std::to_string(r) + " does not divide " + std::to_string(n));
    const int part = n / r;
    std::set<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / part != v / part) es.insert({u, v});
    return from_edge_set(n, std::move(es));
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error(Errc::BadParameters, "cycle needs n >= 3");
    std::set<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.insert(ordered(i, (i + 1) % n));
    return from_edge_set(n, std::move(es));
}

Graph complete_graph(int n) {
    if (n < 2) throw Error(Errc::BadParameters, "complete graph needs n >= 2");
    std::set<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.insert({u, v});
    return from_edge_set(n, std::move(es));
}

Graph petersen_graph() {
    std::set<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.insert(ordered(i, (i + 1) % 5));          // outer pentagon
        es.insert(ordered(5 + i, 5 + (i + 2) % 5));  // inner pentagram
        es.insert({i, i + 5});                       // spokes
    }
    return from_edge_set(10, std::move(es));
}

Graph circulant_graph(int n, const std::vector<int>& offsets) {
    if (n < 3) throw Error(Errc::BadParameters, "circulant needs n >= 3");
    std::set<int> seen;
    for (int off : offsets) {
        if (off < 1 || off > n / 2)
            throw Error(Errc::BadParameters,
                        "offset " + std::to_string(off) + " outside 1.." + std::to_string(n / 2));
        if (!seen.insert(off).second)
            throw Error(Errc::BadParameters, "repeated offset " + std::to_string(off));
    }
    std::set<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int off : offsets) es.insert(ordered(i, (i + off) % n));
    return from_edge_set(n, std::move(es));
}

Graph projective_plane_incidence_graph(int q) {
    if (!is_prime(q)) throw Error(Errc::NotPrime, std::to_string(q) + " is not prime");

    // normalized homogeneous triples over F_q: (1,a,b), (0,1,c), (0,0,1)
    std::vector<std::array<int, 3>> reps;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) reps.push_back({1, a, b});
    for (int c = 0; c < q; ++c) reps.push_back({0, 1, c});
    reps.push_back({0, 0, 1});

    const int m = static_cast<int>(reps.size());  // q^2+q+1 points, same count of lines
    std::set<std::pair<int, int>> es;
    for (int p = 0; p < m; ++p)
        for (int l = 0; l < m; ++l) {
            int dot = 0;
            for (int t = 0; t < 3; ++t) dot += reps[p][t] * reps[l][t];
            if (dot % q == 0) es.insert({p, m + l});
        }
    return from_edge_set(2 * m, std::move(es));
}

std::optional<int> girth(const Graph& g) {
    const auto adj = g.adjacency();
    const int n = g.vertex_count;
    int best = -1;

    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

FrCode graph_to_fr(const Graph& g) {
    const auto deg = g.degrees();
    if (g.vertex_count < 1 || g.edges.empty())
        throw Error(Errc::NotRegular, "graph has no edges");
    for (int v = 0; v < g.vertex_count; ++v)
        if (deg[v] != deg[0])
            throw Error(Errc::NotRegular, "vertex " + std::to_string(v) + " has degree " +
                                              std::to_string(deg[v]) + ", expected " +
                                              std::to_string(deg[0]));

    IncidenceStructure s;
    s.point_ids.resize(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) s.point_ids[e] = static_cast<int>(e);
    s.blocks.assign(g.vertex_count, {});
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        s.blocks[g.edges[e].first].push_back(static_cast<int>(e));
        s.blocks[g.edges[e].second].push_back(static_cast<int>(e));
    }
    return validate_fr(std::move(s));
}

}  // namespace fr
