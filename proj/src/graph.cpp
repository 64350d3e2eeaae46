#include "scalabfs/graph.hpp"

#include <algorithm>

namespace scalabfs {

namespace {

// Counting-sort pass used for both directions: bucket `keys[i] -> vals[i]`
// into offset/edge arrays, then sort each list ascending.
void fill_adjacency(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                    bool by_source, std::vector<EdgeIndex>& offsets, std::vector<VertexId>& adj) {
    offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : edges) offsets[(by_source ? u : v) + 1]++;
    for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];

    adj.resize(edges.size());
    std::vector<EdgeIndex> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [u, v] : edges) {
        VertexId key = by_source ? u : v;
        VertexId val = by_source ? v : u;
        adj[cursor[key]++] = val;
    }
    for (VertexId v = 0; v < n; ++v)
        std::sort(adj.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
                  adj.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
}

}  // namespace

Graph build_graph(const EdgeList& e) {
    if (!e.directed) throw ConfigError("build_graph: edge list must be directed");
    Graph g;
    g.num_vertices = e.num_vertices;
    g.num_edges = e.edges.size();
    for (const auto& [u, v] : e.edges) {
        if (u >= e.num_vertices || v >= e.num_vertices)
            throw ConfigError("build_graph: edge endpoint out of range");
    }
    fill_adjacency(g.num_vertices, e.edges, /*by_source=*/true, g.csr_offsets, g.csr_edges);
    fill_adjacency(g.num_vertices, e.edges, /*by_source=*/false, g.csc_offsets, g.csc_edges);
    return g;
}

}  // namespace scalabfs
