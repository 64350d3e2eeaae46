#pragma once

#include <span>
#include <vector>

#include "scalabfs/edge_list.hpp"
#include "scalabfs/types.hpp"

namespace scalabfs {

/// Immutable CSR + CSC adjacency structure. CSC is the exact transpose of
/// CSR (multiplicities preserved) and every neighbor list is sorted
/// ascending, so serialization is canonical. Safe to share across threads
/// once built.
struct Graph {
    VertexId num_vertices = 0;
    EdgeIndex num_edges = 0;  // directed edge count
    std::vector<EdgeIndex> csr_offsets;  // size n+1
    std::vector<VertexId> csr_edges;     // outgoing neighbor lists
    std::vector<EdgeIndex> csc_offsets;  // size n+1
    std::vector<VertexId> csc_edges;     // incoming neighbor lists

    std::span<const VertexId> out_neighbors(VertexId v) const {
        return {csr_edges.data() + csr_offsets[v], csr_edges.data() + csr_offsets[v + 1]};
    }
    std::span<const VertexId> in_neighbors(VertexId v) const {
        return {csc_edges.data() + csc_offsets[v], csc_edges.data() + csc_offsets[v + 1]};
    }
    EdgeIndex out_degree(VertexId v) const { return csr_offsets[v + 1] - csr_offsets[v]; }
    EdgeIndex in_degree(VertexId v) const { return csc_offsets[v + 1] - csc_offsets[v]; }

    friend bool operator==(const Graph&, const Graph&) = default;
};

/// Builds CSR and CSC from a directed edge list. Throws ConfigError if the
/// list is not directed.
Graph build_graph(const EdgeList& e);

}  // namespace scalabfs
