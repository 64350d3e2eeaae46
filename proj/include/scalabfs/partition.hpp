#pragma once

#include <vector>

#include "scalabfs/graph.hpp"

namespace scalabfs {

/// Per-PE slice of the graph: full outgoing and incoming neighbor lists of
/// every vertex v with v mod Q == pe_id. Lists are indexed by the dense
/// local id v / Q; edge entries stay global because the dispatcher routes
/// on global vertex ids.
struct Subgraph {
    std::uint32_t pe_id = 0;
    VertexId owned_count = 0;
    std::vector<EdgeIndex> csr_offsets;  // size owned_count+1
    std::vector<VertexId> csr_edges;
    std::vector<EdgeIndex> csc_offsets;
    std::vector<VertexId> csc_edges;
};

struct PartitionPlan {
    std::uint32_t num_pes = 0;     // Q
    std::uint32_t num_pcs = 0;     // N_pc
    std::uint32_t pes_per_pg = 0;  // Q / N_pc
    std::vector<Subgraph> subgraphs;     // size Q
    std::vector<std::uint32_t> pe_to_pc;  // contiguous grouping: PE i -> PC i / pes_per_pg
};

/// The PE owning a vertex: vid mod q.
inline std::uint32_t owner_pe(VertexId vid, std::uint32_t q) { return vid % q; }

/// Dense local index of an owned vertex inside its subgraph.
inline VertexId local_index(VertexId vid, std::uint32_t q) { return vid / q; }

/// Horizontal partitioning: subgraph i holds the intact CSR and CSC lists
/// of every vertex it owns. Throws ConfigError unless q is a positive
/// multiple of n_pc. q > |V| is allowed (some subgraphs own nothing).
PartitionPlan partition_graph(const Graph& g, std::uint32_t q, std::uint32_t n_pc);

/// Bytes of offset + edge data placed on each PC (offsets 8 bytes each,
/// edge entries sv_bits/8 each).
std::vector<std::uint64_t> placement_bytes(const PartitionPlan& plan, std::uint32_t sv_bits = 32);

}  // namespace scalabfs
