#pragma once

#include <istream>
#include <ostream>
#include <utility>
#include <vector>

#include "scalabfs/types.hpp"

namespace scalabfs {

struct EdgeList {
    VertexId num_vertices = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    bool directed = true;

    friend bool operator==(const EdgeList&, const EdgeList&) = default;
};

/// Parses a text edge list: one "src dst" pair per line, '#' comments,
/// optional "# vertices N" header overriding the vertex count (otherwise
/// 1 + max id). Throws ParseError with the offending line number on
/// malformed lines or ids >= a declared vertex count.
EdgeList load_edge_list(std::istream& in, bool directed = true);

void write_edge_list(std::ostream& out, const EdgeList& e);

/// Converts an undirected edge list to a directed one: every non-loop
/// edge (u,v) yields (u,v) and (v,u); a loop yields a single edge.
EdgeList to_directed(const EdgeList& e);

/// Removes duplicate (src,dst) pairs, keeping first occurrences in order.
EdgeList dedup_edges(const EdgeList& e);

}  // namespace scalabfs
