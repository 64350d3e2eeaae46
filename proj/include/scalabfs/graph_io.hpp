#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "scalabfs/graph.hpp"

namespace scalabfs {

// Binary graph format (little-endian):
//   magic "SBFS", version u32 = 1, n u64, m u64,
//   csr_offsets (n+1) x u64, csr_edges m x u32,
//   csc_offsets (n+1) x u64, csc_edges m x u32.

inline constexpr std::uint32_t kGraphFormatVersion = 1;

void serialize(std::ostream& out, const Graph& g);

/// Throws ParseError on bad magic, version mismatch, truncation, or
/// invariant violations (non-monotone offsets, out-of-range ids).
Graph deserialize(std::istream& in);

void save_graph(const std::string& path, const Graph& g);
Graph load_graph(const std::string& path);

/// Size in bytes of the serialized form.
std::uint64_t serialized_size(const Graph& g);

}  // namespace scalabfs
