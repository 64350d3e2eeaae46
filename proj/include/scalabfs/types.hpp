#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace scalabfs {

using VertexId = std::uint32_t;   // vertex ids are 32-bit (S_v = 32 bits)
using EdgeIndex = std::uint64_t;  // offsets are 64-bit
using Level = std::uint32_t;

// Sentinel for unreachable vertices.
inline constexpr Level kUnreached = std::numeric_limits<Level>::max();

/// Malformed textual or binary input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid parameter or configuration combination.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Internal inconsistency detected during simulation (indicates a bug,
/// e.g. a memory request outside the placed data range).
class SimFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace scalabfs
