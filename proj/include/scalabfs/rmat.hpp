#pragma once

#include <cstdint>

#include "scalabfs/edge_list.hpp"

namespace scalabfs {

struct RmatParams {
    std::uint32_t scale = 18;
    std::uint32_t avg_degree = 16;
    double a = 0.57;
    double b = 0.19;
    double c = 0.19;
    std::uint64_t seed = 1;
};

/// Generates a Kronecker/R-MAT undirected edge list with 2^scale vertices
/// and 2^scale * avg_degree edges. Quadrant draws for edge i come from a
/// counter-based PRNG keyed by (seed, i), so generation order does not
/// affect the result. Duplicates and self-loops are kept.
/// Throws ConfigError if a+b+c > 1, scale < 1 or avg_degree < 1.
EdgeList generate_rmat(const RmatParams& p);

}  // namespace scalabfs
