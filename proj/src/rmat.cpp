#include "scalabfs/rmat.hpp"

namespace scalabfs {

namespace {

// splitmix64; the per-edge stream is keyed by (seed, edge index) so edges
// can be generated in any order.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct EdgeRng {
    std::uint64_t state;
    EdgeRng(std::uint64_t seed, std::uint64_t edge_index)
        : state(mix64(seed ^ mix64(edge_index + 1))) {}
    double next_unit() {
        state = mix64(state);
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    }
};

// Seeded bijection on [0, 2^scale). Kronecker recursion correlates an id's
// bits with its degree, so raw ids would make `vid mod Q` intervals wildly
// unbalanced; Graph500 generators likewise shuffle vertex ids. Odd
// multiplies, right xorshifts and adds are each invertible mod 2^scale.
struct VertexScramble {
    std::uint32_t shift;
    std::uint64_t mask, mul1, mul2;

    VertexScramble(std::uint32_t scale, std::uint64_t seed)
        : shift(scale / 2 + 1),
          mask((std::uint64_t{1} << scale) - 1),
          mul1(mix64(seed ^ 0xd6e8feb86659fd93ULL) | 1),
          mul2(mix64(seed + 0x2545f4914f6cdd1dULL) | 1) {}

    std::uint64_t operator()(std::uint64_t v) const {
        v ^= v >> shift;
        v = (v * mul1) & mask;
        v ^= v >> shift;
        v = (v * mul2) & mask;
        v ^= v >> shift;
        return v;
    }
};

}  // namespace

EdgeList generate_rmat(const RmatParams& p) {
    if (p.scale < 1) throw ConfigError("generate_rmat: scale must be >= 1");
    if (p.avg_degree < 1) throw ConfigError("generate_rmat: avg_degree must be >= 1");
    if (p.a < 0 || p.b < 0 || p.c < 0 || p.a + p.b + p.c > 1.0)
        throw ConfigError("generate_rmat: probabilities must be non-negative and sum to <= 1");

    const std::uint64_t n = std::uint64_t{1} << p.scale;
    const std::uint64_t m = n * p.avg_degree;

    EdgeList out;
    out.num_vertices = static_cast<VertexId>(n);
    out.directed = false;
    out.edges.resize(m);

    const double ab = p.a + p.b;
    const double abc = p.a + p.b + p.c;
    const VertexScramble scramble(p.scale, p.seed);

    for (std::uint64_t i = 0; i < m; ++i) {
        EdgeRng rng(p.seed, i);
        std::uint64_t src = 0, dst = 0;
        for (std::uint32_t level = 0; level < p.scale; ++level) {
            double u = rng.next_unit();
            src <<= 1;
            dst <<= 1;
            if (u < p.a) {
                // top-left quadrant: no bits set
            } else if (u < ab) {
                dst |= 1;
            } else if (u < abc) {
                src |= 1;
            } else {
                src |= 1;
                dst |= 1;
            }
        }
        out.edges[i] = {static_cast<VertexId>(scramble(src)), static_cast<VertexId>(scramble(dst))};
    }
    return out;
}

}  // namespace scalabfs
