#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "scalabfs/types.hpp"

namespace scalabfs {

/// Vertex dispatcher topology: a full N x N crossbar (factors = [N]) or a
/// multi-layer crossbar decomposing N = C1 x ... x Ck. Layer l consists of
/// N/Cl switches of size Cl x Cl.
struct CrossbarTopology {
    std::uint32_t n_ports = 1;
    std::vector<std::uint32_t> factors;  // product must equal n_ports
    std::uint32_t fifo_depth = 16;

    static CrossbarTopology full(std::uint32_t n, std::uint32_t fifo_depth = 16);
    static CrossbarTopology layered(std::vector<std::uint32_t> factors, std::uint32_t fifo_depth = 16);

    std::uint32_t layers() const { return static_cast<std::uint32_t>(factors.size()); }
    void validate() const;  // throws ConfigError
};

enum class MessageKind : std::uint8_t { check, result };

struct DispatchMessage {
    VertexId vid = 0;         // routing key; delivered to port vid % N
    MessageKind kind = MessageKind::check;
    VertexId aux = 0;         // pull mode: the child vertex riding along a parent check
    std::uint32_t hop_count = 0;
};

struct DeliveredMessage {
    std::uint32_t port = 0;
    DispatchMessage msg;
};

/// Total FIFO count: sum over layers of (N/Cl) * Cl^2 = N * sum(Cl).
std::uint64_t fifo_count(const CrossbarTopology& t);

struct RouteHop {
    std::uint32_t layer = 0;    // 1-based
    std::uint32_t switch_id = 0;
    std::uint32_t output_port = 0;
};

/// The k-hop path a message takes. After layer l the message's group index
/// equals vid mod (C1*...*Cl); the final wire is vid mod N.
std::vector<RouteHop> route_path(const CrossbarTopology& t, VertexId vid, std::uint32_t input_port);

struct LutEstimate {
    std::uint64_t luts = 0;
    std::uint64_t fifo_luts = 0;
    bool feasible = false;
};

/// LUT cost of the dispatcher plus PEs: fifo_count * r_fifo + n_pe * r_pe,
/// compared against r_limit. For equal factors this matches the closed form
/// k * N^(1/k+1) * r_fifo + n_pe * r_pe.
LutEstimate lut_estimate(const CrossbarTopology& t, double r_fifo, std::uint32_t n_pe, double r_pe,
                         double r_limit);

/// Cycle-stepped dispatch fabric. Each switch holds one FIFO per
/// (input, output) crosspoint; every output forwards at most one message per
/// cycle, chosen round-robin with an offset that rotates each cycle, and a
/// message advances only when the downstream FIFO has a free slot.
/// Deterministic: identical injection sequences give identical delivery
/// sequences.
class DispatchFabric {
public:
    explicit DispatchFabric(CrossbarTopology t);

    const CrossbarTopology& topology() const { return topo_; }

    /// Places a message into its first-layer crosspoint FIFO. Returns false
    /// (and leaves the fabric unchanged) when that FIFO is full.
    bool try_inject(std::uint32_t input_port, const DispatchMessage& m);

    /// Advances one cycle; returns the messages leaving the last layer.
    std::vector<DeliveredMessage> step();

    bool idle() const { return in_flight_ == 0; }
    std::uint64_t injected() const { return injected_; }
    std::uint64_t delivered() const { return delivered_; }
    std::uint64_t in_flight() const { return in_flight_; }
    std::uint64_t cycles() const { return cycle_; }

private:
    struct Switch {
        std::uint32_t radix = 0;
        std::uint32_t occ_words = 0;
        // crosspoint FIFO (input c, output d) at index c*radix+d
        std::vector<std::deque<DispatchMessage>> fifos;
        // per-output bitmask of inputs with a pending message, for O(1)
        // round-robin scans instead of probing every crosspoint
        std::vector<std::uint64_t> occ;
        std::vector<std::uint32_t> nonempty;  // per output: count of pending inputs

        void mark(std::uint32_t in, std::uint32_t out, bool pending);
        // first pending input at or after `start` (cyclic); -1 if none
        int pick(std::uint32_t out, std::uint32_t start) const;
    };

    struct Layer {
        std::uint32_t factor = 0;
        std::uint32_t modulus_before = 1;  // C1*...*C(l-1)
        std::uint32_t modulus_after = 1;   // C1*...*Cl
        std::vector<Switch> switches;
    };

    // wire w entering layer `li` maps to (switch, input port)
    void wire_position(std::uint32_t li, std::uint32_t wire, std::uint32_t& sw, std::uint32_t& in) const;
    std::uint32_t next_wire(std::uint32_t li, std::uint32_t wire, std::uint32_t out) const;

    CrossbarTopology topo_;
    std::vector<Layer> layers_;
    std::uint64_t injected_ = 0, delivered_ = 0, in_flight_ = 0, cycle_ = 0;
};

}  // namespace scalabfs
