#pragma once

#include <string>
#include <vector>

#include "scalabfs/bfs.hpp"
#include "scalabfs/graph.hpp"
#include "scalabfs/partition.hpp"

namespace scalabfs {

enum class Placement { partitioned, baseline };

const char* to_string(Placement p);
Placement parse_placement(const std::string& name);

/// Architecture parameters of one simulation run. Defaults mirror the
/// evaluated machine: 32 PCs at 90 MHz, 2 PEs per PC, 13.27 GB/s per PC,
/// FIFO depth 16, 32-bit vertices.
struct SimConfig {
    std::uint32_t n_pc = 32;
    std::uint32_t pes_per_pc = 2;
    double freq_mhz = 90.0;
    std::uint32_t sv_bits = 32;
    double bw_max_gbps_per_pc = 13.27;
    std::uint32_t hbm_latency_cycles = 128;
    std::vector<std::uint32_t> crossbar_factors;  // empty = full crossbar over all PEs
    std::uint32_t fifo_depth = 16;
    ModePolicy mode_policy{};
    Placement placement = Placement::partitioned;
    double cross_pc_penalty = 1.0;  // only meaningful for baseline placement
    std::uint64_t pc_capacity_bytes = (std::uint64_t{2} << 30) / 8;  // 2 Gbit per PC
    std::uint64_t max_cycles_per_iteration = 500'000'000;  // runaway guard

    std::uint32_t total_pes() const { return n_pc * pes_per_pc; }
    std::uint32_t dw_bits() const { return 2 * pes_per_pc * sv_bits; }
    double freq_hz() const { return freq_mhz * 1e6; }

    void validate() const;  // throws ConfigError
};

struct IterationRecord {
    IterationStats stats;
    std::uint64_t cycles = 0;
    std::uint64_t bytes_read = 0;
    double bandwidth_gbps = 0;  // aggregated over PCs for this iteration
};

struct SimReport {
    std::uint64_t total_cycles = 0;
    double wall_time_s = 0;
    std::uint64_t traversed_edges = 0;  // GTEPS numerator
    double gteps = 0;
    double aggregated_bandwidth_gbps = 0;
    std::vector<std::uint64_t> per_pc_bytes_read;
    std::vector<IterationRecord> per_iteration;

    std::vector<Level> levels;
    std::uint64_t levels_checksum = 0;

    // conservation counters: neighbor entries read from memory, messages
    // through the dispatcher, and P2 outcomes
    std::uint64_t entries_read = 0;
    std::uint64_t messages_injected = 0;
    std::uint64_t messages_delivered = 0;
    std::uint64_t p2_dropped = 0;
    std::uint64_t p2_forwarded = 0;
    std::uint64_t results_injected = 0;
};

/// Cycle-approximate run over the processing groups, hybrid PEs, scheduler
/// and vertex dispatcher. Levels always equal bfs_oracle; given identical
/// inputs the report is bit-identical.
SimReport run_simulation(const SimConfig& cfg, const Graph& g, VertexId root);

}  // namespace scalabfs
