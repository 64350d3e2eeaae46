#pragma once

#include <cstdint>
#include <deque>

#include "scalabfs/types.hpp"

namespace scalabfs {

/// One AXI read command against a pseudo channel. Offset reads cost DW bits
/// (the width assumption the analytic model makes); edge reads deliver
/// `entries` vertex entries of sv_bits each, materialized by the sink.
struct HbmRequest {
    std::uint64_t seq = 0;
    std::uint32_t pe = 0;        // requesting PE = fabric input port
    std::uint32_t pg = 0;        // requesting PG (home PC)
    bool is_edge = false;
    bool from_csc = false;       // pull mode reads the CSC side
    std::uint64_t bits = 0;      // offset reads: DW; edge reads: entries * sv
    std::uint32_t entries = 0;
    std::uint64_t entry_begin = 0;  // index into the subgraph's edge array
    VertexId list_owner = 0;     // vertex whose list this is (the child in pull)
    double penalty = 1.0;        // >= 1; cross-PC reads in baseline placement
    std::uint64_t issue_cycle = 0;
};

/// Receives channel data. accept_entries may take fewer than offered
/// (downstream FIFO full), which stalls the channel.
class HbmChannelSink {
public:
    virtual ~HbmChannelSink() = default;
    virtual std::uint32_t accept_entries(const HbmRequest& req, std::uint32_t entry_offset,
                                         std::uint32_t max_entries) = 0;
    virtual void request_complete(const HbmRequest& req, std::uint64_t complete_cycle) = 0;
};

/// Throughput model of one HBM pseudo channel: fixed latency, DW bits per
/// cycle delivery, long-run average capped at BW_MAX. Requests complete in
/// issue order; back-to-back requests hide the latency.
class HbmChannel {
public:
    HbmChannel() = default;
    HbmChannel(std::uint32_t dw_bits, double cap_bits_per_cycle, std::uint32_t latency_cycles,
               std::uint32_t sv_bits);

    void enqueue(HbmRequest req, std::uint64_t issue_cycle);
    void tick(std::uint64_t cycle, HbmChannelSink& sink);

    bool idle() const { return queue_.empty() && !head_active_; }
    std::uint64_t bits_delivered() const { return bits_delivered_; }
    std::uint64_t requests_completed() const { return completed_; }

private:
    std::uint32_t dw_bits_ = 64;
    double cap_bits_per_cycle_ = 1e18;
    std::uint32_t latency_ = 0;
    std::uint32_t sv_bits_ = 32;

    std::deque<HbmRequest> queue_;
    bool head_active_ = false;
    std::uint64_t head_start_ = 0;
    double head_bits_done_ = 0;
    std::uint32_t head_entries_done_ = 0;
    double carry_bits_ = 0;
    double tokens_ = 0;
    std::uint64_t free_at_ = 0;  // next cycle the channel may start a new request
    std::uint64_t bits_delivered_ = 0;
    std::uint64_t completed_ = 0;
};

}  // namespace scalabfs
