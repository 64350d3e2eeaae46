#include "scalabfs/hbm.hpp"

#include <algorithm>
#include <cmath>

namespace scalabfs {

HbmChannel::HbmChannel(std::uint32_t dw_bits, double cap_bits_per_cycle,
                       std::uint32_t latency_cycles, std::uint32_t sv_bits)
    : dw_bits_(dw_bits),
      cap_bits_per_cycle_(cap_bits_per_cycle),
      latency_(latency_cycles),
      sv_bits_(sv_bits),
      tokens_(std::max<double>(cap_bits_per_cycle, dw_bits)) {}

void HbmChannel::enqueue(HbmRequest req, std::uint64_t issue_cycle) {
    req.issue_cycle = issue_cycle;
    queue_.push_back(req);
}

void HbmChannel::tick(std::uint64_t cycle, HbmChannelSink& sink) {
    // Bandwidth-cap token bucket; the burst window is one beat so the
    // running average stays within BW_MAX.
    tokens_ = std::min(tokens_ + cap_bits_per_cycle_,
                       std::max<double>(cap_bits_per_cycle_, dw_bits_));

    if (!head_active_) {
        if (queue_.empty()) return;
        head_active_ = true;
        head_start_ = std::max(queue_.front().issue_cycle + latency_, free_at_);
        head_bits_done_ = 0;
        head_entries_done_ = 0;
        carry_bits_ = 0;
    }
    if (cycle < head_start_) return;

    HbmRequest& req = queue_.front();
    double rate = std::min(static_cast<double>(dw_bits_) / req.penalty, tokens_);
    if (rate <= 0) return;

    bool done = false;
    if (!req.is_edge) {
        double advance = std::min(rate, static_cast<double>(req.bits) - head_bits_done_);
        head_bits_done_ += advance;
        tokens_ -= advance;
        done = head_bits_done_ + 1e-9 >= static_cast<double>(req.bits);
        if (done) bits_delivered_ += req.bits;
    } else {
        carry_bits_ += rate;
        std::uint32_t remaining = req.entries - head_entries_done_;
        auto avail = static_cast<std::uint32_t>(
            std::min<double>(std::floor(carry_bits_ / sv_bits_), remaining));
        std::uint32_t accepted = 0;
        if (avail > 0) accepted = sink.accept_entries(req, head_entries_done_, avail);
        head_entries_done_ += accepted;
        double used = static_cast<double>(accepted) * sv_bits_;
        tokens_ -= used;
        bits_delivered_ += static_cast<std::uint64_t>(accepted) * sv_bits_;
        if (accepted < avail)
            carry_bits_ = 0;  // stalled by downstream; the slot is lost
        else
            carry_bits_ -= used;
        done = head_entries_done_ >= req.entries;
    }

    if (done) {
        HbmRequest finished = req;
        queue_.pop_front();
        head_active_ = false;
        free_at_ = cycle + 1;
        ++completed_;
        sink.request_complete(finished, cycle + 1);
    }
}

}  // namespace scalabfs
