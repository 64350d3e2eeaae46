#include "scalabfs/simulator.hpp"

#include <algorithm>
#include <optional>

#include "scalabfs/crossbar.hpp"
#include "scalabfs/hbm.hpp"

namespace scalabfs {

const char* to_string(Placement p) {
    return p == Placement::partitioned ? "partitioned" : "baseline";
}

Placement parse_placement(const std::string& name) {
    if (name == "partitioned") return Placement::partitioned;
    if (name == "baseline") return Placement::baseline;
    throw ConfigError("unknown placement \"" + name + "\"");
}

void SimConfig::validate() const {
    if (n_pc < 1 || n_pc > 32)
        throw ConfigError("sim: n_pc must be in [1,32] (one PG per pseudo channel)");
    if (pes_per_pc < 1) throw ConfigError("sim: pes_per_pc must be >= 1");
    if (freq_mhz <= 0) throw ConfigError("sim: freq_mhz must be positive");
    if (sv_bits == 0 || sv_bits % 8 != 0) throw ConfigError("sim: sv_bits must be a multiple of 8");
    if (bw_max_gbps_per_pc <= 0) throw ConfigError("sim: bw_max_gbps_per_pc must be positive");
    if (fifo_depth == 0) throw ConfigError("sim: fifo_depth must be >= 1");
    if (cross_pc_penalty < 1.0) throw ConfigError("sim: cross_pc_penalty must be >= 1");
    mode_policy.validate();
    if (!crossbar_factors.empty()) {
        std::uint64_t prod = 1;
        for (std::uint32_t c : crossbar_factors) prod *= c;
        if (prod != total_pes())
            throw ConfigError("sim: crossbar_factors product must equal n_pc * pes_per_pc");
    }
}

namespace {

struct BaselineLayout {
    std::uint64_t csr_off_base = 0;
    std::uint64_t csr_edge_base = 0;
    std::uint64_t csc_off_base = 0;
    std::uint64_t csc_edge_base = 0;
    std::uint64_t total = 0;

    static BaselineLayout make(const Graph& g, std::uint32_t sv_bits) {
        const std::uint64_t entry_bytes = sv_bits / 8;
        const std::uint64_t off_bytes = (static_cast<std::uint64_t>(g.num_vertices) + 1) * 8;
        const std::uint64_t edge_bytes = g.num_edges * entry_bytes;
        BaselineLayout l;
        l.csr_off_base = 0;
        l.csr_edge_base = off_bytes;
        l.csc_off_base = off_bytes + edge_bytes;
        l.csc_edge_base = off_bytes + edge_bytes + off_bytes;
        l.total = 2 * (off_bytes + edge_bytes);
        return l;
    }
};

struct ReaderCommand {
    HbmRequest req;
    std::uint32_t channel = 0;
};

class Machine : public HbmChannelSink {
public:
    Machine(const SimConfig& cfg, const Graph& g, VertexId root)
        : cfg_(cfg),
          g_(g),
          q_(cfg.total_pes()),
          plan_(partition_graph(g, cfg.total_pes(), cfg.n_pc)),
          layout_(BaselineLayout::make(g, cfg.sv_bits)),
          state_(g.num_vertices, root),
          fabric_(make_topology(cfg)) {
        check_capacity();
        const double cap_bits_per_cycle = cfg_.bw_max_gbps_per_pc * 1e9 * 8.0 / cfg_.freq_hz();
        channels_.reserve(cfg_.n_pc);
        for (std::uint32_t pc = 0; pc < cfg_.n_pc; ++pc)
            channels_.emplace_back(cfg_.dw_bits(), cap_bits_per_cycle, cfg_.hbm_latency_cycles,
                                   cfg_.sv_bits);
        readers_.resize(cfg_.n_pc);
        pes_.resize(q_);
        for (std::uint32_t i = 0; i < q_; ++i) {
            pes_[i].id = i;
            pes_[i].pg = plan_.pe_to_pc[i];
            pes_[i].owned = plan_.subgraphs[i].owned_count;
        }
    }

    SimReport run();

    // HbmChannelSink
    std::uint32_t accept_entries(const HbmRequest& req, std::uint32_t entry_offset,
                                 std::uint32_t max_entries) override {
        const std::vector<VertexId>& edges = req.from_csc ? g_.csc_edges : g_.csr_edges;
        for (std::uint32_t j = 0; j < max_entries; ++j) {
            DispatchMessage m;
            m.vid = edges[req.entry_begin + entry_offset + j];
            m.kind = MessageKind::check;
            m.aux = req.list_owner;
            if (!fabric_.try_inject(req.pe, m)) return j;
            ++entries_read_;
            ++messages_injected_;
        }
        return max_entries;
    }

    void request_complete(const HbmRequest& req, std::uint64_t) override {
        if (req.is_edge || req.entries == 0) return;
        // offset data returned: the reader assembles the dependent edge read
        HbmRequest edge;
        edge.seq = next_seq_++;
        edge.pe = req.pe;
        edge.pg = req.pg;
        edge.is_edge = true;
        edge.from_csc = req.from_csc;
        edge.entries = req.entries;
        edge.bits = static_cast<std::uint64_t>(req.entries) * cfg_.sv_bits;
        edge.entry_begin = req.entry_begin;
        edge.list_owner = req.list_owner;
        push_edge_commands(edge);
    }

private:
    struct Pe {
        std::uint32_t id = 0;
        std::uint32_t pg = 0;
        VertexId owned = 0;
        VertexId scan_cursor = 0;
        bool scan_done = true;
        std::deque<DispatchMessage> p2_in;
        std::deque<DispatchMessage> p3_in;
        std::optional<DispatchMessage> result_pending;
        std::uint32_t cf_ops = 0, vm_ops = 0, nf_ops = 0;  // per-cycle bitmap budgets
    };

    static CrossbarTopology make_topology(const SimConfig& cfg) {
        if (cfg.crossbar_factors.empty())
            return CrossbarTopology::full(cfg.total_pes(), cfg.fifo_depth);
        return CrossbarTopology::layered(cfg.crossbar_factors, cfg.fifo_depth);
    }

    void check_capacity() {
        if (cfg_.placement == Placement::partitioned) {
            auto bytes = placement_bytes(plan_, cfg_.sv_bits);
            for (std::uint32_t pc = 0; pc < cfg_.n_pc; ++pc)
                if (bytes[pc] > cfg_.pc_capacity_bytes)
                    throw ConfigError("sim: subgraphs of PC " + std::to_string(pc) +
                                      " exceed the PC capacity");
        } else {
            if (layout_.total > cfg_.pc_capacity_bytes * cfg_.n_pc)
                throw ConfigError("sim: graph does not fit in the HBM address space");
        }
    }

    std::uint32_t channel_for_addr(std::uint64_t addr) const {
        auto pc = static_cast<std::uint32_t>(addr / cfg_.pc_capacity_bytes);
        if (pc >= cfg_.n_pc) throw SimFault("memory request outside the placed data range");
        return pc;
    }

    double penalty_for(std::uint32_t pe, std::uint32_t channel) const {
        if (cfg_.placement == Placement::partitioned) return 1.0;
        return channel == plan_.pe_to_pc[pe] ? 1.0 : cfg_.cross_pc_penalty;
    }

    // splits a baseline edge read at PC boundaries; partitioned reads stay whole
    void push_edge_commands(const HbmRequest& edge) {
        if (cfg_.placement == Placement::partitioned) {
            readers_[edge.pg].push_back({edge, edge.pg});
            return;
        }
        const std::uint64_t entry_bytes = cfg_.sv_bits / 8;
        const std::uint64_t base = edge.from_csc ? layout_.csc_edge_base : layout_.csr_edge_base;
        std::uint64_t addr = base + edge.entry_begin * entry_bytes;
        std::uint32_t remaining = edge.entries;
        std::uint64_t entry_begin = edge.entry_begin;
        while (remaining > 0) {
            std::uint32_t pc = channel_for_addr(addr);
            std::uint64_t pc_end = (static_cast<std::uint64_t>(pc) + 1) * cfg_.pc_capacity_bytes;
            auto chunk = static_cast<std::uint32_t>(
                std::min<std::uint64_t>(remaining, (pc_end - addr) / entry_bytes));
            HbmRequest part = edge;
            part.seq = next_seq_++;
            part.entries = chunk;
            part.bits = static_cast<std::uint64_t>(chunk) * cfg_.sv_bits;
            part.entry_begin = entry_begin;
            part.penalty = penalty_for(edge.pe, pc);
            readers_[edge.pg].push_back({part, pc});
            remaining -= chunk;
            entry_begin += chunk;
            addr += static_cast<std::uint64_t>(chunk) * entry_bytes;
        }
    }

    void issue_offset_request(Pe& pe, VertexId v, BfsMode mode) {
        HbmRequest req;
        req.seq = next_seq_++;
        req.pe = pe.id;
        req.pg = pe.pg;
        req.is_edge = false;
        req.bits = cfg_.dw_bits();  // offset lookup is charged one data-width beat
        req.list_owner = v;
        std::uint32_t channel = pe.pg;
        if (mode == BfsMode::push) {
            req.from_csc = false;
            req.entries = static_cast<std::uint32_t>(g_.out_degree(v));
            req.entry_begin = g_.csr_offsets[v];
            if (cfg_.placement == Placement::baseline)
                channel = channel_for_addr(layout_.csr_off_base + std::uint64_t{v} * 8);
        } else {
            req.from_csc = true;
            req.entries = truncated_pull_len(v);
            req.entry_begin = g_.csc_offsets[v];
            if (cfg_.placement == Placement::baseline)
                channel = channel_for_addr(layout_.csc_off_base + std::uint64_t{v} * 8);
        }
        req.penalty = penalty_for(pe.id, channel);
        readers_[pe.pg].push_back({req, channel});
        ++iter_.stats.offset_words_read;
    }

    // Early exit: a pull request only fetches entries up to (and including)
    // the first frontier parent; the frontier is frozen within an iteration
    // so this matches what the checking stage would cancel.
    std::uint32_t truncated_pull_len(VertexId v) const {
        auto parents = g_.in_neighbors(v);
        for (std::size_t idx = 0; idx < parents.size(); ++idx)
            if (state_.current_frontier.get(parents[idx])) return static_cast<std::uint32_t>(idx + 1);
        return static_cast<std::uint32_t>(parents.size());
    }

    // P3 result writing: set next frontier + visited map, write the level.
    void pe_p3(Pe& pe) {
        while (!pe.p3_in.empty() && pe.vm_ops >= 1 && pe.nf_ops >= 1) {
            VertexId c = pe.p3_in.front().vid;
            pe.p3_in.pop_front();
            pe.vm_ops--;
            if (state_.visited_map.get(c)) continue;  // duplicate in flight
            pe.nf_ops--;
            state_.visited_map.set(c);
            state_.next_frontier.set(c);
            state_.level[c] = state_.bfs_level + 1;
            ++iter_.stats.vertices_activated;
        }
    }

    // P2 neighbor checking.
    void pe_p2(Pe& pe) {
        if (mode_ == BfsMode::push) {
            while (!pe.p2_in.empty() && pe.vm_ops >= 1) {
                DispatchMessage m = pe.p2_in.front();
                pe.p2_in.pop_front();
                pe.vm_ops--;
                ++iter_.stats.edges_examined;
                if (state_.visited_map.get(m.vid)) {
                    ++p2_dropped_;
                } else {
                    ++p2_forwarded_;
                    pe.p3_in.push_back(m);  // same PE: the child's bits live here
                }
            }
            return;
        }
        // pull: this PE owns the parent; on a frontier hit the child is sent
        // home through the dispatcher (it usually lives on another PE)
        if (pe.result_pending) {
            if (!fabric_.try_inject(pe.id, *pe.result_pending)) return;
            ++results_injected_;
            pe.result_pending.reset();
        }
        while (!pe.p2_in.empty() && pe.cf_ops >= 1) {
            DispatchMessage m = pe.p2_in.front();
            pe.p2_in.pop_front();
            pe.cf_ops--;
            ++iter_.stats.edges_examined;
            if (!state_.current_frontier.get(m.vid)) {
                ++p2_dropped_;
                continue;
            }
            ++p2_forwarded_;
            DispatchMessage result;
            result.vid = m.aux;  // the child vertex
            result.kind = MessageKind::result;
            if (!fabric_.try_inject(pe.id, result)) {
                pe.result_pending = result;
                break;
            }
            ++results_injected_;
        }
    }

    // P1 workload preparing: scan this PE's slice of the frontier (push) or
    // visited map (pull) and request the corresponding neighbor lists.
    void pe_p1(Pe& pe) {
        if (pe.scan_done) return;
        if (mode_ == BfsMode::push) {
            while (pe.cf_ops >= 1 && pe.scan_cursor < pe.owned) {
                pe.cf_ops--;
                VertexId v = pe.id + pe.scan_cursor * q_;
                pe.scan_cursor++;
                if (state_.current_frontier.get(v)) issue_offset_request(pe, v, mode_);
            }
        } else {
            while (pe.vm_ops >= 1 && pe.scan_cursor < pe.owned) {
                pe.vm_ops--;
                VertexId v = pe.id + pe.scan_cursor * q_;
                pe.scan_cursor++;
                if (!state_.visited_map.get(v)) issue_offset_request(pe, v, mode_);
            }
        }
        if (pe.scan_cursor >= pe.owned) pe.scan_done = true;
    }

    void reader_issue() {
        for (std::uint32_t pg = 0; pg < cfg_.n_pc; ++pg) {
            if (readers_[pg].empty()) continue;
            ReaderCommand cmd = readers_[pg].front();
            readers_[pg].pop_front();
            channels_[cmd.channel].enqueue(cmd.req, cycle_);
        }
    }

    void deliver(const std::vector<DeliveredMessage>& msgs) {
        for (const auto& d : msgs) {
            Pe& pe = pes_[d.port];
            if (d.msg.kind == MessageKind::check)
                pe.p2_in.push_back(d.msg);
            else
                pe.p3_in.push_back(d.msg);
        }
    }

    void cycle() {
        // the dispatcher lives in the double-pumped clock domain: two fabric
        // cycles per core cycle, matching the 2 ops/cycle bitmap budget
        deliver(fabric_.step());
        deliver(fabric_.step());
        for (auto& ch : channels_) ch.tick(cycle_, *this);
        for (Pe& pe : pes_) {
            pe.cf_ops = 2;
            pe.vm_ops = 2;
            pe.nf_ops = 2;
        }
        for (Pe& pe : pes_) pe_p3(pe);
        for (Pe& pe : pes_) pe_p2(pe);
        for (Pe& pe : pes_) pe_p1(pe);
        reader_issue();
        ++cycle_;
    }

    bool quiescent() const {
        for (const Pe& pe : pes_)
            if (!pe.scan_done || !pe.p2_in.empty() || !pe.p3_in.empty() || pe.result_pending)
                return false;
        for (const auto& r : readers_)
            if (!r.empty()) return false;
        for (const auto& ch : channels_)
            if (!ch.idle()) return false;
        return fabric_.idle();
    }

    void begin_iteration(BfsMode mode) {
        mode_ = mode;
        iter_ = IterationRecord{};
        iter_.stats.mode = mode;
        if (mode == BfsMode::push) {
            iter_.stats.active_or_unvisited_count = state_.current_frontier.popcount();
        } else {
            iter_.stats.active_or_unvisited_count =
                g_.num_vertices - state_.visited_map.popcount();
        }
        for (Pe& pe : pes_) {
            pe.scan_cursor = 0;
            pe.scan_done = pe.owned == 0;
        }
    }

    std::uint64_t total_bits_delivered() const {
        std::uint64_t total = 0;
        for (const auto& ch : channels_) total += ch.bits_delivered();
        return total;
    }

    const SimConfig& cfg_;
    const Graph& g_;
    std::uint32_t q_;
    PartitionPlan plan_;
    BaselineLayout layout_;
    BfsState state_;
    DispatchFabric fabric_;
    std::vector<HbmChannel> channels_;
    std::vector<std::deque<ReaderCommand>> readers_;
    std::vector<Pe> pes_;

    BfsMode mode_ = BfsMode::push;
    std::uint64_t cycle_ = 0;
    std::uint64_t next_seq_ = 0;
    IterationRecord iter_{};

    std::uint64_t entries_read_ = 0;
    std::uint64_t messages_injected_ = 0;
    std::uint64_t results_injected_ = 0;
    std::uint64_t p2_dropped_ = 0;
    std::uint64_t p2_forwarded_ = 0;
};

SimReport Machine::run() {
    SimReport report;
    std::optional<IterationStats> prev_stats;

    while (true) {
        BfsMode mode = decide_mode(cfg_.mode_policy, prev_stats ? &*prev_stats : nullptr, g_, state_);
        begin_iteration(mode);
        std::uint64_t start_cycle = cycle_;
        std::uint64_t start_bits = total_bits_delivered();
        while (!quiescent()) {
            cycle();
            if (cycle_ - start_cycle > cfg_.max_cycles_per_iteration)
                throw SimFault("iteration exceeded the cycle guard; simulator wedged");
        }
        iter_.cycles = cycle_ - start_cycle;
        iter_.bytes_read = (total_bits_delivered() - start_bits) / 8;
        double seconds = static_cast<double>(iter_.cycles) / cfg_.freq_hz();
        iter_.bandwidth_gbps =
            seconds > 0 ? static_cast<double>(iter_.bytes_read) / seconds / 1e9 : 0.0;
        advance(state_);
        prev_stats = iter_.stats;
        report.per_iteration.push_back(iter_);
        if (iter_.stats.vertices_activated == 0) break;
        if (report.per_iteration.size() > g_.num_vertices + 1)
            throw SimFault("iteration count exceeded vertex count");
    }

    report.total_cycles = cycle_;
    report.wall_time_s = static_cast<double>(report.total_cycles) / cfg_.freq_hz();
    report.levels = state_.level;
    report.levels_checksum = level_checksum(report.levels);
    std::uint64_t traversed = 0;
    for (VertexId v = 0; v < g_.num_vertices; ++v)
        if (report.levels[v] != kUnreached) traversed += g_.out_degree(v);
    report.traversed_edges = traversed;
    report.gteps = report.wall_time_s > 0
                       ? static_cast<double>(traversed) / report.wall_time_s / 1e9
                       : 0.0;

    report.per_pc_bytes_read.resize(cfg_.n_pc);
    std::uint64_t total_bytes = 0;
    for (std::uint32_t pc = 0; pc < cfg_.n_pc; ++pc) {
        report.per_pc_bytes_read[pc] = channels_[pc].bits_delivered() / 8;
        total_bytes += report.per_pc_bytes_read[pc];
    }
    report.aggregated_bandwidth_gbps =
        report.wall_time_s > 0 ? static_cast<double>(total_bytes) / report.wall_time_s / 1e9 : 0.0;

    report.entries_read = entries_read_;
    report.messages_injected = messages_injected_;
    report.messages_delivered = fabric_.delivered();
    report.p2_dropped = p2_dropped_;
    report.p2_forwarded = p2_forwarded_;
    report.results_injected = results_injected_;
    return report;
}

}  // namespace

SimReport run_simulation(const SimConfig& cfg, const Graph& g, VertexId root) {
    cfg.validate();
    if (root >= g.num_vertices) throw ConfigError("sim: root vertex out of range");
    Machine machine(cfg, g, root);
    return machine.run();
}

}  // namespace scalabfs
