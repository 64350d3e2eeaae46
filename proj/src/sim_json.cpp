#include "scalabfs/sim_json.hpp"

#include <fstream>
#include <sstream>

namespace scalabfs {

using nlohmann::json;

json policy_to_json(const ModePolicy& p) {
    json j;
    j["kind"] = to_string(p.kind);
    j["push_to_pull_threshold"] = p.push_to_pull_threshold;
    j["pull_to_push_threshold"] = p.pull_to_push_threshold;
    if (p.kind == ModePolicy::Kind::fixed_schedule) {
        j["pull_start"] = p.pull_start;
        j["pull_end"] = p.pull_end;
    }
    return j;
}

ModePolicy policy_from_json(const json& j) {
    ModePolicy p;
    if (j.is_string()) {
        p.kind = parse_policy_kind(j.get<std::string>());
        return p;
    }
    if (j.contains("kind")) p.kind = parse_policy_kind(j.at("kind").get<std::string>());
    if (j.contains("push_to_pull_threshold")) p.push_to_pull_threshold = j.at("push_to_pull_threshold");
    if (j.contains("pull_to_push_threshold")) p.pull_to_push_threshold = j.at("pull_to_push_threshold");
    if (j.contains("pull_start")) p.pull_start = j.at("pull_start");
    if (j.contains("pull_end")) p.pull_end = j.at("pull_end");
    p.validate();
    return p;
}

json config_to_json(const SimConfig& cfg) {
    json j;
    j["config_version"] = 1;
    j["n_pc"] = cfg.n_pc;
    j["pes_per_pc"] = cfg.pes_per_pc;
    j["freq_mhz"] = cfg.freq_mhz;
    j["sv_bits"] = cfg.sv_bits;
    j["bw_max_gbps_per_pc"] = cfg.bw_max_gbps_per_pc;
    j["hbm_latency_cycles"] = cfg.hbm_latency_cycles;
    j["crossbar_factors"] = cfg.crossbar_factors;
    j["fifo_depth"] = cfg.fifo_depth;
    j["mode_policy"] = policy_to_json(cfg.mode_policy);
    j["placement"] = to_string(cfg.placement);
    j["cross_pc_penalty"] = cfg.cross_pc_penalty;
    return j;
}

SimConfig config_from_json(const json& j) {
    SimConfig cfg;
    if (j.contains("config_version") && j.at("config_version").get<int>() != 1)
        throw ConfigError("unsupported config_version (expected 1)");
    if (j.contains("n_pc")) cfg.n_pc = j.at("n_pc");
    if (j.contains("pes_per_pc")) cfg.pes_per_pc = j.at("pes_per_pc");
    if (j.contains("freq_mhz")) cfg.freq_mhz = j.at("freq_mhz");
    if (j.contains("sv_bits")) cfg.sv_bits = j.at("sv_bits");
    if (j.contains("bw_max_gbps_per_pc")) cfg.bw_max_gbps_per_pc = j.at("bw_max_gbps_per_pc");
    if (j.contains("hbm_latency_cycles")) cfg.hbm_latency_cycles = j.at("hbm_latency_cycles");
    if (j.contains("crossbar_factors"))
        cfg.crossbar_factors = j.at("crossbar_factors").get<std::vector<std::uint32_t>>();
    if (j.contains("fifo_depth")) cfg.fifo_depth = j.at("fifo_depth");
    if (j.contains("mode_policy")) cfg.mode_policy = policy_from_json(j.at("mode_policy"));
    if (j.contains("placement")) cfg.placement = parse_placement(j.at("placement").get<std::string>());
    if (j.contains("cross_pc_penalty")) cfg.cross_pc_penalty = j.at("cross_pc_penalty");
    if (j.contains("pc_capacity_bytes")) cfg.pc_capacity_bytes = j.at("pc_capacity_bytes");
    cfg.validate();
    return cfg;
}

SimConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError("config " + path + ": " + e.what());
    }
    return config_from_json(j);
}

json report_to_json(const SimReport& r, bool include_levels) {
    json j;
    j["total_cycles"] = r.total_cycles;
    j["wall_time_s"] = r.wall_time_s;
    j["traversed_edges"] = r.traversed_edges;
    j["gteps"] = r.gteps;
    j["aggregated_bandwidth_gbps"] = r.aggregated_bandwidth_gbps;
    j["per_pc_bytes_read"] = r.per_pc_bytes_read;
    j["levels_checksum"] = r.levels_checksum;
    json iters = json::array();
    for (const auto& it : r.per_iteration) {
        json ji;
        ji["mode"] = to_string(it.stats.mode);
        ji["active_or_unvisited_count"] = it.stats.active_or_unvisited_count;
        ji["edges_examined"] = it.stats.edges_examined;
        ji["vertices_activated"] = it.stats.vertices_activated;
        ji["offset_words_read"] = it.stats.offset_words_read;
        ji["cycles"] = it.cycles;
        ji["bytes_read"] = it.bytes_read;
        ji["bandwidth_gbps"] = it.bandwidth_gbps;
        iters.push_back(ji);
    }
    j["per_iteration"] = iters;
    j["counters"] = {{"entries_read", r.entries_read},
                     {"messages_injected", r.messages_injected},
                     {"messages_delivered", r.messages_delivered},
                     {"p2_dropped", r.p2_dropped},
                     {"p2_forwarded", r.p2_forwarded},
                     {"results_injected", r.results_injected}};
    if (include_levels) j["levels"] = r.levels;
    return j;
}

std::string report_to_csv(const SimReport& r) {
    std::ostringstream out;
    out << "row,mode,active_or_unvisited_count,edges_examined,vertices_activated,"
           "offset_words_read,cycles,bytes_read,bandwidth_gbps\n";
    for (std::size_t i = 0; i < r.per_iteration.size(); ++i) {
        const auto& it = r.per_iteration[i];
        out << "iter" << i << ',' << to_string(it.stats.mode) << ','
            << it.stats.active_or_unvisited_count << ',' << it.stats.edges_examined << ','
            << it.stats.vertices_activated << ',' << it.stats.offset_words_read << ','
            << it.cycles << ',' << it.bytes_read << ',' << it.bandwidth_gbps << "\n";
    }
    std::uint64_t edges = 0, activated = 0, offsets = 0, bytes = 0;
    for (const auto& it : r.per_iteration) {
        edges += it.stats.edges_examined;
        activated += it.stats.vertices_activated;
        offsets += it.stats.offset_words_read;
        bytes += it.bytes_read;
    }
    out << "summary,," << "," << edges << ',' << activated << ',' << offsets << ','
        << r.total_cycles << ',' << bytes << ',' << r.aggregated_bandwidth_gbps << "\n";
    return out.str();
}

}  // namespace scalabfs
