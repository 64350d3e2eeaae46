// scalabfs command line: graph generation, conversion, simulation runs,
// analytic model sweeps and mode comparisons.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scalabfs/bfs.hpp"
#include "scalabfs/edge_list.hpp"
#include "scalabfs/graph_io.hpp"
#include "scalabfs/perf_model.hpp"
#include "scalabfs/rmat.hpp"
#include "scalabfs/sim_json.hpp"
#include "scalabfs/simulator.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

using nlohmann::json;
using namespace scalabfs;

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// deterministic multi-root selection, skipping vertices without out-edges
std::vector<VertexId> sample_roots(const Graph& g, std::uint64_t seed, std::size_t count) {
    std::vector<VertexId> roots;
    std::uint64_t state = seed;
    std::size_t attempts = 0;
    const std::size_t max_attempts = 64 * count + 1024;
    while (roots.size() < count && attempts < max_attempts) {
        state = mix64(state);
        auto v = static_cast<VertexId>(state % g.num_vertices);
        ++attempts;
        if (g.out_degree(v) == 0) continue;
        roots.push_back(v);
    }
    if (roots.empty() && g.num_vertices > 0) roots.push_back(0);
    return roots;
}

json make_manifest(const std::string& command, const json& inputs) {
    json m;
    m["tool_version"] = kToolVersion;
    m["command"] = command;
    m["inputs"] = inputs;
    return m;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << text;
}

int cmd_gen_rmat(const std::string& out_path, std::uint32_t scale, std::uint32_t degree, double a,
                 double b, double c, std::uint64_t seed, bool dedup) {
    RmatParams p{scale, degree, a, b, c, seed};
    EdgeList raw = generate_rmat(p);
    std::size_t raw_edges = raw.edges.size();
    if (dedup) raw = dedup_edges(raw);
    Graph g = build_graph(to_directed(raw));
    save_graph(out_path, g);
    std::cout << "rmat scale=" << scale << " degree=" << degree << " seed=" << seed << "\n"
              << "vertices " << g.num_vertices << ", raw undirected edges " << raw_edges;
    if (dedup) std::cout << " (deduped to " << raw.edges.size() << ")";
    std::cout << ", directed edges " << g.num_edges << "\n"
              << "wrote " << out_path << "\n";
    return 0;
}

int cmd_convert(const std::string& in_path, const std::string& out_path, bool undirected) {
    std::ifstream in(in_path);
    if (!in) throw ParseError("cannot open " + in_path);
    EdgeList e = load_edge_list(in, !undirected);
    if (undirected) e = to_directed(e);
    Graph g = build_graph(e);
    save_graph(out_path, g);
    std::cout << "vertices " << g.num_vertices << ", directed edges " << g.num_edges << "\n"
              << "wrote " << out_path << "\n";
    return 0;
}

int cmd_run(const std::string& graph_path, const std::string& config_path,
            std::vector<VertexId> roots, const std::string& roots_file, std::uint64_t seed,
            std::size_t num_roots, const std::string& report_path, const std::string& csv_path) {
    Graph g = load_graph(graph_path);
    SimConfig cfg = config_path.empty() ? SimConfig{} : load_config(config_path);

    if (!roots_file.empty()) {
        std::ifstream in(roots_file);
        if (!in) throw ParseError("cannot open " + roots_file);
        VertexId r;
        while (in >> r) roots.push_back(r);
    }
    if (roots.empty()) roots = sample_roots(g, seed, num_roots);

    json runs = json::array();
    double gteps_sum = 0;
    std::ostringstream csv;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        SimReport r = run_simulation(cfg, g, roots[i]);
        json jr = report_to_json(r);
        jr["root"] = roots[i];
        runs.push_back(jr);
        gteps_sum += r.gteps;
        if (roots.size() > 1) csv << "# root " << roots[i] << "\n";
        csv << report_to_csv(r);
        std::cout << "root " << roots[i] << ": gteps " << r.gteps << ", cycles " << r.total_cycles
                  << ", bandwidth " << r.aggregated_bandwidth_gbps << " GB/s, iterations "
                  << r.per_iteration.size() << "\n";
    }
    double mean = gteps_sum / static_cast<double>(roots.size());
    std::cout << "mean gteps " << mean << " over " << roots.size() << " roots\n";

    json doc;
    doc["manifest"] = make_manifest("run", {{"graph", graph_path},
                                            {"config", config_path.empty() ? "(defaults)" : config_path},
                                            {"roots", roots},
                                            {"seed", seed},
                                            {"report", report_path},
                                            {"csv", csv_path}});
    doc["config"] = config_to_json(cfg);
    doc["runs"] = runs;
    doc["mean_gteps"] = mean;
    if (!report_path.empty()) write_text(report_path, doc.dump(2) + "\n");
    if (!csv_path.empty()) write_text(csv_path, csv.str());
    return 0;
}

int cmd_model(const std::string& params_path, const std::string& len_list,
              std::uint32_t max_pe, const std::string& out_path) {
    PerfParams base;
    if (!params_path.empty()) {
        std::ifstream in(params_path);
        if (!in) throw ParseError("cannot open " + params_path);
        json j;
        in >> j;
        if (j.contains("n_pc")) base.n_pc = j.at("n_pc");
        if (j.contains("sv_bits")) base.sv_bits = j.at("sv_bits");
        if (j.contains("freq_hz")) base.freq_hz = j.at("freq_hz");
        if (j.contains("freq_mhz")) base.freq_hz = j.at("freq_mhz").get<double>() * 1e6;
        if (j.contains("bw_max")) base.bw_max = j.at("bw_max");
        if (j.contains("k")) base.k = j.at("k");
        if (j.contains("r_fifo")) base.r_fifo = j.at("r_fifo");
        if (j.contains("r_pe")) base.r_pe = j.at("r_pe");
        if (j.contains("r_limit")) base.r_limit = j.at("r_limit");
    }

    std::vector<double> lens;
    std::stringstream ss(len_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) lens.push_back(std::stod(tok));
    if (lens.empty()) throw ConfigError("model: --len-nl list is empty");

    std::vector<std::uint32_t> grid;
    for (std::uint32_t n = 1; n <= max_pe; n *= 2) grid.push_back(n);

    auto rows = sweep(base, grid, lens);
    std::ostringstream csv;
    csv << "n_pe,len_nl,dw_bits,saturated,perf_pg_gteps,perf_total_gteps,feasible\n";
    for (const auto& r : rows)
        csv << r.n_pe << ',' << r.len_nl << ',' << r.dw_bits << ',' << (r.saturated ? 1 : 0) << ','
            << r.perf_pg_gteps << ',' << r.perf_total_gteps << ',' << (r.feasible ? 1 : 0) << "\n";
    if (out_path.empty())
        std::cout << csv.str();
    else
        write_text(out_path, csv.str());

    for (double len : lens) {
        std::uint32_t best = 0;
        double best_v = -1;
        for (const auto& r : rows)
            if (r.len_nl == len && r.perf_pg_gteps > best_v) {
                best_v = r.perf_pg_gteps;
                best = r.n_pe;
            }
        std::cout << "len_nl " << len << ": best n_pe " << best << " at " << best_v
                  << " GTEPS per PG\n";
    }
    return 0;
}

int cmd_compare(const std::string& graph_path, const std::string& config_path,
                const std::string& modes_list, VertexId root, const std::string& report_path) {
    Graph g = load_graph(graph_path);
    SimConfig cfg = config_path.empty() ? SimConfig{} : load_config(config_path);

    std::vector<std::string> modes;
    std::stringstream ss(modes_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) modes.push_back(tok);
    if (modes.empty()) throw ConfigError("compare: --modes list is empty");

    json results = json::object();
    std::vector<std::pair<std::string, SimReport>> reports;
    for (const auto& name : modes) {
        SimConfig mode_cfg = cfg;
        mode_cfg.mode_policy.kind = parse_policy_kind(name);
        SimReport r = run_simulation(mode_cfg, g, root);
        std::uint64_t edges = 0;
        for (const auto& it : r.per_iteration) edges += it.stats.edges_examined;
        std::cout << name << ": gteps " << r.gteps << ", cycles " << r.total_cycles
                  << ", edges examined " << edges << ", checksum " << std::hex
                  << r.levels_checksum << std::dec << "\n";
        json jr = report_to_json(r);
        jr["edges_examined_total"] = edges;
        results[name] = jr;
        reports.emplace_back(name, std::move(r));
    }
    for (std::size_t i = 1; i < reports.size(); ++i) {
        if (reports[i].second.levels_checksum != reports[0].second.levels_checksum)
            throw SimFault("modes disagree on BFS levels");
    }
    json ratios = json::object();
    for (std::size_t i = 1; i < reports.size(); ++i) {
        double ratio = reports[0].second.gteps / reports[i].second.gteps;
        ratios[reports[0].first + "/" + reports[i].first] = ratio;
        std::cout << reports[0].first << "/" << reports[i].first << " gteps ratio: " << ratio
                  << "\n";
    }

    json doc;
    doc["manifest"] = make_manifest("compare", {{"graph", graph_path},
                                                {"config", config_path.empty() ? "(defaults)" : config_path},
                                                {"root", root},
                                                {"modes", modes}});
    doc["config"] = config_to_json(cfg);
    doc["results"] = results;
    doc["ratios"] = ratios;
    if (!report_path.empty()) write_text(report_path, doc.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ScalaBFS model: graph tools, accelerator simulator and performance model"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    // gen-rmat
    auto* gen = app.add_subcommand("gen-rmat", "generate an RMAT graph and write the binary format");
    std::uint32_t scale = 18, degree = 16;
    double pa = 0.57, pb = 0.19, pc = 0.19;
    std::uint64_t seed = 1;
    std::string out_path;
    bool dedup = false;
    gen->add_option("--scale", scale, "log2 of the vertex count")->check(CLI::Range(1, 30));
    gen->add_option("--degree", degree, "average undirected degree")->check(CLI::PositiveNumber);
    gen->add_option("--a", pa, "Kronecker quadrant probability A");
    gen->add_option("--b", pb, "Kronecker quadrant probability B");
    gen->add_option("--c", pc, "Kronecker quadrant probability C");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_flag("--dedup", dedup, "drop duplicate edges before building");
    gen->add_option("--out", out_path, "output graph file")->required();

    // convert
    auto* conv = app.add_subcommand("convert", "convert a text edge list to the binary format");
    std::string in_path, conv_out;
    bool undirected = false;
    conv->add_option("--in", in_path, "input edge list")->required()->check(CLI::ExistingFile);
    conv->add_option("--out", conv_out, "output graph file")->required();
    conv->add_flag("--undirected", undirected, "treat input as undirected and double the edges");

    // run
    auto* run = app.add_subcommand("run", "simulate BFS runs and write reports");
    std::string run_graph, run_config, roots_file, report_path, csv_path;
    std::vector<VertexId> roots;
    std::uint64_t run_seed = 1;
    std::size_t num_roots = 64;
    run->add_option("--graph", run_graph, "binary graph file")->required()->check(CLI::ExistingFile);
    run->add_option("--config", run_config, "simulation config JSON")->check(CLI::ExistingFile);
    run->add_option("--root", roots, "root vertex (repeatable)");
    run->add_option("--roots-file", roots_file, "file with one root per line");
    run->add_option("--seed", run_seed, "seed for default root sampling");
    run->add_option("--num-roots", num_roots, "sampled root count when no roots are given");
    run->add_option("--report", report_path, "output report JSON");
    run->add_option("--csv", csv_path, "output per-iteration CSV");

    // model
    auto* model = app.add_subcommand("model", "closed-form performance model sweeps");
    std::string params_path, model_out, len_list = "8,16,32,64";
    std::uint32_t max_pe = 64;
    std::string sweep_kind = "pe";
    model->add_option("--sweep", sweep_kind, "sweep dimension (pe)")
        ->check(CLI::IsMember({"pe"}));
    model->add_option("--len-nl", len_list, "comma-separated Len_nl values");
    model->add_option("--max-pe", max_pe, "largest PE count (power-of-two grid)");
    model->add_option("--params", params_path, "model parameter JSON")->check(CLI::ExistingFile);
    model->add_option("--out", model_out, "output CSV (stdout when omitted)");

    // compare
    auto* cmp = app.add_subcommand("compare", "run several scheduler modes on one graph");
    std::string cmp_graph, cmp_config, cmp_modes = "hybrid,push,pull", cmp_report;
    VertexId cmp_root = 0;
    cmp->add_option("--graph", cmp_graph, "binary graph file")->required()->check(CLI::ExistingFile);
    cmp->add_option("--config", cmp_config, "simulation config JSON")->check(CLI::ExistingFile);
    cmp->add_option("--modes", cmp_modes, "comma-separated mode list");
    cmp->add_option("--root", cmp_root, "root vertex");
    cmp->add_option("--report", cmp_report, "output report JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen_rmat(out_path, scale, degree, pa, pb, pc, seed, dedup);
        if (conv->parsed()) return cmd_convert(in_path, conv_out, undirected);
        if (run->parsed())
            return cmd_run(run_graph, run_config, roots, roots_file, run_seed, num_roots,
                           report_path, csv_path);
        if (model->parsed()) return cmd_model(params_path, len_list, max_pe, model_out);
        if (cmp->parsed()) return cmd_compare(cmp_graph, cmp_config, cmp_modes, cmp_root, cmp_report);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
