#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "scalabfs/bfs.hpp"
#include "scalabfs/crossbar.hpp"
#include "scalabfs/edge_list.hpp"
#include "scalabfs/graph_io.hpp"
#include "scalabfs/partition.hpp"
#include "scalabfs/perf_model.hpp"
#include "scalabfs/rmat.hpp"
#include "scalabfs/sim_json.hpp"
#include "scalabfs/simulator.hpp"

namespace py = pybind11;
using namespace scalabfs;

namespace {

ModePolicy policy_from_name(const std::string& mode, double alpha, double beta) {
    ModePolicy p;
    p.kind = parse_policy_kind(mode);
    p.push_to_pull_threshold = alpha;
    p.pull_to_push_threshold = beta;
    return p;
}

py::dict report_to_dict(const SimReport& r) {
    py::dict d;
    d["total_cycles"] = r.total_cycles;
    d["wall_time_s"] = r.wall_time_s;
    d["traversed_edges"] = r.traversed_edges;
    d["gteps"] = r.gteps;
    d["aggregated_bandwidth_gbps"] = r.aggregated_bandwidth_gbps;
    d["per_pc_bytes_read"] = r.per_pc_bytes_read;
    d["levels"] = r.levels;
    d["levels_checksum"] = r.levels_checksum;
    py::list iters;
    for (const auto& it : r.per_iteration) {
        py::dict ji;
        ji["mode"] = to_string(it.stats.mode);
        ji["active_or_unvisited_count"] = it.stats.active_or_unvisited_count;
        ji["edges_examined"] = it.stats.edges_examined;
        ji["vertices_activated"] = it.stats.vertices_activated;
        ji["offset_words_read"] = it.stats.offset_words_read;
        ji["cycles"] = it.cycles;
        ji["bytes_read"] = it.bytes_read;
        ji["bandwidth_gbps"] = it.bandwidth_gbps;
        iters.append(ji);
    }
    d["per_iteration"] = iters;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "hybrid push/pull BFS engine, accelerator simulator and performance model";
    m.attr("__version__") = "0.1.0";
    m.attr("UNREACHED") = kUnreached;

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<SimFault>(m, "SimFault", PyExc_RuntimeError);

    py::class_<EdgeList>(m, "EdgeList")
        .def(py::init<>())
        .def_readwrite("num_vertices", &EdgeList::num_vertices)
        .def_readwrite("edges", &EdgeList::edges)
        .def_readwrite("directed", &EdgeList::directed)
        .def("__len__", [](const EdgeList& e) { return e.edges.size(); })
        .def("__repr__", [](const EdgeList& e) {
            std::ostringstream s;
            s << "EdgeList(n=" << e.num_vertices << ", edges=" << e.edges.size()
              << (e.directed ? ", directed)" : ", undirected)");
            return s.str();
        });

    py::class_<Graph>(m, "Graph")
        .def_readonly("num_vertices", &Graph::num_vertices)
        .def_readonly("num_edges", &Graph::num_edges)
        .def("out_degree", [](const Graph& g, VertexId v) { return g.out_degree(v); })
        .def("in_degree", [](const Graph& g, VertexId v) { return g.in_degree(v); })
        .def("out_neighbors",
             [](const Graph& g, VertexId v) {
                 auto s = g.out_neighbors(v);
                 return std::vector<VertexId>(s.begin(), s.end());
             })
        .def("in_neighbors",
             [](const Graph& g, VertexId v) {
                 auto s = g.in_neighbors(v);
                 return std::vector<VertexId>(s.begin(), s.end());
             })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.num_vertices << ", m=" << g.num_edges << ")";
            return s.str();
        });

    m.def("generate_rmat",
          [](std::uint32_t scale, std::uint32_t avg_degree, double a, double b, double c,
             std::uint64_t seed) { return generate_rmat({scale, avg_degree, a, b, c, seed}); },
          py::arg("scale"), py::arg("avg_degree") = 16, py::arg("a") = 0.57, py::arg("b") = 0.19,
          py::arg("c") = 0.19, py::arg("seed") = 1);
    m.def("to_directed", &to_directed, py::arg("edge_list"));
    m.def("dedup_edges", &dedup_edges, py::arg("edge_list"));
    m.def("load_edge_list_text",
          [](const std::string& text, bool directed) {
              std::istringstream in(text);
              return load_edge_list(in, directed);
          },
          py::arg("text"), py::arg("directed") = true);
    m.def("build_graph", &build_graph, py::arg("edge_list"));
    m.def("save_graph", &save_graph, py::arg("path"), py::arg("graph"));
    m.def("load_graph", &load_graph, py::arg("path"));

    m.def("bfs_oracle", &bfs_oracle, py::arg("graph"), py::arg("root"));
    m.def("run_bfs",
          [](const Graph& g, VertexId root, const std::string& mode, double alpha, double beta) {
              BfsResult r = run_bfs(g, root, policy_from_name(mode, alpha, beta));
              py::list iters;
              for (const auto& it : r.iterations) {
                  py::dict d;
                  d["mode"] = to_string(it.mode);
                  d["active_or_unvisited_count"] = it.active_or_unvisited_count;
                  d["edges_examined"] = it.edges_examined;
                  d["vertices_activated"] = it.vertices_activated;
                  d["offset_words_read"] = it.offset_words_read;
                  iters.append(d);
              }
              return py::make_tuple(r.levels, iters);
          },
          py::arg("graph"), py::arg("root"), py::arg("mode") = "hybrid", py::arg("alpha") = 0.05,
          py::arg("beta") = 0.02);
    m.def("level_checksum", &level_checksum, py::arg("levels"));

    m.def("partition_info",
          [](const Graph& g, std::uint32_t q, std::uint32_t n_pc) {
              PartitionPlan plan = partition_graph(g, q, n_pc);
              py::dict d;
              d["num_pes"] = plan.num_pes;
              d["num_pcs"] = plan.num_pcs;
              d["pes_per_pg"] = plan.pes_per_pg;
              d["pe_to_pc"] = plan.pe_to_pc;
              std::vector<VertexId> owned;
              std::vector<std::uint64_t> csr_edges, csc_edges;
              for (const auto& sg : plan.subgraphs) {
                  owned.push_back(sg.owned_count);
                  csr_edges.push_back(sg.csr_edges.size());
                  csc_edges.push_back(sg.csc_edges.size());
              }
              d["owned_count"] = owned;
              d["csr_edges"] = csr_edges;
              d["csc_edges"] = csc_edges;
              return d;
          },
          py::arg("graph"), py::arg("q"), py::arg("n_pc"));
    m.def("placement_bytes",
          [](const Graph& g, std::uint32_t q, std::uint32_t n_pc, std::uint32_t sv_bits) {
              return placement_bytes(partition_graph(g, q, n_pc), sv_bits);
          },
          py::arg("graph"), py::arg("q"), py::arg("n_pc"), py::arg("sv_bits") = 32);

    m.def("fifo_count",
          [](const std::vector<std::uint32_t>& factors) {
              return fifo_count(CrossbarTopology::layered(factors));
          },
          py::arg("factors"));
    m.def("route_path",
          [](const std::vector<std::uint32_t>& factors, VertexId vid, std::uint32_t input_port) {
              auto path = route_path(CrossbarTopology::layered(factors), vid, input_port);
              py::list out;
              for (const auto& hop : path)
                  out.append(py::make_tuple(hop.layer, hop.switch_id, hop.output_port));
              return out;
          },
          py::arg("factors"), py::arg("vid"), py::arg("input_port"));

    m.def("data_width", &data_width, py::arg("n_pe"), py::arg("sv_bits") = 32);
    m.def("channel_bw",
          [](double dw_bits, double freq_hz, double bw_max) {
              auto bw = channel_bw(dw_bits, freq_hz, bw_max);
              return py::make_tuple(bw.bytes_per_s, bw.saturated);
          },
          py::arg("dw_bits"), py::arg("freq_hz"), py::arg("bw_max") = 13.27e9);
    m.def("neighbor_fraction", &neighbor_fraction, py::arg("len_nl"), py::arg("sv_bits"),
          py::arg("dw_bits"));

    auto params_from_kwargs = [](std::uint32_t n_pe, std::uint32_t n_pc, std::uint32_t sv_bits,
                                 double freq_hz, double bw_max, double len_nl, std::uint32_t k) {
        PerfParams p;
        p.n_pe = n_pe;
        p.n_pc = n_pc;
        p.sv_bits = sv_bits;
        p.freq_hz = freq_hz;
        p.bw_max = bw_max;
        p.len_nl = len_nl;
        p.k = k;
        return p;
    };
    m.def("perf_pg",
          [=](std::uint32_t n_pe, double len_nl, std::uint32_t n_pc, std::uint32_t sv_bits,
              double freq_hz, double bw_max, std::uint32_t k) {
              return perf_pg(params_from_kwargs(n_pe, n_pc, sv_bits, freq_hz, bw_max, len_nl, k));
          },
          py::arg("n_pe"), py::arg("len_nl"), py::arg("n_pc") = 1, py::arg("sv_bits") = 32,
          py::arg("freq_hz") = 100e6, py::arg("bw_max") = 13.27e9, py::arg("k") = 1);
    m.def("perf_total",
          [=](std::uint32_t n_pe, double len_nl, std::uint32_t n_pc, std::uint32_t sv_bits,
              double freq_hz, double bw_max, std::uint32_t k) {
              return perf_total(params_from_kwargs(n_pe, n_pc, sv_bits, freq_hz, bw_max, len_nl, k));
          },
          py::arg("n_pe"), py::arg("len_nl"), py::arg("n_pc") = 32, py::arg("sv_bits") = 32,
          py::arg("freq_hz") = 100e6, py::arg("bw_max") = 13.27e9, py::arg("k") = 1);
    m.def("resource_check",
          [=](std::uint32_t n_pe, std::uint32_t k, double r_fifo, double r_pe, double r_limit) {
              PerfParams p;
              p.n_pe = n_pe;
              p.k = k;
              p.r_fifo = r_fifo;
              p.r_pe = r_pe;
              p.r_limit = r_limit;
              auto r = resource_check(p);
              py::dict d;
              d["fifos"] = r.fifos;
              d["luts"] = r.luts;
              d["feasible"] = r.feasible;
              d["used_closed_form"] = r.used_closed_form;
              return d;
          },
          py::arg("n_pe"), py::arg("k") = 1, py::arg("r_fifo") = 227.0, py::arg("r_pe") = 2916.0,
          py::arg("r_limit") = 1304000.0);
    m.def("sweep",
          [=](const std::vector<std::uint32_t>& n_pe_grid, const std::vector<double>& len_nl,
              std::uint32_t n_pc, std::uint32_t sv_bits, double freq_hz, double bw_max,
              std::uint32_t k) {
              PerfParams base = params_from_kwargs(1, n_pc, sv_bits, freq_hz, bw_max, 1.0, k);
              py::list out;
              for (const auto& row : sweep(base, n_pe_grid, len_nl)) {
                  py::dict d;
                  d["n_pe"] = row.n_pe;
                  d["len_nl"] = row.len_nl;
                  d["dw_bits"] = row.dw_bits;
                  d["saturated"] = row.saturated;
                  d["perf_pg_gteps"] = row.perf_pg_gteps;
                  d["perf_total_gteps"] = row.perf_total_gteps;
                  d["feasible"] = row.feasible;
                  out.append(d);
              }
              return out;
          },
          py::arg("n_pe_grid"), py::arg("len_nl"), py::arg("n_pc") = 1, py::arg("sv_bits") = 32,
          py::arg("freq_hz") = 100e6, py::arg("bw_max") = 13.27e9, py::arg("k") = 1);

    m.def("run_simulation",
          [](const Graph& g, VertexId root, const std::string& config_json) {
              SimConfig cfg = config_json.empty()
                                  ? SimConfig{}
                                  : config_from_json(nlohmann::json::parse(config_json));
              return report_to_dict(run_simulation(cfg, g, root));
          },
          py::arg("graph"), py::arg("root"), py::arg("config_json") = "");
}
