#include "scalabfs/partition.hpp"

namespace scalabfs {

PartitionPlan partition_graph(const Graph& g, std::uint32_t q, std::uint32_t n_pc) {
    if (q == 0 || n_pc == 0) throw ConfigError("partition_graph: q and n_pc must be positive");
    if (q % n_pc != 0) throw ConfigError("partition_graph: q must be a multiple of n_pc");

    PartitionPlan plan;
    plan.num_pes = q;
    plan.num_pcs = n_pc;
    plan.pes_per_pg = q / n_pc;
    plan.subgraphs.resize(q);
    plan.pe_to_pc.resize(q);

    for (std::uint32_t i = 0; i < q; ++i) {
        plan.pe_to_pc[i] = i / plan.pes_per_pg;
        Subgraph& sg = plan.subgraphs[i];
        sg.pe_id = i;
        sg.owned_count = (g.num_vertices > i) ? (g.num_vertices - 1 - i) / q + 1 : 0;
        sg.csr_offsets.reserve(sg.owned_count + 1);
        sg.csc_offsets.reserve(sg.owned_count + 1);
        sg.csr_offsets.push_back(0);
        sg.csc_offsets.push_back(0);
        for (VertexId local = 0; local < sg.owned_count; ++local) {
            VertexId v = i + static_cast<VertexId>(local) * q;
            auto out = g.out_neighbors(v);
            auto in = g.in_neighbors(v);
            sg.csr_edges.insert(sg.csr_edges.end(), out.begin(), out.end());
            sg.csc_edges.insert(sg.csc_edges.end(), in.begin(), in.end());
            sg.csr_offsets.push_back(sg.csr_edges.size());
            sg.csc_offsets.push_back(sg.csc_edges.size());
        }
    }
    return plan;
}

std::vector<std::uint64_t> placement_bytes(const PartitionPlan& plan, std::uint32_t sv_bits) {
    std::vector<std::uint64_t> bytes(plan.num_pcs, 0);
    const std::uint64_t entry_bytes = sv_bits / 8;
    for (std::uint32_t i = 0; i < plan.num_pes; ++i) {
        const Subgraph& sg = plan.subgraphs[i];
        std::uint64_t b = (sg.csr_offsets.size() + sg.csc_offsets.size()) * 8 +
                          (sg.csr_edges.size() + sg.csc_edges.size()) * entry_bytes;
        bytes[plan.pe_to_pc[i]] += b;
    }
    return bytes;
}

}  // namespace scalabfs
