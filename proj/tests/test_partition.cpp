#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "scalabfs/partition.hpp"
#include "scalabfs/rmat.hpp"
#include "test_helpers.hpp"

using namespace scalabfs;

namespace {

// reassembly oracle: stitch all subgraph lists back into global (u,v) pairs
std::vector<std::pair<VertexId, VertexId>> reassemble_csr(const PartitionPlan& plan) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const Subgraph& sg : plan.subgraphs) {
        for (VertexId local = 0; local < sg.owned_count; ++local) {
            VertexId v = sg.pe_id + local * plan.num_pes;
            for (EdgeIndex i = sg.csr_offsets[local]; i < sg.csr_offsets[local + 1]; ++i)
                out.emplace_back(v, sg.csr_edges[i]);
        }
    }
    return out;
}

std::vector<std::pair<VertexId, VertexId>> reassemble_csc(const PartitionPlan& plan) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const Subgraph& sg : plan.subgraphs) {
        for (VertexId local = 0; local < sg.owned_count; ++local) {
            VertexId v = sg.pe_id + local * plan.num_pes;
            for (EdgeIndex i = sg.csc_offsets[local]; i < sg.csc_offsets[local + 1]; ++i)
                out.emplace_back(sg.csc_edges[i], v);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("owner_pe is plain modulo") {
    CHECK(owner_pe(5, 2) == 1);
    CHECK(owner_pe(0, 7) == 0);
    CHECK(owner_pe(17, 4) == 1);
}

TEST_CASE("two-PE split of a six-vertex graph") {
    // vertex intervals [0,2,4] and [1,3,5]
    EdgeList e{6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}}, true};
    Graph g = build_graph(e);
    PartitionPlan plan = partition_graph(g, 2, 2);

    CHECK(plan.subgraphs[0].owned_count == 3);
    CHECK(plan.subgraphs[1].owned_count == 3);
    for (VertexId v : {0u, 2u, 4u}) {
        const Subgraph& sg = plan.subgraphs[0];
        VertexId local = local_index(v, 2);
        auto degree = sg.csr_offsets[local + 1] - sg.csr_offsets[local];
        CHECK(degree == g.out_degree(v));
    }
    // neighbor entries stay global
    const Subgraph& sg0 = plan.subgraphs[0];
    CHECK(std::find(sg0.csr_edges.begin(), sg0.csr_edges.end(), 3) != sg0.csr_edges.end());
}

TEST_CASE("q=1 partition is the whole graph") {
    test::Rng rng(5);
    Graph g = build_graph(test::random_digraph(rng, 17, 0.2));
    PartitionPlan plan = partition_graph(g, 1, 1);
    CHECK(plan.subgraphs.size() == 1);
    CHECK(plan.subgraphs[0].owned_count == g.num_vertices);
    CHECK(plan.subgraphs[0].csr_offsets == g.csr_offsets);
    CHECK(plan.subgraphs[0].csr_edges == g.csr_edges);
    CHECK(plan.subgraphs[0].csc_edges == g.csc_edges);
}

TEST_CASE("reassembling subgraphs reproduces the graph exactly") {
    test::Rng rng(11);
    for (std::uint32_t q : {2u, 4u, 8u}) {
        auto n = static_cast<VertexId>(1 + rng.below(64));
        Graph g = build_graph(test::random_digraph(rng, n, 0.15));
        PartitionPlan plan = partition_graph(g, q, q);

        auto expected = test::edges_from_csr(g);
        auto got = reassemble_csr(plan);
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        CHECK(expected == got);

        auto got_csc = reassemble_csc(plan);
        std::sort(got_csc.begin(), got_csc.end());
        CHECK(expected == got_csc);

        // conservation of edge counts
        std::uint64_t total_csr = 0, total_csc = 0;
        for (const auto& sg : plan.subgraphs) {
            total_csr += sg.csr_edges.size();
            total_csc += sg.csc_edges.size();
        }
        CHECK(total_csr == g.num_edges);
        CHECK(total_csc == g.num_edges);
    }
}

TEST_CASE("ownership totality") {
    test::Rng rng(13);
    Graph g = build_graph(test::random_digraph(rng, 40, 0.1));
    for (std::uint32_t q : {3u, 6u}) {
        PartitionPlan plan = partition_graph(g, q, 3);
        std::vector<int> owners(g.num_vertices, 0);
        for (const auto& sg : plan.subgraphs)
            for (VertexId local = 0; local < sg.owned_count; ++local)
                owners[sg.pe_id + local * q]++;
        CHECK(std::all_of(owners.begin(), owners.end(), [](int c) { return c == 1; }));
    }
}

TEST_CASE("q must be a multiple of n_pc") {
    test::Rng rng(17);
    Graph g = build_graph(test::random_digraph(rng, 8, 0.2));
    CHECK_THROWS_AS(partition_graph(g, 6, 4), ConfigError);
    CHECK_THROWS_AS(partition_graph(g, 0, 1), ConfigError);
}

TEST_CASE("q larger than the vertex count leaves empty subgraphs") {
    EdgeList e{3, {{0, 1}, {1, 2}}, true};
    Graph g = build_graph(e);
    PartitionPlan plan = partition_graph(g, 8, 4);
    CHECK(plan.subgraphs[0].owned_count == 1);
    CHECK(plan.subgraphs[7].owned_count == 0);
    CHECK(plan.subgraphs[7].csr_offsets == std::vector<EdgeIndex>{0});
}

TEST_CASE("pe_to_pc groups PEs contiguously") {
    EdgeList e{4, {{0, 1}}, true};
    Graph g = build_graph(e);
    PartitionPlan plan = partition_graph(g, 8, 4);
    CHECK(plan.pes_per_pg == 2);
    CHECK(plan.pe_to_pc == std::vector<std::uint32_t>{0, 0, 1, 1, 2, 2, 3, 3});
}

TEST_CASE("placement_bytes totals the footprint") {
    SUBCASE("single PC holds everything") {
        test::Rng rng(23);
        Graph g = build_graph(test::random_digraph(rng, 20, 0.2));
        PartitionPlan plan = partition_graph(g, 1, 1);
        auto bytes = placement_bytes(plan, 32);
        REQUIRE(bytes.size() == 1);
        CHECK(bytes[0] == (g.num_vertices + 1) * 8 * 2 + g.num_edges * 4 * 2);
    }
    SUBCASE("empty graph is all zeros") {
        EdgeList e{0, {}, true};
        Graph g = build_graph(e);
        PartitionPlan plan = partition_graph(g, 4, 2);
        auto bytes = placement_bytes(plan, 32);
        // only the offset sentinel entries remain
        for (auto b : bytes) CHECK(b == 2 * 2 * 8);
    }
}

TEST_CASE("hashed placement balances an RMAT graph across PCs") {
    RmatParams p;
    p.scale = 18;
    p.avg_degree = 16;
    p.seed = 1;
    Graph g = build_graph(to_directed(generate_rmat(p)));
    PartitionPlan plan = partition_graph(g, 32, 32);
    auto bytes = placement_bytes(plan, 32);
    auto [mn, mx] = std::minmax_element(bytes.begin(), bytes.end());
    CHECK(*mn > 0);
    CHECK(static_cast<double>(*mx) / static_cast<double>(*mn) <= 1.5);
}
