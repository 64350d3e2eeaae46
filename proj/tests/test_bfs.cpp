#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "scalabfs/bfs.hpp"
#include "scalabfs/rmat.hpp"
#include "test_helpers.hpp"

using namespace scalabfs;

namespace {

// all-pairs hop distances by Floyd-Warshall; independent of any BFS code
std::vector<Level> floyd_warshall_from(const Graph& g, VertexId root) {
    const VertexId n = g.num_vertices;
    const std::uint64_t inf = std::uint64_t{1} << 40;
    std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, inf));
    for (VertexId v = 0; v < n; ++v) d[v][v] = 0;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.out_neighbors(u)) d[u][v] = std::min<std::uint64_t>(d[u][v], 1);
    for (VertexId k = 0; k < n; ++k)
        for (VertexId i = 0; i < n; ++i)
            for (VertexId j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    std::vector<Level> out(n);
    for (VertexId v = 0; v < n; ++v)
        out[v] = d[root][v] >= inf ? kUnreached : static_cast<Level>(d[root][v]);
    return out;
}

Graph path3_plus_isolated() {
    EdgeList e{4, {{0, 1}, {1, 2}}, true};
    return build_graph(e);
}

}  // namespace

TEST_CASE("oracle on a line graph") {
    Graph g = path3_plus_isolated();
    auto levels = bfs_oracle(g, 0);
    CHECK(levels[0] == 0);
    CHECK(levels[1] == 1);
    CHECK(levels[2] == 2);
    CHECK(levels[3] == kUnreached);
}

TEST_CASE("oracle rejects out-of-range roots") {
    Graph g = path3_plus_isolated();
    CHECK_THROWS_AS(bfs_oracle(g, 4), ConfigError);
    CHECK_THROWS_AS(run_bfs(g, 99), ConfigError);
}

TEST_CASE("oracle equals Floyd-Warshall hop distances") {
    test::Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        auto n = static_cast<VertexId>(2 + rng.below(24));
        Graph g = build_graph(test::random_digraph(rng, n, 0.12));
        auto root = static_cast<VertexId>(rng.below(n));
        CHECK(bfs_oracle(g, root) == floyd_warshall_from(g, root));
    }
}

TEST_CASE("push_iteration activates exactly the root's out-neighbors") {
    Graph g = path3_plus_isolated();
    BfsState s(g.num_vertices, 0);
    IterationStats st = push_iteration(g, s);
    CHECK(st.mode == BfsMode::push);
    CHECK(st.active_or_unvisited_count == 1);
    CHECK(st.edges_examined == 1);
    CHECK(st.vertices_activated == 1);
    CHECK(s.next_frontier.get(1));
    CHECK(s.level[1] == 1);
    CHECK_FALSE(s.next_frontier.get(2));
}

TEST_CASE("push_iteration counts a shared child once") {
    EdgeList e{3, {{0, 2}, {1, 2}}, true};
    Graph g = build_graph(e);
    BfsState s(g.num_vertices, 0);
    s.current_frontier.set(1);
    s.visited_map.set(1);
    s.level[1] = 0;
    IterationStats st = push_iteration(g, s);
    CHECK(st.edges_examined == 2);
    CHECK(st.vertices_activated == 1);
    CHECK(s.level[2] == 1);
}

TEST_CASE("push_iteration with an empty frontier is a no-op") {
    Graph g = path3_plus_isolated();
    BfsState s(g.num_vertices, 0);
    s.current_frontier.reset(0);
    IterationStats st = push_iteration(g, s);
    CHECK(st.edges_examined == 0);
    CHECK(st.vertices_activated == 0);
    CHECK_FALSE(s.next_frontier.any());
}

TEST_CASE("pull_iteration on a star activates all leaves") {
    EdgeList e{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, true};
    Graph g = build_graph(e);
    BfsState s(g.num_vertices, 0);
    IterationStats st = pull_iteration(g, s);
    CHECK(st.mode == BfsMode::pull);
    CHECK(st.active_or_unvisited_count == 4);
    CHECK(st.vertices_activated == 4);
    for (VertexId v = 1; v < 5; ++v) CHECK(s.level[v] == 1);
}

TEST_CASE("pull_iteration when everything is visited is a no-op") {
    Graph g = path3_plus_isolated();
    BfsState s(g.num_vertices, 0);
    for (VertexId v = 0; v < 4; ++v) s.visited_map.set(v);
    IterationStats st = pull_iteration(g, s);
    CHECK(st.active_or_unvisited_count == 0);
    CHECK(st.edges_examined == 0);
    CHECK(st.vertices_activated == 0);
}

TEST_CASE("pull early exit stops at the first active parent") {
    // vertex 3 has parents 0,1,2; only 0 is active and sorts first
    EdgeList e{4, {{0, 3}, {1, 3}, {2, 3}}, true};
    Graph g = build_graph(e);
    BfsState s(g.num_vertices, 0);
    IterationStats st = pull_iteration(g, s);
    // unvisited 1,2,3: vertices 1 and 2 have no parents; 3 stops after parent 0
    CHECK(st.edges_examined == 1);
    CHECK(st.vertices_activated == 1);
    CHECK(s.level[3] == 1);
}

TEST_CASE("advance swaps and clears") {
    Graph g = path3_plus_isolated();
    BfsState s(g.num_vertices, 0);
    s.next_frontier.set(3);
    advance(s);
    CHECK(s.bfs_level == 1);
    CHECK(s.current_frontier.get(3));
    CHECK_FALSE(s.current_frontier.get(0));
    CHECK_FALSE(s.next_frontier.any());

    advance(s);
    advance(s);
    CHECK_FALSE(s.current_frontier.any());
    CHECK_FALSE(s.next_frontier.any());
    CHECK(s.bfs_level == 3);
}

TEST_CASE("decide_mode: first iteration is push") {
    Graph g = path3_plus_isolated();
    BfsState s(g.num_vertices, 0);
    CHECK(decide_mode(ModePolicy::adaptive(), nullptr, g, s) == BfsMode::push);
}

TEST_CASE("decide_mode: heavy frontier switches to pull") {
    EdgeList e{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}, true};
    Graph g = build_graph(e);
    BfsState s(g.num_vertices, 0);
    IterationStats prev;
    prev.mode = BfsMode::push;
    // frontier {0} has 3 out-edges > 0.05 * 4
    CHECK(decide_mode(ModePolicy::adaptive(0.05, 0.02), &prev, g, s) == BfsMode::pull);
    // with a huge alpha it stays in push
    CHECK(decide_mode(ModePolicy::adaptive(0.99, 0.02), &prev, g, s) == BfsMode::push);
}

TEST_CASE("decide_mode: tiny thresholds degenerate to pull after iteration 1") {
    test::Rng rng(41);
    Graph g = build_graph(test::random_digraph(rng, 24, 0.15));
    ModePolicy p = ModePolicy::adaptive(1e-12, 1e-12);
    BfsResult r = run_bfs(g, 0, p);
    for (std::size_t i = 1; i < r.iterations.size(); ++i)
        CHECK(r.iterations[i].mode == BfsMode::pull);
    CHECK(r.iterations[0].mode == BfsMode::push);
}

TEST_CASE("decide_mode: small frontier switches back to push") {
    Graph g = path3_plus_isolated();
    BfsState s(g.num_vertices, 0);
    IterationStats prev;
    prev.mode = BfsMode::pull;
    // frontier of one vertex < 0.9 * 4
    CHECK(decide_mode(ModePolicy::adaptive(0.05, 0.9), &prev, g, s) == BfsMode::push);
}

TEST_CASE("fixed schedule follows iteration indices") {
    ModePolicy p = ModePolicy::fixed(1, 3);
    Graph g = path3_plus_isolated();
    BfsState s(g.num_vertices, 0);
    CHECK(decide_mode(p, nullptr, g, s) == BfsMode::push);
    s.bfs_level = 1;
    CHECK(decide_mode(p, nullptr, g, s) == BfsMode::pull);
    s.bfs_level = 2;
    CHECK(decide_mode(p, nullptr, g, s) == BfsMode::pull);
    s.bfs_level = 3;
    CHECK(decide_mode(p, nullptr, g, s) == BfsMode::push);
}

TEST_CASE("policy validation") {
    CHECK_THROWS_AS(ModePolicy::adaptive(0.0, 0.5).validate(), ConfigError);
    CHECK_THROWS_AS(ModePolicy::adaptive(0.5, 1.0).validate(), ConfigError);
    CHECK_THROWS_AS(ModePolicy::fixed(5, 2).validate(), ConfigError);
    CHECK_THROWS_AS(parse_policy_kind("bogus"), ConfigError);
    CHECK(parse_policy_kind("hybrid") == ModePolicy::Kind::adaptive);
}

TEST_CASE("run_bfs levels equal the oracle for every policy") {
    test::Rng rng(53);
    const ModePolicy policies[] = {ModePolicy::push_only(), ModePolicy::pull_only(),
                                   ModePolicy::adaptive(), ModePolicy::fixed(1, 4)};
    for (int trial = 0; trial < 60; ++trial) {
        auto n = static_cast<VertexId>(1 + rng.below(64));
        Graph g = build_graph(test::random_digraph(rng, n, rng.unit() * 0.25));
        auto root = static_cast<VertexId>(rng.below(n));
        auto expected = bfs_oracle(g, root);
        for (const ModePolicy& p : policies) {
            BfsResult r = run_bfs(g, root, p);
            CHECK(r.levels == expected);
            CHECK(r.iterations.size() <= g.num_vertices + 1);
            for (const auto& it : r.iterations)
                CHECK(it.vertices_activated <= it.edges_examined);
        }
    }
}

TEST_CASE("push-only and pull-only runs agree on random graphs") {
    test::Rng rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        auto n = static_cast<VertexId>(2 + rng.below(40));
        Graph g = build_graph(test::random_digraph(rng, n, 0.1));
        auto push = run_bfs(g, 0, ModePolicy::push_only());
        auto pull = run_bfs(g, 0, ModePolicy::pull_only());
        CHECK(push.levels == pull.levels);
        CHECK(level_checksum(push.levels) == level_checksum(pull.levels));
    }
}

TEST_CASE("root with no out-edges finishes in one iteration") {
    EdgeList e{3, {{1, 2}}, true};
    Graph g = build_graph(e);
    BfsResult r = run_bfs(g, 0);
    CHECK(r.iterations.size() == 1);
    CHECK(r.levels[0] == 0);
    CHECK(r.levels[1] == kUnreached);
    CHECK(r.levels[2] == kUnreached);
}

TEST_CASE("visited monotone and level written once") {
    test::Rng rng(61);
    Graph g = build_graph(test::random_digraph(rng, 32, 0.1));
    BfsState s(g.num_vertices, 0);
    std::vector<Level> seen(g.num_vertices, kUnreached);
    seen[0] = 0;
    std::size_t prev_visited = s.visited_map.popcount();
    for (int iter = 0; iter < 40; ++iter) {
        IterationStats st = push_iteration(g, s);
        CHECK(s.visited_map.popcount() >= prev_visited);
        prev_visited = s.visited_map.popcount();
        for (VertexId v = 0; v < g.num_vertices; ++v) {
            if (seen[v] != kUnreached) CHECK(s.level[v] == seen[v]);  // never rewritten
            seen[v] = s.level[v];
        }
        advance(s);
        // frontier soundness: current frontier = vertices at level bfs_level
        for (VertexId v = 0; v < g.num_vertices; ++v)
            CHECK(s.current_frontier.get(v) == (s.level[v] == s.bfs_level));
        if (st.vertices_activated == 0) break;
    }
}

TEST_CASE("hybrid examines no more edges than push-only at RMAT scale") {
    RmatParams p;
    p.scale = 14;
    p.avg_degree = 16;
    p.seed = 8;
    Graph g = build_graph(to_directed(generate_rmat(p)));
    auto hybrid = run_bfs(g, 1, ModePolicy::adaptive());
    auto push = run_bfs(g, 1, ModePolicy::push_only());
    CHECK(hybrid.levels == push.levels);
    auto total = [](const BfsResult& r) {
        std::uint64_t sum = 0;
        for (const auto& it : r.iterations) sum += it.edges_examined;
        return sum;
    };
    CHECK(total(hybrid) <= total(push));
}
