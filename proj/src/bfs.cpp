#include "scalabfs/bfs.hpp"

#include <deque>

namespace scalabfs {

const char* to_string(BfsMode m) { return m == BfsMode::push ? "push" : "pull"; }

void ModePolicy::validate() const {
    if (kind == Kind::adaptive) {
        if (!(push_to_pull_threshold > 0.0 && push_to_pull_threshold < 1.0) ||
            !(pull_to_push_threshold > 0.0 && pull_to_push_threshold < 1.0))
            throw ConfigError("ModePolicy: adaptive thresholds must lie in (0,1)");
    }
    if (kind == Kind::fixed_schedule && pull_end < pull_start)
        throw ConfigError("ModePolicy: fixed schedule needs pull_start <= pull_end");
}

ModePolicy::Kind parse_policy_kind(const std::string& name) {
    if (name == "hybrid" || name == "adaptive") return ModePolicy::Kind::adaptive;
    if (name == "push") return ModePolicy::Kind::push_only;
    if (name == "pull") return ModePolicy::Kind::pull_only;
    if (name == "fixed" || name == "fixed-schedule") return ModePolicy::Kind::fixed_schedule;
    throw ConfigError("unknown mode policy \"" + name + "\"");
}

const char* to_string(ModePolicy::Kind k) {
    switch (k) {
        case ModePolicy::Kind::push_only: return "push";
        case ModePolicy::Kind::pull_only: return "pull";
        case ModePolicy::Kind::adaptive: return "hybrid";
        case ModePolicy::Kind::fixed_schedule: return "fixed";
    }
    return "?";
}

BfsState::BfsState(VertexId num_vertices, VertexId root)
    : level(num_vertices, kUnreached),
      current_frontier(num_vertices),
      next_frontier(num_vertices),
      visited_map(num_vertices) {
    if (root >= num_vertices) throw ConfigError("root vertex out of range");
    level[root] = 0;
    current_frontier.set(root);
    visited_map.set(root);
}

std::vector<Level> bfs_oracle(const Graph& g, VertexId root) {
    if (root >= g.num_vertices) throw ConfigError("root vertex out of range");
    std::vector<Level> level(g.num_vertices, kUnreached);
    level[root] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId v : g.out_neighbors(u)) {
            if (level[v] == kUnreached) {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return level;
}

IterationStats push_iteration(const Graph& g, BfsState& s) {
    IterationStats stats;
    stats.mode = BfsMode::push;
    for (VertexId i = 0; i < g.num_vertices; ++i) {
        if (!s.current_frontier.get(i)) continue;
        ++stats.active_or_unvisited_count;
        ++stats.offset_words_read;
        for (VertexId v : g.out_neighbors(i)) {
            ++stats.edges_examined;
            if (!s.visited_map.get(v)) {
                s.next_frontier.set(v);
                s.visited_map.set(v);
                s.level[v] = s.bfs_level + 1;
                ++stats.vertices_activated;
            }
        }
    }
    return stats;
}

IterationStats pull_iteration(const Graph& g, BfsState& s) {
    IterationStats stats;
    stats.mode = BfsMode::pull;
    for (VertexId i = 0; i < g.num_vertices; ++i) {
        if (s.visited_map.get(i)) continue;
        ++stats.active_or_unvisited_count;
        ++stats.offset_words_read;
        for (VertexId u : g.in_neighbors(i)) {
            ++stats.edges_examined;
            if (s.current_frontier.get(u)) {
                s.next_frontier.set(i);
                s.visited_map.set(i);
                s.level[i] = s.bfs_level + 1;
                ++stats.vertices_activated;
                break;  // any one active parent suffices
            }
        }
    }
    return stats;
}

void advance(BfsState& s) {
    s.current_frontier.swap(s.next_frontier);
    s.next_frontier.clear();
    ++s.bfs_level;
}

BfsMode decide_mode(const ModePolicy& policy, const IterationStats* prev, const Graph& g,
                    const BfsState& s) {
    switch (policy.kind) {
        case ModePolicy::Kind::push_only:
            return BfsMode::push;
        case ModePolicy::Kind::pull_only:
            return BfsMode::pull;
        case ModePolicy::Kind::fixed_schedule: {
            Level it = s.bfs_level;
            return (it >= policy.pull_start && it < policy.pull_end) ? BfsMode::pull : BfsMode::push;
        }
        case ModePolicy::Kind::adaptive:
            break;
    }
    if (prev == nullptr) return BfsMode::push;

    if (prev->mode == BfsMode::push) {
        std::uint64_t frontier_out_edges = 0;
        for (VertexId v = 0; v < g.num_vertices; ++v)
            if (s.current_frontier.get(v)) frontier_out_edges += g.out_degree(v);
        double threshold = policy.push_to_pull_threshold * static_cast<double>(g.num_edges);
        return static_cast<double>(frontier_out_edges) > threshold ? BfsMode::pull : BfsMode::push;
    }
    std::uint64_t frontier_size = s.current_frontier.popcount();
    double threshold = policy.pull_to_push_threshold * static_cast<double>(g.num_vertices);
    return static_cast<double>(frontier_size) < threshold ? BfsMode::push : BfsMode::pull;
}

BfsResult run_bfs(const Graph& g, VertexId root, const ModePolicy& policy) {
    policy.validate();
    BfsState s(g.num_vertices, root);
    BfsResult result;
    // An iteration that activates nothing ends the traversal; this also
    // terminates pull mode on graphs with unreachable vertices.
    for (VertexId guard = 0; guard <= g.num_vertices; ++guard) {
        const IterationStats* prev = result.iterations.empty() ? nullptr : &result.iterations.back();
        BfsMode mode = decide_mode(policy, prev, g, s);
        IterationStats stats =
            (mode == BfsMode::push) ? push_iteration(g, s) : pull_iteration(g, s);
        result.iterations.push_back(stats);
        advance(s);
        if (stats.vertices_activated == 0) break;
    }
    result.levels = std::move(s.level);
    return result;
}

std::uint64_t level_checksum(const std::vector<Level>& levels) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Level v : levels) {
        h ^= v;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace scalabfs
