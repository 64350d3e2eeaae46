#pragma once

#include <string>
#include <vector>

#include "scalabfs/bitmap.hpp"
#include "scalabfs/graph.hpp"

namespace scalabfs {

enum class BfsMode { push, pull };

const char* to_string(BfsMode m);

struct IterationStats {
    BfsMode mode = BfsMode::push;
    std::uint64_t active_or_unvisited_count = 0;
    std::uint64_t edges_examined = 0;
    std::uint64_t vertices_activated = 0;
    std::uint64_t offset_words_read = 0;
};

/// Scheduler policy choosing per-iteration processing mode.
///
/// adaptive (default): frontier-density heuristic — switch push->pull when
/// the frontier's out-edge sum exceeds alpha*|E|, switch pull->push when the
/// frontier shrinks below beta*|V|. fixed_schedule: push for iterations
/// [0,pull_start), pull for [pull_start,pull_end), push afterwards.
struct ModePolicy {
    enum class Kind { push_only, pull_only, adaptive, fixed_schedule };
    Kind kind = Kind::adaptive;
    double push_to_pull_threshold = 0.05;  // alpha, fraction of |E|
    double pull_to_push_threshold = 0.02;  // beta, fraction of |V|
    std::uint32_t pull_start = 2;          // fixed schedule only
    std::uint32_t pull_end = 7;

    static ModePolicy push_only() { return {Kind::push_only}; }
    static ModePolicy pull_only() { return {Kind::pull_only}; }
    static ModePolicy adaptive(double alpha = 0.05, double beta = 0.02) {
        return {Kind::adaptive, alpha, beta};
    }
    static ModePolicy fixed(std::uint32_t pull_start, std::uint32_t pull_end) {
        return {Kind::fixed_schedule, 0.05, 0.02, pull_start, pull_end};
    }

    void validate() const;
};

/// Named policy parsing for configs and CLI ("hybrid", "push", "pull",
/// "fixed"). Throws ConfigError on unknown names.
ModePolicy::Kind parse_policy_kind(const std::string& name);
const char* to_string(ModePolicy::Kind k);

/// Working set of Algorithm-style bitmap BFS: level array plus the three
/// bitmaps (current frontier, next frontier, visited map).
struct BfsState {
    std::vector<Level> level;
    Bitmap current_frontier;
    Bitmap next_frontier;
    Bitmap visited_map;
    Level bfs_level = 0;

    BfsState() = default;
    BfsState(VertexId num_vertices, VertexId root);
};

struct BfsResult {
    std::vector<Level> levels;
    std::vector<IterationStats> iterations;
};

/// Plain queue BFS; the reference oracle every other engine is checked
/// against. Throws ConfigError if root is out of range.
std::vector<Level> bfs_oracle(const Graph& g, VertexId root);

/// One push iteration: frontier vertices write their unvisited out-neighbors
/// into the next frontier. Frontiers are not swapped.
IterationStats push_iteration(const Graph& g, BfsState& s);

/// One pull iteration: unvisited vertices scan their in-neighbors and
/// activate on the first frontier parent (early exit).
IterationStats pull_iteration(const Graph& g, BfsState& s);

/// Iteration boundary: current <- next, next cleared, bfs_level incremented.
void advance(BfsState& s);

/// Mode for the upcoming iteration. prev is null on the first iteration.
BfsMode decide_mode(const ModePolicy& policy, const IterationStats* prev, const Graph& g,
                    const BfsState& s);

/// Full traversal. Levels equal bfs_oracle for every policy.
BfsResult run_bfs(const Graph& g, VertexId root, const ModePolicy& policy = {});

/// Order-insensitive FNV-1a style digest of a level array, used to compare
/// results across engines and runs.
std::uint64_t level_checksum(const std::vector<Level>& levels);

}  // namespace scalabfs
