#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "wheelramsey/graph.hpp"

namespace wheelramsey::detail {

// Graph on at most 32 vertices with one 32-bit adjacency mask per vertex.
struct SmallGraph {
  int order = 0;
  std::array<std::uint32_t, 32> adj{};
};

SmallGraph to_small_graph(const Graph& g);

// Is there a cycle on exactly `length` vertices whose least vertex is `start`?
bool dp_has_cycle_from(const SmallGraph& g, int start, int length);

// Bit l set iff some cycle of length l has least vertex `start`.
std::uint64_t dp_cycle_lengths_from(const SmallGraph& g, int start);

// Lexicographically least cycle of `length` vertices starting at `start` and
// otherwise using only vertices of `allowed` (which must exclude `start`).
// Complete: nullopt means no such cycle exists.
std::optional<std::vector<Vertex>> dfs_cycle_from(const Graph& g, Vertex start, const VertexSet& allowed, int length);

// Longest cycle found by DFS within a node budget. `complete` reports whether
// the search finished before the budget ran out.
struct LongestCycle {
  int length = 0;
  bool complete = true;
};
LongestCycle dfs_longest_cycle(const Graph& g, std::uint64_t budget);

}  // namespace wheelramsey::detail
