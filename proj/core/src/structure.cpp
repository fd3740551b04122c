#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

#include "cycle_detail.hpp"
#include "wheelramsey/detection.hpp"

namespace wheelramsey {

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) break;
      for (Vertex w : g.neighborhood(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

namespace {

void require_exact_regime(const Graph& g) {
  if (g.order() > kExactStructureMaxOrder) {
    throw std::domain_error("exact cycle structure is limited to order " + std::to_string(kExactStructureMaxOrder) +
                            ", got " + std::to_string(g.order()));
  }
}

// Components of the 2-core, each as its own graph.
std::vector<Graph> cyclic_components(const Graph& g) {
  const InducedSubgraph core = induced_subgraph(g, two_core(g));
  std::vector<Graph> out;
  for (const auto& comp : connected_components(core.graph)) {
    if (comp.size() >= 3) out.push_back(induced_subgraph(core.graph, comp).graph);
  }
  return out;
}

std::uint64_t dp_census(const Graph& comp) {
  const detail::SmallGraph sg = detail::to_small_graph(comp);
  std::uint64_t lengths = 0;
  for (int start = 0; start + 2 < sg.order; ++start) lengths |= detail::dp_cycle_lengths_from(sg, start);
  return lengths;
}

}  // namespace

std::vector<int> cycle_lengths(const Graph& g) {
  require_exact_regime(g);
  std::uint64_t lengths = 0;
  for (const Graph& comp : cyclic_components(g)) {
    if (comp.order() <= kSubsetDpMaxOrder) {
      lengths |= dp_census(comp);
    } else {
      for (int len = 3; len <= comp.order(); ++len)
        if (find_cycle_of_length(comp, len)) lengths |= std::uint64_t{1} << len;
    }
  }
  std::vector<int> out;
  for (; lengths != 0; lengths &= lengths - 1) out.push_back(std::countr_zero(lengths));
  return out;
}

Circumference circumference(const Graph& g, std::uint64_t dfs_budget) {
  if (g.order() > kExactStructureMaxOrder) {
    return {detail::dfs_longest_cycle(g, dfs_budget).length, false};
  }
  int best = 0;
  for (const Graph& comp : cyclic_components(g)) {
    if (comp.order() <= best) continue;
    if (comp.order() <= kSubsetDpMaxOrder) {
      const std::uint64_t lengths = dp_census(comp);
      if (lengths != 0) best = std::max(best, 63 - std::countl_zero(lengths));
    } else {
      for (int len = comp.order(); len > best; --len) {
        if (find_cycle_of_length(comp, len)) {
          best = len;
          break;
        }
      }
    }
  }
  return {best, true};
}

Pancyclicity weak_pancyclicity(const Graph& g) {
  require_exact_regime(g);
  Pancyclicity out;
  const std::vector<int> lengths = cycle_lengths(g);
  if (lengths.empty()) return out;
  out.girth = lengths.front();
  out.circumference = lengths.back();
  for (int len = lengths.front(); len <= lengths.back(); ++len)
    if (!std::binary_search(lengths.begin(), lengths.end(), len)) out.missing.push_back(len);
  out.weakly_pancyclic = out.missing.empty();
  return out;
}

bool is_weakly_pancyclic(const Graph& g) { return weak_pancyclicity(g).weakly_pancyclic; }

}  // namespace wheelramsey
