#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <string>

#include "cycle_detail.hpp"
#include "wheelramsey/detection.hpp"

namespace wheelramsey {

namespace detail {

SmallGraph to_small_graph(const Graph& g) {
  if (g.order() > 32) throw std::domain_error("small graph representation holds at most 32 vertices");
  SmallGraph sg;
  sg.order = g.order();
  for (Vertex v = 0; v < g.order(); ++v) sg.adj[v] = static_cast<std::uint32_t>(g.row(v)[0]);
  return sg;
}

namespace {

// Paths from a neighbor of `start` through vertices > start; dp[mask] holds the
// possible endpoints of a path covering exactly `mask` (compact indices).
template <typename OnMask>
void run_path_dp(const SmallGraph& g, int start, int max_path, OnMask&& on_mask) {
  const int r = g.order - start - 1;
  if (r < 2) return;
  const int shift = start + 1;
  std::vector<std::uint32_t> adj(r);
  for (int i = 0; i < r; ++i) adj[i] = g.adj[shift + i] >> shift;
  const std::uint32_t start_adj = g.adj[start] >> shift;
  if (std::popcount(start_adj) < 2) return;

  std::vector<std::uint32_t> dp(std::size_t{1} << r, 0);
  for (std::uint32_t s = start_adj; s != 0; s &= s - 1) {
    const int i = std::countr_zero(s);
    dp[std::size_t{1} << i] = std::uint32_t{1} << i;
  }
  for (std::size_t mask = 1; mask < dp.size(); ++mask) {
    const std::uint32_t ends = dp[mask];
    if (ends == 0) continue;
    const int pc = std::popcount(static_cast<std::uint32_t>(mask));
    if (!on_mask(pc, ends & start_adj)) return;
    if (pc >= max_path) continue;
    for (std::uint32_t e = ends; e != 0; e &= e - 1) {
      const int v = std::countr_zero(e);
      for (std::uint32_t ext = adj[v] & ~static_cast<std::uint32_t>(mask); ext != 0; ext &= ext - 1) {
        const int w = std::countr_zero(ext);
        dp[mask | (std::size_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }
}

}  // namespace

bool dp_has_cycle_from(const SmallGraph& g, int start, int length) {
  if (length < 3 || length > g.order - start) return false;
  bool found = false;
  run_path_dp(g, start, length - 1, [&](int pc, std::uint32_t closing) {
    if (pc == length - 1 && closing != 0) found = true;
    return !found;
  });
  return found;
}

std::uint64_t dp_cycle_lengths_from(const SmallGraph& g, int start) {
  std::uint64_t lengths = 0;
  run_path_dp(g, start, g.order, [&](int pc, std::uint32_t closing) {
    if (pc >= 2 && closing != 0) lengths |= std::uint64_t{1} << (pc + 1);
    return true;
  });
  return lengths;
}

namespace {

class CycleDfs {
 public:
  CycleDfs(const Graph& g, Vertex start, const VertexSet& allowed, int length)
      : g_(g), start_(start), unused_(allowed), length_(length) {}

  std::optional<std::vector<Vertex>> run() {
    path_.assign(1, start_);
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  // Necessary condition for closing: from the tail, the unused vertices must
  // offer at least `remaining` reachable vertices and a route back to the
  // start using at most `remaining` of them.
  bool closable(Vertex tail, int remaining) const {
    std::vector<int> dist(static_cast<std::size_t>(g_.order()), -1);
    std::deque<Vertex> queue{tail};
    dist[tail] = 0;
    int reached = 0;
    int best_close = -1;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (u != tail) {
        ++reached;
        if (best_close < 0 && g_.adjacent(u, start_)) best_close = dist[u];
      }
      VertexSet next = g_.neighborhood(u);
      next &= unused_;
      for (Vertex w : next) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return reached >= remaining && best_close >= 0 && best_close <= remaining;
  }

  bool extend() {
    const Vertex tail = path_.back();
    const int remaining = length_ - static_cast<int>(path_.size());
    if (!closable(tail, remaining)) return false;
    VertexSet candidates = g_.neighborhood(tail);
    candidates &= unused_;
    for (Vertex w : candidates) {
      if (remaining == 1) {
        // Last vertex closes back to the start; w > path[1] fixes the direction.
        if (g_.adjacent(w, start_) && w > path_[1]) {
          path_.push_back(w);
          return true;
        }
        continue;
      }
      path_.push_back(w);
      unused_.erase(w);
      if (extend()) return true;
      unused_.insert(w);
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  Vertex start_;
  VertexSet unused_;
  int length_;
  std::vector<Vertex> path_;
};

class LongestDfs {
 public:
  LongestDfs(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  LongestCycle run() {
    const int n = g_.order();
    for (Vertex s = 0; s < n && !exhausted_; ++s) {
      unused_ = VertexSet(n);
      for (Vertex v = s + 1; v < n; ++v) unused_.insert(v);
      if (unused_.size() + 1 <= best_) break;
      start_ = s;
      depth_ = 1;
      extend(s);
    }
    return {best_, !exhausted_};
  }

 private:
  int reachable(Vertex tail) const {
    VertexSet seen(g_.order());
    std::vector<Vertex> stack{tail};
    int count = 0;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      VertexSet next = g_.neighborhood(u);
      next &= unused_;
      for (Vertex w : next) {
        if (!seen.contains(w)) {
          seen.insert(w);
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count;
  }

  void extend(Vertex tail) {
    if (exhausted_) return;
    if (budget_ == 0) {
      exhausted_ = true;
      return;
    }
    --budget_;
    if (depth_ >= 3 && g_.adjacent(tail, start_)) best_ = std::max(best_, depth_);
    if (depth_ + reachable(tail) <= best_) return;
    VertexSet candidates = g_.neighborhood(tail);
    candidates &= unused_;
    for (Vertex w : candidates) {
      unused_.erase(w);
      ++depth_;
      extend(w);
      --depth_;
      unused_.insert(w);
      if (exhausted_) return;
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  VertexSet unused_;
  Vertex start_ = 0;
  int depth_ = 0;
  int best_ = 0;
  bool exhausted_ = false;
};

}  // namespace

std::optional<std::vector<Vertex>> dfs_cycle_from(const Graph& g, Vertex start, const VertexSet& allowed, int length) {
  if (allowed.size() + 1 < length) return std::nullopt;
  return CycleDfs(g, start, allowed, length).run();
}

LongestCycle dfs_longest_cycle(const Graph& g, std::uint64_t budget) { return LongestDfs(g, budget).run(); }

}  // namespace detail

std::string_view to_string(SearchMethod method) {
  switch (method) {
    case SearchMethod::SizePrune:
      return "size-prune";
    case SearchMethod::BipartiteShortcut:
      return "bipartite-shortcut";
    case SearchMethod::SubsetDp:
      return "subset-dp";
    case SearchMethod::PrunedDfs:
      return "pruned-dfs";
    case SearchMethod::Exhaustive:
      return "exhaustive";
  }
  return "unknown";
}

CycleSearch search_cycle_of_length(const Graph& g, int length) {
  if (length < 3) throw std::domain_error("cycle length must be at least 3, got " + std::to_string(length));
  if (length > g.order()) return {std::nullopt, SearchMethod::SizePrune};

  const VertexSet core = two_core(g);
  if (core.size() < length) return {std::nullopt, SearchMethod::SizePrune};
  const InducedSubgraph h = induced_subgraph(g, core);

  std::vector<std::vector<Vertex>> comps = connected_components(h.graph);
  std::erase_if(comps, [length](const auto& c) { return static_cast<int>(c.size()) < length; });
  if (comps.empty()) return {std::nullopt, SearchMethod::SizePrune};

  struct Candidate {
    InducedSubgraph sub;  // labels are h-local
    std::optional<detail::SmallGraph> small;
  };
  std::vector<Candidate> candidates;
  bool all_bipartite = true;
  bool needs_dfs = false;
  for (const auto& comp : comps) {
    Candidate c{induced_subgraph(h.graph, comp), std::nullopt};
    if (length % 2 == 1 && all_bipartite) all_bipartite = is_bipartite(c.sub.graph).bipartite();
    if (c.sub.graph.order() <= kSubsetDpMaxOrder) {
      c.small = detail::to_small_graph(c.sub.graph);
    } else {
      needs_dfs = true;
    }
    candidates.push_back(std::move(c));
  }
  if (length % 2 == 1 && all_bipartite) return {std::nullopt, SearchMethod::BipartiteShortcut};
  const SearchMethod method = needs_dfs ? SearchMethod::PrunedDfs : SearchMethod::SubsetDp;

  // Cycles live inside one component; the least start over all components
  // gives the lexicographically least sequence overall.
  std::vector<std::pair<Vertex, std::pair<int, int>>> starts;  // (h vertex, (candidate, local))
  for (int ci = 0; ci < static_cast<int>(candidates.size()); ++ci) {
    const auto& labels = candidates[ci].sub.labels;
    for (int li = 0; li < static_cast<int>(labels.size()); ++li) starts.push_back({labels[li], {ci, li}});
  }
  std::sort(starts.begin(), starts.end());

  for (const auto& [hv, where] : starts) {
    const auto& [ci, li] = where;
    const Candidate& cand = candidates[ci];
    const int order = cand.sub.graph.order();
    if (order - li < length) continue;
    if (cand.small && !detail::dp_has_cycle_from(*cand.small, li, length)) continue;
    VertexSet allowed(order);
    for (Vertex v = li + 1; v < order; ++v) allowed.insert(v);
    auto cycle = detail::dfs_cycle_from(cand.sub.graph, li, allowed, length);
    if (!cycle) {
      if (cand.small) throw std::logic_error("cycle DP and DFS disagree");
      continue;
    }
    CycleWitness witness;
    for (Vertex local : *cycle) witness.vertices.push_back(h.labels[cand.sub.labels[local]]);
    return {std::move(witness), method};
  }
  return {std::nullopt, method};
}

std::optional<CycleWitness> find_cycle_of_length(const Graph& g, int length) {
  return search_cycle_of_length(g, length).witness;
}

bool is_valid_cycle(const Graph& g, const CycleWitness& witness, int length) {
  const auto& vs = witness.vertices;
  if (static_cast<int>(vs.size()) != length || length < 3) return false;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : vs) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (!g.adjacent(vs[i], vs[(i + 1) % vs.size()])) return false;
  return true;
}

}  // namespace wheelramsey
