#include "wheelramsey/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace wheelramsey {

namespace {

int words_for(int universe) { return (universe + 63) / 64; }

void check_order(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw std::domain_error("graph order " + std::to_string(order) + " outside [0, " +
                            std::to_string(kMaxOrder) + "]");
  }
}

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(words_for(universe), 0) {
  check_order(universe);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::of(int universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) {
    if (v < 0 || v >= universe) throw std::domain_error("vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

int VertexSet::size() const {
  int n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Vertex VertexSet::next(Vertex from) const {
  if (from < 0) from = 0;
  if (from >= universe_) return -1;
  std::size_t wi = static_cast<std::size_t>(from) >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w != 0) return static_cast<Vertex>(wi * 64 + std::countr_zero(w));
    if (++wi >= words_.size()) return -1;
    w = words_[wi];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  for (Vertex v : *this) out.push_back(v);
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Graph::Graph(int order) : order_(order), stride_(words_for(order)) {
  check_order(order);
  rows_.assign(static_cast<std::size_t>(order_) * stride_, 0);
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::complete(int order) {
  Graph g(order);
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int order) {
  if (order < 3) throw std::domain_error("cycle needs at least 3 vertices");
  Graph g(order);
  for (Vertex v = 0; v < order; ++v) g.add_edge(v, (v + 1) % order);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order_) {
    throw std::domain_error("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(order_));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::domain_error("loops are not allowed");
  rows_[row_offset(u) + (static_cast<std::size_t>(v) >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[row_offset(v) + (static_cast<std::size_t>(u) >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[row_offset(u) + (static_cast<std::size_t>(v) >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  rows_[row_offset(v) + (static_cast<std::size_t>(u) >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::min_degree() const {
  if (order_ == 0) return 0;
  int best = order_;
  for (Vertex v = 0; v < order_; ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::uint64_t w : rows_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

VertexSet Graph::neighborhood(Vertex v) const {
  check_vertex(v);
  VertexSet s(order_);
  std::copy(rows_.begin() + static_cast<std::ptrdiff_t>(row_offset(v)),
            rows_.begin() + static_cast<std::ptrdiff_t>(row_offset(v) + stride_), s.words_.begin());
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order_; ++u) {
    VertexSet nb = neighborhood(u);
    for (Vertex v = nb.next(u + 1); v >= 0; v = nb.next(v + 1)) out.push_back({u, v});
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset) {
  if (subset.universe() != g.order()) throw std::domain_error("vertex set universe does not match graph order");
  InducedSubgraph out{Graph(subset.size()), subset.to_vector()};
  const auto& labels = out.labels;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (g.adjacent(labels[i], labels[j])) out.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  return induced_subgraph(g, VertexSet::of(g.order(), subset));
}

VertexSet neighborhood(const Graph& g, Vertex v) { return g.neighborhood(v); }

int Bipartition::side_size(int s) const {
  return static_cast<int>(std::count(side.begin(), side.end(), s));
}

BipartiteCheck is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighborhood(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // Same BFS layer; walk both up to the common ancestor.
          std::vector<Vertex> left{u}, right{w};
          Vertex a = u, b = w;
          while (a != b) {
            a = parent[a];
            b = parent[b];
            left.push_back(a);
            if (a != b) right.push_back(b);
          }
          OddCycle cyc;
          cyc.vertices.assign(left.begin(), left.end());
          cyc.vertices.insert(cyc.vertices.end(), right.rbegin(), right.rend());
          return {std::nullopt, std::move(cyc)};
        }
      }
    }
  }
  return {Bipartition{std::move(color)}, std::nullopt};
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp;
    std::vector<Vertex> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighborhood(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

VertexSet two_core(const Graph& g) {
  const int n = g.order();
  VertexSet alive = VertexSet::full(n);
  std::vector<int> deg(n);
  std::vector<Vertex> doomed;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < 2) doomed.push_back(v);
  }
  while (!doomed.empty()) {
    Vertex v = doomed.back();
    doomed.pop_back();
    if (!alive.contains(v)) continue;
    alive.erase(v);
    for (Vertex w : g.neighborhood(v)) {
      if (alive.contains(w) && --deg[w] == 1) doomed.push_back(w);
    }
  }
  return alive;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) g.add_edge(e.u + a.order(), e.v + a.order());
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

}  // namespace wheelramsey
