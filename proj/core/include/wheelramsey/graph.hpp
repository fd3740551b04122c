#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace wheelramsey {

using Vertex = int;

inline constexpr int kMaxOrder = 4096;

// Dense bit set over the universe 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  static VertexSet full(int universe);
  static VertexSet of(int universe, std::span<const Vertex> members);

  int universe() const { return universe_; }
  bool contains(Vertex v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  void insert(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const;
  bool empty() const;
  // Lowest member at or after `from`, or -1.
  Vertex next(Vertex from) const;
  Vertex first() const { return next(0); }
  std::vector<Vertex> to_vector() const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  class Iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    Iterator() = default;
    Iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}
    Vertex operator*() const { return at_; }
    Iterator& operator++() {
      at_ = set_->next(at_ + 1);
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const Iterator& a, const Iterator& b) { return a.at_ == b.at_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex at_ = -1;
  };

  Iterator begin() const { return {this, first()}; }
  Iterator end() const { return {this, -1}; }

 private:
  friend class Graph;
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on 0..order-1 with bit-packed adjacency rows.
// Orders up to 64 occupy a single word per row; larger orders use
// ceil(order/64) words per row, up to kMaxOrder.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph complete(int order);
  static Graph cycle(int order);

  int order() const { return order_; }
  int words_per_row() const { return stride_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (rows_[row_offset(u) + (static_cast<std::size_t>(v) >> 6)] >> (v & 63)) & 1u;
  }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  int degree(Vertex v) const;
  int min_degree() const;
  std::size_t edge_count() const;
  VertexSet neighborhood(Vertex v) const;
  std::span<const std::uint64_t> row(Vertex v) const {
    return {rows_.data() + row_offset(v), static_cast<std::size_t>(stride_)};
  }
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t row_offset(Vertex v) const { return static_cast<std::size_t>(v) * stride_; }
  void check_vertex(Vertex v) const;

  int order_ = 0;
  int stride_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct InducedSubgraph {
  Graph graph;
  // labels[i] is the original vertex of local vertex i; ascending.
  std::vector<Vertex> labels;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

VertexSet neighborhood(const Graph& g, Vertex v);

// Two-coloring of the vertices with no monochromatic edge.
struct Bipartition {
  std::vector<int> side;  // 0 or 1 per vertex
  int side_size(int s) const;
};

struct OddCycle {
  std::vector<Vertex> vertices;
};

struct BipartiteCheck {
  std::optional<Bipartition> partition;
  std::optional<OddCycle> odd_cycle;
  bool bipartite() const { return partition.has_value(); }
};

BipartiteCheck is_bipartite(const Graph& g);

// Connected components as ascending vertex lists, ordered by least member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Vertices surviving iterated removal of vertices with degree < 2.
VertexSet two_core(const Graph& g);

// Disjoint union, relabeling `b` after `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

Graph complement(const Graph& g);

Graph petersen_graph();

}  // namespace wheelramsey
