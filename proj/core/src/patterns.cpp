#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

#include "wheelramsey/detection.hpp"

namespace wheelramsey {

Pattern Pattern::wheel(int n) {
  if (n < 4) throw std::domain_error("wheel W_n needs n >= 4, got " + std::to_string(n));
  return {Kind::Wheel, n};
}

Pattern Pattern::cycle(int length) {
  if (length < 3) throw std::domain_error("cycle length must be at least 3, got " + std::to_string(length));
  return {Kind::Cycle, length};
}

Pattern Pattern::clique(int m) {
  if (m < 2) throw std::domain_error("clique size must be at least 2, got " + std::to_string(m));
  return {Kind::Clique, m};
}

namespace {

int parse_argument(std::string_view text, std::string_view prefix) {
  std::string_view inner = text.substr(prefix.size());
  if (inner.size() < 3 || inner.front() != '(' || inner.back() != ')') {
    throw std::invalid_argument("expected " + std::string(prefix) + "(<int>), got " + std::string(text));
  }
  inner = inner.substr(1, inner.size() - 2);
  int value = 0;
  auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), value);
  if (ec != std::errc{} || ptr != inner.data() + inner.size()) {
    throw std::invalid_argument("bad integer in pattern " + std::string(text));
  }
  return value;
}

}  // namespace

Pattern Pattern::parse(std::string_view text) {
  if (text == "triangle") return triangle();
  if (text == "k4-" || text == "k4minus" || text == "k4-minus") return k4_minus();
  if (text.starts_with("wheel")) return wheel(parse_argument(text, "wheel"));
  if (text.starts_with("cycle")) return cycle(parse_argument(text, "cycle"));
  if (text.starts_with("clique")) return clique(parse_argument(text, "clique"));
  throw std::invalid_argument("unknown pattern " + std::string(text));
}

std::string Pattern::name() const {
  switch (kind_) {
    case Kind::Wheel:
      return "wheel(" + std::to_string(size_) + ")";
    case Kind::Cycle:
      return "cycle(" + std::to_string(size_) + ")";
    case Kind::Triangle:
      return "triangle";
    case Kind::K4Minus:
      return "k4-";
    case Kind::Clique:
      return "clique(" + std::to_string(size_) + ")";
  }
  return "unknown";
}

namespace {

// Allowed number of missing edges among the pattern's vertex set.
int missing_budget(const Pattern& pattern) {
  switch (pattern.kind()) {
    case Pattern::Kind::Triangle:
    case Pattern::Kind::Clique:
      return 0;
    case Pattern::Kind::K4Minus:
      return 1;
    default:
      throw std::domain_error("subset scan handles triangle, K4- and clique patterns only");
  }
}

class SubsetScan {
 public:
  SubsetScan(const Graph& g, int size, int budget) : g_(g), size_(size), budget_(budget) {}

  std::optional<std::vector<Vertex>> run() {
    chosen_.clear();
    if (size_ > g_.order()) return std::nullopt;
    if (extend(0, 0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool extend(Vertex from, int missing) {
    const int need = size_ - static_cast<int>(chosen_.size());
    if (need == 0) return true;
    for (Vertex v = from; v <= g_.order() - need; ++v) {
      int added = 0;
      for (Vertex u : chosen_)
        if (!g_.adjacent(u, v)) ++added;
      if (missing + added > budget_) continue;
      chosen_.push_back(v);
      if (extend(v + 1, missing + added)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int size_;
  int budget_;
  std::vector<Vertex> chosen_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_pattern(const Graph& g, const Pattern& pattern) {
  return SubsetScan(g, pattern.size(), missing_budget(pattern)).run();
}

std::optional<SubsetWitness> find_mono_pattern(const EdgeColoring& coloring, const Pattern& pattern, Color c) {
  const Graph g = color_class(coloring, c);
  auto found = find_pattern(g, pattern);
  if (!found) return std::nullopt;
  return SubsetWitness{c, std::move(*found)};
}

bool is_valid_subset_witness(const EdgeColoring& coloring, const Pattern& pattern, const SubsetWitness& witness) {
  const auto& vs = witness.vertices;
  if (static_cast<int>(vs.size()) != pattern.size()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= coloring.order()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (vs[i] == vs[j]) return false;
  }
  int mono = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (coloring.color(vs[i], vs[j]) == witness.color) ++mono;
  const int pairs = pattern.size() * (pattern.size() - 1) / 2;
  switch (pattern.kind()) {
    case Pattern::Kind::Triangle:
    case Pattern::Kind::Clique:
      return mono == pairs;
    case Pattern::Kind::K4Minus:
      return mono >= pairs - 1;
    default:
      return false;
  }
}

}  // namespace wheelramsey
