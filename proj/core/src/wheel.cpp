#include <chrono>
#include <stdexcept>
#include <string>

#include "wheelramsey/detection.hpp"
#include "wheelramsey/parallel.hpp"

namespace wheelramsey {

namespace {

struct CenterResult {
  SearchMethod method = SearchMethod::SizePrune;
  std::optional<std::vector<Vertex>> rim;
};

CenterResult search_center(const Graph& klass, Vertex center, int rim_length) {
  const VertexSet nb = klass.neighborhood(center);
  if (nb.size() < rim_length) return {};
  const InducedSubgraph local = induced_subgraph(klass, nb);
  CycleSearch found = search_cycle_of_length(local.graph, rim_length);
  CenterResult out{found.method, std::nullopt};
  if (found.witness) {
    std::vector<Vertex> rim;
    for (Vertex v : found.witness->vertices) rim.push_back(local.labels[v]);
    out.rim = std::move(rim);
  }
  return out;
}

void check_color(const EdgeColoring& coloring, Color c) {
  if (c < 0 || c >= coloring.num_colors()) {
    throw std::domain_error("color " + std::to_string(c) + " outside 0.." + std::to_string(coloring.num_colors() - 1));
  }
}

}  // namespace

WheelSearch search_mono_wheel(const EdgeColoring& coloring, int n, Color c, const SearchOptions& options) {
  if (n < 4) throw std::domain_error("wheel W_n needs n >= 4, got " + std::to_string(n));
  check_color(coloring, c);
  const Graph klass = color_class(coloring, c);
  const int order = coloring.order();

  // Every center is searched so the census does not depend on scheduling;
  // the witness is the one with the least center.
  std::vector<CenterResult> per_center(static_cast<std::size_t>(order));
  parallel_for(order, options.threads, [&](int v) { per_center[v] = search_center(klass, v, n - 1); });

  WheelSearch out;
  for (Vertex v = 0; v < order; ++v) {
    ++out.census[per_center[v].method];
    if (!out.witness && per_center[v].rim) out.witness = WheelWitness{c, v, std::move(*per_center[v].rim)};
  }
  return out;
}

std::optional<WheelWitness> find_mono_wheel(const EdgeColoring& coloring, int n, Color c, const SearchOptions& options) {
  return search_mono_wheel(coloring, n, c, options).witness;
}

bool is_valid_wheel(const EdgeColoring& coloring, const WheelWitness& witness, int n) {
  const auto& rim = witness.rim;
  if (n < 4 || static_cast<int>(rim.size()) != n - 1) return false;
  const int order = coloring.order();
  if (witness.center < 0 || witness.center >= order) return false;
  std::vector<bool> seen(static_cast<std::size_t>(order), false);
  seen[witness.center] = true;
  for (Vertex v : rim) {
    if (v < 0 || v >= order || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < rim.size(); ++i) {
    if (coloring.color(witness.center, rim[i]) != witness.color) return false;
    if (coloring.color(rim[i], rim[(i + 1) % rim.size()]) != witness.color) return false;
  }
  return true;
}

bool DetectionReport::pass() const {
  for (const ColorResult& r : results)
    if (r.witness) return false;
  return true;
}

MethodCensus DetectionReport::census() const {
  MethodCensus total;
  for (const ColorResult& r : results)
    for (const auto& [method, count] : r.census) total[method] += count;
  return total;
}

DetectionReport verify_pattern_free(const EdgeColoring& coloring, const Pattern& pattern, const VerifyOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<Color> colors = options.colors;
  if (colors.empty())
    for (Color c = 0; c < coloring.num_colors(); ++c) colors.push_back(c);
  for (Color c : colors) check_color(coloring, c);

  DetectionReport report;
  report.pattern = pattern;
  report.order = coloring.order();
  report.num_colors = coloring.num_colors();
  for (Color c : colors) {
    ColorResult result;
    result.color = c;
    switch (pattern.kind()) {
      case Pattern::Kind::Wheel: {
        WheelSearch found = search_mono_wheel(coloring, pattern.size(), c, {options.threads});
        result.census = std::move(found.census);
        if (found.witness) result.witness = std::move(*found.witness);
        break;
      }
      case Pattern::Kind::Cycle: {
        CycleSearch found = search_cycle_of_length(color_class(coloring, c), pattern.size());
        result.census[found.method] = 1;
        if (found.witness) result.witness = std::move(*found.witness);
        break;
      }
      default: {
        auto found = find_mono_pattern(coloring, pattern, c);
        result.census[SearchMethod::Exhaustive] = 1;
        if (found) result.witness = std::move(*found);
        break;
      }
    }
    report.results.push_back(std::move(result));
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

DetectionReport verify_wheel_free(const EdgeColoring& coloring, int n, const VerifyOptions& options) {
  return verify_pattern_free(coloring, Pattern::wheel(n), options);
}

bool revalidate(const EdgeColoring& coloring, const DetectionReport& report) {
  for (const ColorResult& r : report.results) {
    if (!r.witness) continue;
    const bool ok = std::visit(
        [&](const auto& w) {
          using W = std::decay_t<decltype(w)>;
          if constexpr (std::is_same_v<W, WheelWitness>) {
            return w.color == r.color && is_valid_wheel(coloring, w, report.pattern.size());
          } else if constexpr (std::is_same_v<W, CycleWitness>) {
            return is_valid_cycle(color_class(coloring, r.color), w, report.pattern.size());
          } else {
            return w.color == r.color && is_valid_subset_witness(coloring, report.pattern, w);
          }
        },
        *r.witness);
    if (!ok) return false;
  }
  return true;
}

}  // namespace wheelramsey
