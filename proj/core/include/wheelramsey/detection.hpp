#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wheelramsey/coloring.hpp"
#include "wheelramsey/graph.hpp"

namespace wheelramsey {

// Rung of the fixed-length cycle search ladder that settled a query.
enum class SearchMethod {
  SizePrune,          // too few vertices left after 2-core / component pruning
  BipartiteShortcut,  // odd length in a bipartite graph
  SubsetDp,           // path DP over vertex subsets (components of order <= 24)
  PrunedDfs,          // backtracking DFS with distance-to-close pruning
  Exhaustive,         // plain subset scan (triangle, K4-, clique)
};

std::string_view to_string(SearchMethod method);

// Ordered so that serialized reports are stable.
using MethodCensus = std::map<SearchMethod, int>;

inline constexpr int kSubsetDpMaxOrder = 24;
inline constexpr int kExactStructureMaxOrder = 32;

struct CycleWitness {
  std::vector<Vertex> vertices;
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

struct WheelWitness {
  Color color = 0;
  Vertex center = 0;
  std::vector<Vertex> rim;
  friend bool operator==(const WheelWitness&, const WheelWitness&) = default;
};

// Vertex set spanning a monochromatic triangle, K4- or clique.
struct SubsetWitness {
  Color color = 0;
  std::vector<Vertex> vertices;
  friend bool operator==(const SubsetWitness&, const SubsetWitness&) = default;
};

struct CycleSearch {
  std::optional<CycleWitness> witness;
  SearchMethod method = SearchMethod::SizePrune;
};

// Exact search for a cycle on exactly `length` vertices. When one exists the
// returned witness is the lexicographically least vertex sequence among all
// such cycles. Absence is only reported after a complete search.
CycleSearch search_cycle_of_length(const Graph& g, int length);
std::optional<CycleWitness> find_cycle_of_length(const Graph& g, int length);

class Pattern {
 public:
  enum class Kind { Wheel, Cycle, Triangle, K4Minus, Clique };

  static Pattern wheel(int n);
  static Pattern cycle(int length);
  static Pattern triangle() { return {Kind::Triangle, 3}; }
  static Pattern k4_minus() { return {Kind::K4Minus, 4}; }
  static Pattern clique(int m);
  // Accepts "wheel(8)", "cycle(5)", "triangle", "k4-", "k4minus", "clique(4)".
  static Pattern parse(std::string_view text);

  Kind kind() const { return kind_; }
  int size() const { return size_; }
  std::string name() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Pattern(Kind kind, int size) : kind_(kind), size_(size) {}
  Kind kind_;
  int size_;
};

struct SearchOptions {
  int threads = 0;  // 0 = hardware concurrency
};

struct WheelSearch {
  std::optional<WheelWitness> witness;
  MethodCensus census;  // one entry per center
};

// Searches every center v for a cycle of length n-1 inside the color-c
// neighborhood graph of v. The witness has the lowest center, then the
// lexicographically least rim.
WheelSearch search_mono_wheel(const EdgeColoring& coloring, int n, Color c, const SearchOptions& options = {});
std::optional<WheelWitness> find_mono_wheel(const EdgeColoring& coloring, int n, Color c,
                                            const SearchOptions& options = {});

// Lexicographically least vertex set carrying the pattern (triangle, K4- or
// clique) in color c, by exhaustive subset scan.
std::optional<SubsetWitness> find_mono_pattern(const EdgeColoring& coloring, const Pattern& pattern, Color c);
std::optional<std::vector<Vertex>> find_pattern(const Graph& g, const Pattern& pattern);

// Independent witness checks; these re-read the input edge by edge.
bool is_valid_cycle(const Graph& g, const CycleWitness& witness, int length);
bool is_valid_wheel(const EdgeColoring& coloring, const WheelWitness& witness, int n);
bool is_valid_subset_witness(const EdgeColoring& coloring, const Pattern& pattern, const SubsetWitness& witness);

using Witness = std::variant<WheelWitness, CycleWitness, SubsetWitness>;

struct ColorResult {
  Color color = 0;
  std::optional<Witness> witness;
  MethodCensus census;
};

struct DetectionReport {
  Pattern pattern = Pattern::triangle();
  int order = 0;
  int num_colors = 0;
  std::vector<ColorResult> results;  // ascending color
  double elapsed_seconds = 0.0;      // not serialized

  bool pass() const;
  MethodCensus census() const;
};

struct VerifyOptions {
  int threads = 0;
  std::vector<Color> colors;  // empty = all colors
};

DetectionReport verify_pattern_free(const EdgeColoring& coloring, const Pattern& pattern,
                                    const VerifyOptions& options = {});
DetectionReport verify_wheel_free(const EdgeColoring& coloring, int n, const VerifyOptions& options = {});

bool revalidate(const EdgeColoring& coloring, const DetectionReport& report);

enum class ReportFormat { Text, Csv, JsonLines };
ReportFormat parse_report_format(std::string_view text);

std::string format_census(const MethodCensus& census);
std::string format_witness(const Witness& witness);
// "RESULT: PASS|FAIL pattern=... order=... method-census=..."
std::string result_line(const DetectionReport& report);
std::string format_report(const DetectionReport& report, ReportFormat format = ReportFormat::Text);

// Girth (shortest cycle length) by breadth-first search from every vertex;
// nullopt for forests.
std::optional<int> girth(const Graph& g);

// Sorted list of every cycle length present. Exact for order <= 32:
// subset DP per component up to order 24, complete DFS per length above.
std::vector<int> cycle_lengths(const Graph& g);

struct Circumference {
  int length = 0;     // 0 when acyclic
  bool exact = true;  // false: lower bound from a budgeted search
};

inline constexpr std::uint64_t kDefaultLongestCycleBudget = 50'000'000;

Circumference circumference(const Graph& g, std::uint64_t dfs_budget = kDefaultLongestCycleBudget);

struct Pancyclicity {
  bool weakly_pancyclic = true;
  std::optional<int> girth;
  int circumference = 0;
  std::vector<int> missing;  // lengths in [girth, circumference] with no cycle
};

// Exact regime only (order <= 32); throws std::domain_error above.
Pancyclicity weak_pancyclicity(const Graph& g);
bool is_weakly_pancyclic(const Graph& g);

}  // namespace wheelramsey
