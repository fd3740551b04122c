#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wheelramsey/coloring.hpp"
#include "wheelramsey/graph.hpp"

// Brute-force enumerators. They share only the Graph/EdgeColoring data types
// with the detection code and are meant for small inputs.
namespace wheelramsey::oracle {

// Number of distinct cycles (as subgraphs) of each length, by enumerating
// every simple path from each start vertex.
std::map<int, std::uint64_t> cycle_census(const Graph& g);

// Lengths of all cycles present; stops early once every length is seen.
std::vector<int> cycle_lengths(const Graph& g);

bool has_cycle(const Graph& g, int length);

// Number of monochromatic W_n in color c counted as (center, rim cycle)
// pairs: every (n-1)-subset of the center's color-c neighborhood, every
// cyclic order of it.
std::uint64_t wheel_count(const EdgeColoring& coloring, int n, Color c);
bool has_wheel(const EdgeColoring& coloring, int n, Color c);

// Number of m-subsets with at most `missing` non-edges in color c.
std::uint64_t dense_subset_count(const EdgeColoring& coloring, int m, int missing, Color c);
std::uint64_t triangle_count(const EdgeColoring& coloring, Color c);
std::uint64_t k4_minus_count(const EdgeColoring& coloring, Color c);

// Scans all 2^{C(order,2)} red/blue colorings of K_order and counts those with
// no monochromatic triangle. order <= 8.
struct TriangleScan {
  std::uint64_t colorings = 0;
  std::uint64_t triangle_free = 0;
  std::optional<EdgeColoring> example;  // first triangle-free coloring found
};
TriangleScan scan_two_colorings_for_triangle(int order);

std::optional<int> girth(const Graph& g);
int circumference(const Graph& g);

}  // namespace wheelramsey::oracle
