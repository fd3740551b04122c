#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wheelramsey/bounds.hpp"
#include "wheelramsey/constructions.hpp"

namespace wheelramsey::app {

struct ConstructRequest {
  std::string family;  // even-lower | odd-lower | paley5 | rook9 | blowup | cor14
  int n = 0;
  int k = 0;
  std::filesystem::path base;   // blowup operands
  std::filesystem::path inner;
};

Construction build_construction(const ConstructRequest& request);

// "<stem>.coloring.json" -> "<stem>.blocks.json"; otherwise appends ".blocks.json".
std::filesystem::path blocks_sidecar(const std::filesystem::path& coloring_path);

// Writes the coloring file and its BlockSpec sidecar.
void write_construction(const Construction& construction, const std::filesystem::path& coloring_path);

// Block metadata for a coloring file, if a sidecar exists.
std::optional<BlockSpec> load_blocks(const std::filesystem::path& coloring_path);

std::vector<BoundReport> bound_rows(int k, int n_first, int n_last, bool advisory);
// Columns: k, n, lower, lower_tag, upper, upper_tag, notes.
std::string format_bounds_csv(const std::vector<BoundReport>& rows);
std::string format_bounds_table(const std::vector<BoundReport>& rows);

}  // namespace wheelramsey::app
