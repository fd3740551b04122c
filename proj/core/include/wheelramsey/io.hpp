#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wheelramsey/coloring.hpp"
#include "wheelramsey/constructions.hpp"
#include "wheelramsey/graph.hpp"

namespace wheelramsey {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coloring file: a single line
//   {"order":N,"colors":k,"edges":[c01,c02,...,c12,...]}
// followed by '\n'; pairs in pair-rank order. See docs/coloring-format.md.
std::string encode_coloring(const EdgeColoring& coloring);
EdgeColoring decode_coloring(std::string_view text);

std::string encode_block_spec(const BlockSpec& spec);
BlockSpec decode_block_spec(std::string_view text);

// graph6 (no trailing newline).
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Reads a graph6 file (first non-empty line, optional ">>graph6<<" header).
Graph load_graph6(const std::filesystem::path& path);
EdgeColoring load_coloring(const std::filesystem::path& path);

}  // namespace wheelramsey
