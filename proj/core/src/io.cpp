#include "wheelramsey/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wheelramsey {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kGraph6Bias = 63;

const ordered_json& require(const ordered_json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string("missing key \"") + key + "\"");
  return *it;
}

int require_int(const ordered_json& obj, const char* key) {
  const auto& v = require(obj, key);
  if (!v.is_number_integer()) throw FormatError(std::string("key \"") + key + "\" must be an integer");
  return v.get<int>();
}

ordered_json parse(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string encode_coloring(const EdgeColoring& coloring) {
  ordered_json j;
  j["order"] = coloring.order();
  j["colors"] = coloring.num_colors();
  auto& edges = j["edges"] = ordered_json::array();
  for (std::uint8_t c : coloring.pair_colors()) edges.push_back(static_cast<int>(c));
  return j.dump() + "\n";
}

EdgeColoring decode_coloring(std::string_view text) {
  const ordered_json j = parse(text);
  if (!j.is_object()) throw FormatError("coloring must be a JSON object");
  const int order = require_int(j, "order");
  const int colors = require_int(j, "colors");
  const auto& edges = require(j, "edges");
  if (!edges.is_array()) throw FormatError("\"edges\" must be an array");
  if (order < 1 || order > kMaxOrder) throw FormatError("order out of range");
  if (colors < 1 || colors > kMaxColors) throw FormatError("colors out of range");
  if (edges.size() != pair_count(order)) {
    throw FormatError("expected " + std::to_string(pair_count(order)) + " edge colors, found " +
                      std::to_string(edges.size()));
  }
  std::vector<std::uint8_t> pairs;
  pairs.reserve(edges.size());
  for (const auto& e : edges) {
    if (!e.is_number_integer()) throw FormatError("edge colors must be integers");
    const int c = e.get<int>();
    if (c < 0 || c >= colors) throw FormatError("edge color " + std::to_string(c) + " out of range");
    pairs.push_back(static_cast<std::uint8_t>(c));
  }
  return EdgeColoring::from_pairs(order, colors, std::move(pairs));
}

std::string encode_block_spec(const BlockSpec& spec) {
  ordered_json j;
  j["family"] = spec.family;
  auto& params = j["parameters"] = ordered_json::object();
  for (const auto& [name, value] : spec.parameters) params[name] = value;
  auto& parts = j["parts"] = ordered_json::array();
  for (const Part& p : spec.parts) parts.push_back({{"label", p.label}, {"first", p.first}, {"size", p.size}});
  auto& special = j["special"] = ordered_json::object();
  for (const auto& [label, v] : spec.special) special[label] = v;
  j["nested"] = spec.nested;
  return j.dump(2) + "\n";
}

BlockSpec decode_block_spec(std::string_view text) {
  const ordered_json j = parse(text);
  BlockSpec spec;
  try {
    spec.family = require(j, "family").get<std::string>();
    for (const auto& [name, value] : require(j, "parameters").items()) spec.parameters.emplace_back(name, value.get<long long>());
    for (const auto& p : require(j, "parts"))
      spec.parts.push_back({p.at("label").get<std::string>(), p.at("first").get<int>(), p.at("size").get<int>()});
    for (const auto& [label, v] : require(j, "special").items()) spec.special.emplace_back(label, v.get<int>());
    if (j.contains("nested")) spec.nested = j["nested"].get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed block spec: ") + e.what());
  }
  return spec;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kGraph6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kGraph6Bias));
    out.push_back(static_cast<char>((n & 0x3f) + kGraph6Bias));
  }
  int acc = 0, bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Bias));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kGraph6Bias));
  return out;
}

Graph decode_graph6(std::string_view text) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw FormatError("graph6 string truncated");
    const int c = static_cast<unsigned char>(text[pos++]) - kGraph6Bias;
    if (c < 0 || c > 63) throw FormatError("invalid graph6 character");
    return c;
  };
  int n = next();
  if (n == 63) {
    const int a = next(), b = next(), c = next();
    if (a == 63) throw FormatError("graph6 orders above 258047 are not supported");
    n = (a << 12) | (b << 6) | c;
  }
  if (n > kMaxOrder) throw FormatError("graph6 order exceeds supported maximum");
  Graph g(n);
  int word = 0, bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (bits == 0) {
        word = next();
        bits = 6;
      }
      --bits;
      if ((word >> bits) & 1) g.add_edge(i, j);
    }
  }
  if (pos != text.size()) throw FormatError("trailing characters after graph6 data");
  return g;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

Graph load_graph6(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (!line.empty()) return decode_graph6(line);
  }
  throw FormatError("no graph6 data in " + path.string());
}

EdgeColoring load_coloring(const std::filesystem::path& path) { return decode_coloring(read_file(path)); }

}  // namespace wheelramsey
