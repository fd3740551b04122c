#include "wheelramsey/app/operations.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "wheelramsey/app/errors.hpp"
#include "wheelramsey/io.hpp"

namespace wheelramsey::app {

namespace fs = std::filesystem;

namespace {

Construction wrap_base(const BaseColoring& base, const std::string& family) {
  Construction c{base.coloring, {}};
  c.blocks.family = family;
  c.blocks.parts.push_back({"V", 0, base.coloring.order()});
  return c;
}

EdgeColoring load_operand(const fs::path& path, const char* role) {
  if (path.empty()) throw std::invalid_argument(std::string("blowup needs a ") + role + " coloring path");
  if (!fs::exists(path)) throw missing_input(std::string(role) + " coloring " + path.string() + " does not exist");
  return load_coloring(path);
}

}  // namespace

Construction build_construction(const ConstructRequest& r) {
  if (r.family == "even-lower") return construct_even_lower(r.n);
  if (r.family == "odd-lower") return construct_odd_lower(r.n);
  if (r.family == "two-color-lower") return construct_two_color_lower(r.n);
  if (r.family == "paley5") return wrap_base(paley5(), "paley5");
  if (r.family == "rook9") return wrap_base(rook9(), "rook9");
  if (r.family == "cor14") return corollary14_family(r.k, r.n);
  if (r.family == "blowup") {
    const EdgeColoring base = load_operand(r.base, "base");
    const EdgeColoring inner = load_operand(r.inner, "inner");
    if (auto spec = load_blocks(r.inner)) return blowup(base, Construction{inner, *spec});
    return blowup(base, inner);
  }
  throw std::invalid_argument("unknown family '" + r.family +
                              "' (expected even-lower, odd-lower, paley5, rook9, blowup or cor14)");
}

fs::path blocks_sidecar(const fs::path& coloring_path) {
  std::string name = coloring_path.filename().string();
  const std::string suffix = ".coloring.json";
  if (name.ends_with(suffix)) name.resize(name.size() - suffix.size());
  return coloring_path.parent_path() / (name + ".blocks.json");
}

void write_construction(const Construction& construction, const fs::path& coloring_path) {
  write_file(coloring_path, encode_coloring(construction.coloring));
  write_file(blocks_sidecar(coloring_path), encode_block_spec(construction.blocks));
}

std::optional<BlockSpec> load_blocks(const fs::path& coloring_path) {
  const fs::path sidecar = blocks_sidecar(coloring_path);
  if (!fs::exists(sidecar)) return std::nullopt;
  return decode_block_spec(read_file(sidecar));
}

std::vector<BoundReport> bound_rows(int k, int n_first, int n_last, bool advisory) {
  if (n_first > n_last) throw std::invalid_argument(fmt::format("empty n range {}-{}", n_first, n_last));
  std::vector<BoundReport> rows;
  for (int n = n_first; n <= n_last; ++n) rows.push_back(wheel_bound_report(k, n, advisory));
  return rows;
}

namespace {

std::string upper_text(const BoundReport& r) { return r.upper ? r.upper->str() : "inf"; }

std::string rstrip(std::string line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line + "\n";
}

std::string notes_text(const BoundReport& r) {
  std::string out;
  for (const std::string& note : r.notes) out += (out.empty() ? "" : "; ") + note;
  return out;
}

}  // namespace

std::string format_bounds_csv(const std::vector<BoundReport>& rows) {
  std::string out = "k,n,lower,lower_tag,upper,upper_tag,notes\n";
  for (const BoundReport& r : rows)
    out += fmt::format("{},{},{},{},{},{},\"{}\"\n", r.k, r.n, r.lower.str(), r.lower_tag, upper_text(r), r.upper_tag,
                       notes_text(r));
  return out;
}

std::string format_bounds_table(const std::vector<BoundReport>& rows) {
  std::size_t lw = 5, uw = 5, ltw = 9, utw = 9;
  for (const BoundReport& r : rows) {
    lw = std::max(lw, r.lower.str().size());
    uw = std::max(uw, upper_text(r).size());
    ltw = std::max(ltw, r.lower_tag.size());
    utw = std::max(utw, r.upper_tag.size());
  }
  std::string out = rstrip(fmt::format("{:>3} {:>4}  {:>{}}  {:<{}}  {:>{}}  {:<{}}  {}", "k", "n", "lower", lw,
                                       "lower_tag", ltw, "upper", uw, "upper_tag", utw, "notes"));
  for (const BoundReport& r : rows)
    out += rstrip(fmt::format("{:>3} {:>4}  {:>{}}  {:<{}}  {:>{}}  {:<{}}  {}", r.k, r.n, r.lower.str(), lw,
                              r.lower_tag, ltw, upper_text(r), uw, r.upper_tag, utw, notes_text(r)));
  return out;
}

}  // namespace wheelramsey::app
