#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "wheelramsey/app/catalog.hpp"
#include "wheelramsey/app/certificate.hpp"
#include "wheelramsey/app/errors.hpp"
#include "wheelramsey/app/operations.hpp"
#include "wheelramsey/app/pipeline.hpp"
#include "wheelramsey/detection.hpp"
#include "wheelramsey/io.hpp"
#include "wheelramsey/oracle.hpp"

namespace fs = std::filesystem;
using namespace wheelramsey;
using namespace wheelramsey::app;

namespace {

constexpr int kOracleMaxOrder = 10;

struct Globals {
  std::string output_dir;  // empty: WHEELRAMSEY_OUTPUT_DIR or "."
  int threads = 0;
  std::optional<std::uint64_t> seed;
  std::string format = "text";

  fs::path root() const {
    if (!output_dir.empty()) return output_dir;
    if (const char* env = std::getenv("WHEELRAMSEY_OUTPUT_DIR"); env && *env) return env;
    return ".";
  }
  bool root_overridden() const { return !output_dir.empty() || std::getenv("WHEELRAMSEY_OUTPUT_DIR"); }
  ReportFormat report_format() const { return parse_report_format(format); }
};

AppError size_cap(int order) {
  return {"SIZE_CAP", kExitUsage,
          fmt::format("oracle refuses order {} (exhaustive enumeration is capped at {})", order, kOracleMaxOrder)};
}

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
  ConstructRequest request;
  std::string output;
  std::vector<Color> graph6_colors;
};

int run_construct(const Globals& g, const ConstructArgs& a) {
  const Construction c = build_construction(a.request);
  fs::path out = a.output;
  if (out.empty()) {
    std::string stem = a.request.family;
    if (a.request.k > 0 && a.request.family == "cor14") stem += fmt::format("-k{}", a.request.k);
    if (a.request.n > 0) stem += fmt::format("-n{}", a.request.n);
    out = g.root() / "colorings" / (stem + ".coloring.json");
  }
  write_construction(c, out);
  std::cout << fmt::format("wrote {} order={} colors={}\n", out.string(), c.coloring.order(), c.coloring.num_colors());
  std::cout << fmt::format("wrote {}\n", blocks_sidecar(out).string());
  for (Color color : a.graph6_colors) {
    std::string name = out.filename().string();
    if (name.ends_with(".coloring.json")) name.resize(name.size() - 14);
    const fs::path g6 = out.parent_path() / fmt::format("{}.color{}.g6", name, color);
    write_file(g6, encode_graph6(color_class(c.coloring, color)) + "\n");
    std::cout << fmt::format("wrote {}\n", g6.string());
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string coloring;
  std::string pattern;
  int n = 0;
  std::vector<Color> colors;
  std::string report;
  std::string certificate;
};

Pattern verify_pattern(const VerifyArgs& a) {
  if (!a.pattern.empty() && a.n > 0) throw std::invalid_argument("give either --pattern or --n, not both");
  if (!a.pattern.empty()) return Pattern::parse(a.pattern);
  if (a.n > 0) return Pattern::wheel(a.n);
  throw std::invalid_argument("verify needs --pattern or --n");
}

int run_verify(const Globals& g, const VerifyArgs& a) {
  const Pattern pattern = verify_pattern(a);
  if (!fs::exists(a.coloring)) throw missing_input("coloring file " + a.coloring + " does not exist");
  const ReportFormat format = g.report_format();

  DetectionReport report;
  if (!a.certificate.empty()) {
    const fs::path root = fs::absolute(g.root());
    const fs::path rel = fs::relative(fs::absolute(a.coloring), root);
    Certified certified = certify(root, {a.certificate, rel, pattern, {g.threads, a.colors}, format});
    Catalog(root).store(certified.certificate);
    report = std::move(certified.report);
    std::cerr << fmt::format("certificate {} status={}\n", certified.certificate.id, certified.certificate.status);
  } else {
    const EdgeColoring coloring = load_coloring(a.coloring);
    report = verify_pattern_free(coloring, pattern, {g.threads, a.colors});
    if (!revalidate(coloring, report)) throw std::logic_error("witness failed re-validation");
  }
  const std::string text = format_report(report, format);
  if (!a.report.empty()) write_file(a.report, text);
  std::cout << text;
  std::cerr << fmt::format("elapsed: {:.3f} s\n", report.elapsed_seconds);
  return report.pass() ? kExitOk : kExitVerificationFailed;
}

// ---- analyze ---------------------------------------------------------------

struct GraphSource {
  std::string path;
  int complete = 0;
  std::optional<Color> color;
};

Graph load_graph_source(const GraphSource& s) {
  if (s.complete > 0) return Graph::complete(s.complete);
  if (s.path.empty()) throw std::invalid_argument("give a graph file or --complete N");
  if (!fs::exists(s.path)) throw missing_input("input file " + s.path + " does not exist");
  if (s.path.ends_with(".json")) {
    if (!s.color) throw std::invalid_argument("coloring input needs --color to pick a color class");
    return color_class(load_coloring(s.path), *s.color);
  }
  return load_graph6(s.path);
}

EdgeColoring load_coloring_source(const GraphSource& s) {
  if (s.complete > 0) return single_color_complete(s.complete);
  if (s.path.empty()) throw std::invalid_argument("give a coloring file or --complete N");
  if (!fs::exists(s.path)) throw missing_input("coloring file " + s.path + " does not exist");
  return load_coloring(s.path);
}

struct AnalyzeArgs {
  GraphSource source;
  bool girth = false, circumference = false, pancyclic = false;
  std::uint64_t budget = kDefaultLongestCycleBudget;
};

int run_analyze(const Globals& g, const AnalyzeArgs& a) {
  const Graph graph = load_graph_source(a.source);
  const bool all = !a.girth && !a.circumference && !a.pancyclic;
  nlohmann::ordered_json j;
  j["order"] = graph.order();
  j["edges"] = graph.edge_count();
  if (all || a.girth) {
    const auto gi = wheelramsey::girth(graph);
    j["girth"] = gi ? std::to_string(*gi) : "inf";
  }
  if (all || a.circumference) {
    const Circumference c = wheelramsey::circumference(graph, a.budget);
    j["circumference"] = c.length;
    j["circumference_exact"] = c.exact;
  }
  if (all || a.pancyclic) {
    if (graph.order() > kExactStructureMaxOrder) {
      j["weakly_pancyclic"] = fmt::format("n/a (order > {})", kExactStructureMaxOrder);
    } else {
      const Pancyclicity p = weak_pancyclicity(graph);
      j["weakly_pancyclic"] = p.weakly_pancyclic;
      j["missing"] = fmt::format("{}", fmt::join(p.missing, ","));
    }
  }
  switch (g.report_format()) {
    case ReportFormat::JsonLines:
      std::cout << j.dump() << "\n";
      break;
    case ReportFormat::Csv: {
      std::vector<std::string> keys, values;
      for (const auto& [key, value] : j.items()) {
        keys.push_back(key);
        values.push_back(value.is_string() ? value.get<std::string>() : value.dump());
      }
      std::cout << fmt::format("{}\n\"{}\"\n", fmt::join(keys, ","), fmt::join(values, "\",\""));
      break;
    }
    case ReportFormat::Text:
      for (const auto& [key, value] : j.items())
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      break;
  }
  return kExitOk;
}

// ---- bounds ----------------------------------------------------------------

struct BoundsArgs {
  int k = 2;
  int n = 0;
  std::string n_range;
  bool table = false;
  bool advisory = false;
};

int run_bounds(const Globals& g, const BoundsArgs& a) {
  int first = a.n, last = a.n;
  if (!a.n_range.empty()) {
    const auto dash = a.n_range.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("--n-range expects A-B");
    first = std::stoi(a.n_range.substr(0, dash));
    last = std::stoi(a.n_range.substr(dash + 1));
  } else if (a.n == 0) {
    throw std::invalid_argument("bounds needs --n or --n-range");
  }
  const auto rows = bound_rows(a.k, first, last, a.advisory);
  if (g.format == "csv") {
    std::cout << format_bounds_csv(rows);
  } else if (a.table || rows.size() > 1) {
    std::cout << format_bounds_table(rows);
  } else {
    const BoundReport& r = rows.front();
    std::cout << fmt::format("k: {}\nn: {}\nlower: {} [{}]\nupper: {} [{}]\n", r.k, r.n, r.lower.str(), r.lower_tag,
                             r.upper ? r.upper->str() : "inf", r.upper_tag);
    for (const std::string& note : r.notes) std::cout << "note: " << note << "\n";
    if (r.n >= 4 && (r.n % 2 == 0 || r.n >= 5)) {
      const Rational eps = epsilon_exponent(r.n);
      std::cout << fmt::format("epsilon: {}\n", eps.str());
    }
  }
  return kExitOk;
}

// ---- oracle ----------------------------------------------------------------

struct OracleArgs {
  GraphSource source;
  int n = 0;
  std::string pattern;
  int order = 6;
};

int oracle_cycles(const OracleArgs& a) {
  const Graph graph = load_graph_source(a.source);
  if (graph.order() > kOracleMaxOrder) throw size_cap(graph.order());
  const auto census = oracle::cycle_census(graph);
  std::vector<std::string> parts;
  for (const auto& [len, count] : census) parts.push_back(fmt::format("C{}: {}", len, count));
  std::cout << fmt::format("order: {}\ncycle-census: {{{}}}\n", graph.order(), fmt::join(parts, ", "));
  return kExitOk;
}

int oracle_wheels(const OracleArgs& a) {
  const EdgeColoring coloring = load_coloring_source(a.source);
  if (coloring.order() > kOracleMaxOrder) throw size_cap(coloring.order());
  if (a.n < 4) throw std::invalid_argument("oracle wheels needs --n >= 4");
  std::cout << fmt::format("order: {}\npattern: wheel({})\n", coloring.order(), a.n);
  for (Color c = 0; c < coloring.num_colors(); ++c) {
    const auto count = oracle::wheel_count(coloring, a.n, c);
    std::cout << fmt::format("color {}: wheels={}", c, count);
    if (auto w = find_mono_wheel(coloring, a.n, c)) std::cout << " detector-witness: " << format_witness(*w);
    std::cout << "\n";
  }
  return kExitOk;
}

int oracle_patterns(const OracleArgs& a) {
  const EdgeColoring coloring = load_coloring_source(a.source);
  if (coloring.order() > kOracleMaxOrder) throw size_cap(coloring.order());
  const Pattern p = Pattern::parse(a.pattern);
  int m = 0, missing = 0;
  switch (p.kind()) {
    case Pattern::Kind::Triangle: m = 3; break;
    case Pattern::Kind::K4Minus: m = 4; missing = 1; break;
    case Pattern::Kind::Clique: m = p.size(); break;
    default: throw std::invalid_argument("oracle patterns handles triangle, k4- and clique(m)");
  }
  std::cout << fmt::format("order: {}\npattern: {}\n", coloring.order(), p.name());
  for (Color c = 0; c < coloring.num_colors(); ++c)
    std::cout << fmt::format("color {}: subsets={}\n", c, oracle::dense_subset_count(coloring, m, missing, c));
  return kExitOk;
}

int oracle_triangle_scan(const OracleArgs& a) {
  if (a.order > 8) throw AppError("SIZE_CAP", kExitUsage, "triangle-scan enumerates 2^C(order,2) colorings; order <= 8");
  const auto scan = oracle::scan_two_colorings_for_triangle(a.order);
  std::cout << fmt::format("order: {}\ncolorings: {}\ntriangle-free: {}\n", a.order, scan.colorings, scan.triangle_free);
  if (scan.example) std::cout << "example: " << encode_coloring(*scan.example);
  if (scan.triangle_free == 0) {
    std::cout << fmt::format("conclusion: every 2-coloring of K{} has a monochromatic triangle, R(K3,K3) <= {}\n",
                             a.order, a.order);
  } else {
    std::cout << fmt::format("conclusion: R(K3,K3) > {}\n", a.order);
  }
  return kExitOk;
}

// ---- pipeline / catalog ----------------------------------------------------

int run_pipeline_command(const Globals& g, const std::string& config_path) {
  PipelineConfig config = load_pipeline(config_path);
  if (g.root_overridden()) config.output_dir = g.root();
  if (g.threads != 0) config.threads = g.threads;
  if (g.seed) config.seed = *g.seed;
  const PipelineResult result = run_pipeline(config, std::cout);
  std::cout << fmt::format("RESULT: {} pipeline={} steps={} output-dir={}\n", result.pass() ? "PASS" : "FAIL",
                           config.name, result.steps.size(), config.output_dir.string());
  return result.pass() ? kExitOk : kExitVerificationFailed;
}

int catalog_list(const Globals& g) {
  const auto certs = Catalog(g.root()).list();
  for (const Certificate& c : certs)
    std::cout << fmt::format("{:<24} {:<5} order={:<4} {}\n", c.id, c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "UNVERIFIED",
                             c.order, c.claim());
  std::cout << fmt::format("{} certificate(s)\n", certs.size());
  return kExitOk;
}

int catalog_show(const Globals& g, const std::string& id) {
  const Catalog catalog(g.root());
  const Certificate c = catalog.show(id);
  check_artifacts(c, catalog.root());
  std::cout << encode_certificate(c);
  if (auto blocks = load_blocks(catalog.root() / c.coloring)) {
    for (const Part& p : blocks->parts) std::cout << fmt::format("part {}: {}..{}\n", p.label, p.first, p.first + p.size - 1);
    for (const auto& [label, v] : blocks->special) std::cout << fmt::format("special {}: {}\n", label, v);
  }
  return kExitOk;
}

int catalog_check(const Globals& g) {
  const Catalog catalog(g.root());
  int failures = 0;
  for (const Certificate& c : catalog.list()) {
    check_artifacts(c, catalog.root());
    const EdgeColoring coloring = load_coloring(catalog.root() / c.coloring);
    const DetectionReport r = verify_pattern_free(coloring, Pattern::parse(c.pattern), {g.threads, {}});
    const bool agrees = r.pass() == c.pass();
    failures += !agrees || !r.pass();
    std::cout << fmt::format("{} {} recorded={} {}\n", agrees ? "OK  " : "DIFF", c.id, c.status, result_line(r));
  }
  return failures == 0 ? kExitOk : kExitVerificationFailed;
}

int catalog_gc(const Globals& g) {
  const auto removed = Catalog(g.root()).gc();
  for (const std::string& path : removed) std::cout << "removed " << path << "\n";
  std::cout << fmt::format("{} file(s) removed\n", removed.size());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wheel Ramsey toolkit: constructions, exact wheel detection, bounds, certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--output-dir", g.output_dir, "Artifact root (default: $WHEELRAMSEY_OUTPUT_DIR or .)");
  app.add_option("--threads", g.threads, "Worker threads, 0 = hardware concurrency")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "Seed for randomized corpora (overrides pipeline config)");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "csv", "json-lines"}));

  int code = kExitOk;

  ConstructArgs construct;
  auto* cmd = app.add_subcommand("construct", "Build a coloring and its block metadata");
  cmd->add_option("--family", construct.request.family, "even-lower | odd-lower | paley5 | rook9 | blowup | cor14")
      ->required();
  cmd->add_option("--n", construct.request.n, "Wheel order n");
  cmd->add_option("--k", construct.request.k, "Number of colors (cor14)");
  cmd->add_option("--base", construct.request.base, "Base coloring file (blowup)");
  cmd->add_option("--inner", construct.request.inner, "Inner coloring file (blowup)");
  cmd->add_option("-o,--output", construct.output, "Coloring output path");
  cmd->add_option("--graph6-color", construct.graph6_colors, "Also export these color classes as graph6");
  cmd->callback([&] { code = run_construct(g, construct); });

  VerifyArgs verify;
  cmd = app.add_subcommand("verify", "Check a coloring for monochromatic patterns");
  cmd->add_option("coloring", verify.coloring, "Coloring file")->required();
  cmd->add_option("--pattern", verify.pattern, "wheel(n) | cycle(l) | triangle | k4- | clique(m)");
  cmd->add_option("--n", verify.n, "Shorthand for --pattern wheel(n)");
  cmd->add_option("--colors", verify.colors, "Restrict to these colors")->delimiter(',');
  cmd->add_option("--report", verify.report, "Also write the report here");
  cmd->add_option("--certificate", verify.certificate, "Store a certificate with this id under the output dir");
  cmd->callback([&] { code = run_verify(g, verify); });

  AnalyzeArgs analyze;
  cmd = app.add_subcommand("analyze", "Girth, circumference and weak pancyclicity of a graph");
  cmd->add_option("graph", analyze.source.path, "graph6 file, or coloring .json with --color");
  cmd->add_option("--complete", analyze.source.complete, "Use K_N instead of a file");
  cmd->add_option("--color", analyze.source.color, "Color class of a coloring input");
  cmd->add_flag("--girth", analyze.girth);
  cmd->add_flag("--circumference", analyze.circumference);
  cmd->add_flag("--pancyclic", analyze.pancyclic);
  cmd->add_option("--budget", analyze.budget, "DFS node budget for circumference above order 32");
  cmd->callback([&] { code = run_analyze(g, analyze); });

  BoundsArgs bounds;
  cmd = app.add_subcommand("bounds", "Evaluate wheel Ramsey bounds");
  cmd->add_option("--k", bounds.k, "Number of colors")->check(CLI::PositiveNumber);
  cmd->add_option("--n", bounds.n, "Wheel order");
  cmd->add_option("--n-range", bounds.n_range, "Range A-B of wheel orders");
  cmd->add_flag("--table", bounds.table, "Aligned table output");
  cmd->add_flag("--advisory", bounds.advisory, "Allow 4 <= n <= 6 outside the proven range");
  cmd->callback([&] { code = run_bounds(g, bounds); });

  OracleArgs oracle_args;
  cmd = app.add_subcommand("oracle", "Brute-force enumeration (order <= 10)");
  cmd->require_subcommand(1);
  auto add_source = [&](CLI::App* sub) {
    sub->add_option("input", oracle_args.source.path, "Input file");
    sub->add_option("--complete", oracle_args.source.complete, "Use K_N (single color) instead of a file");
    sub->add_option("--color", oracle_args.source.color, "Color class of a coloring input");
  };
  auto* sub = cmd->add_subcommand("cycles", "Cycle census of a graph");
  add_source(sub);
  sub->callback([&] { code = oracle_cycles(oracle_args); });
  sub = cmd->add_subcommand("wheels", "Monochromatic wheel counts per color");
  add_source(sub);
  sub->add_option("--n", oracle_args.n, "Wheel order")->required();
  sub->callback([&] { code = oracle_wheels(oracle_args); });
  sub = cmd->add_subcommand("patterns", "Monochromatic triangle / K4- / clique counts per color");
  add_source(sub);
  sub->add_option("--pattern", oracle_args.pattern, "triangle | k4- | clique(m)")->required();
  sub->callback([&] { code = oracle_patterns(oracle_args); });
  sub = cmd->add_subcommand("triangle-scan", "Scan every 2-coloring of K_order for monochromatic triangles");
  sub->add_option("--order", oracle_args.order, "Order of the complete graph")->check(CLI::Range(1, 8));
  sub->callback([&] { code = oracle_triangle_scan(oracle_args); });

  std::string pipeline_config;
  cmd = app.add_subcommand("pipeline", "Run a pipeline config");
  cmd->add_option("config", pipeline_config, "Pipeline YAML file")->required();
  cmd->callback([&] { code = run_pipeline_command(g, pipeline_config); });

  std::string show_id;
  cmd = app.add_subcommand("catalog", "Inspect stored certificates");
  cmd->require_subcommand(1);
  cmd->add_subcommand("list", "List certificates")->callback([&] { code = catalog_list(g); });
  sub = cmd->add_subcommand("show", "Show one certificate and check its hashes");
  sub->add_option("id", show_id)->required();
  sub->callback([&] { code = catalog_show(g, show_id); });
  cmd->add_subcommand("check", "Re-hash and re-verify every certificate")->callback([&] { code = catalog_check(g); });
  cmd->add_subcommand("gc", "Remove unreferenced colorings and reports")->callback([&] { code = catalog_gc(g); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const AppError& e) {
    std::cerr << fmt::format("ERROR: {} {}\n", e.code(), e.what());
    return e.exit_code();
  } catch (const FormatError& e) {
    std::cerr << fmt::format("ERROR: BAD_INPUT {}\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << fmt::format("ERROR: USAGE {}\n", e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << fmt::format("ERROR: USAGE {}\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << fmt::format("ERROR: INTERNAL {}\n", e.what());
    return kExitUsage;
  }
  return code;
}
