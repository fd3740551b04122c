#include "wheelramsey/app/pipeline.hpp"

#include <exception>
#include <map>
#include <random>
#include <set>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "wheelramsey/app/catalog.hpp"
#include "wheelramsey/app/errors.hpp"
#include "wheelramsey/io.hpp"
#include "wheelramsey/oracle.hpp"
#include "wheelramsey/parallel.hpp"

namespace wheelramsey::app {

namespace fs = std::filesystem;

std::string Step::kind() const {
  static constexpr const char* names[] = {"construct", "verify", "bounds", "crosscheck"};
  return names[action.index()];
}

std::vector<std::string> Step::inputs() const {
  if (const auto* c = std::get_if<ConstructStep>(&action)) {
    if (c->request.family != "blowup") return {};
    return {c->request.base.generic_string(), c->request.inner.generic_string()};
  }
  if (const auto* v = std::get_if<VerifyStep>(&action)) return {v->input};
  return {};
}

std::vector<std::string> Step::outputs() const {
  return std::visit(
      [](const auto& a) -> std::vector<std::string> {
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<A, VerifyStep>) {
          return {};
        } else if constexpr (std::is_same_v<A, ConstructStep>) {
          return {a.output, blocks_sidecar(a.output).generic_string()};
        } else {
          return {a.output};
        }
      },
      action);
}

bool PipelineResult::pass() const {
  for (const StepOutcome& s : steps)
    if (!s.ok) return false;
  return true;
}

namespace {

// Strict accessor: every key of a mapping must be consumed.
class Fields {
 public:
  Fields(const YAML::Node& node, std::string where) : node_(node), where_(std::move(where)) {
    if (!node.IsMap()) throw config_error(where_ + ": expected a mapping");
  }

  bool has(const std::string& key) const { return static_cast<bool>(node_[key]); }

  template <typename T>
  T get(const std::string& key) {
    if (!has(key)) throw config_error(where_ + ": missing key '" + key + "'");
    return as<T>(key);
  }

  template <typename T>
  T get(const std::string& key, T fallback) {
    return has(key) ? as<T>(key) : fallback;
  }

  YAML::Node node(const std::string& key) {
    used_.insert(key);
    return node_[key];
  }

  void finish() const {
    for (const auto& kv : node_) {
      const std::string key = kv.first.as<std::string>();
      if (!used_.count(key)) throw config_error(where_ + ": unknown key '" + key + "'");
    }
  }

 private:
  template <typename T>
  T as(const std::string& key) {
    used_.insert(key);
    try {
      return node_[key].as<T>();
    } catch (const YAML::Exception&) {
      throw config_error(where_ + ": bad value for '" + key + "'");
    }
  }

  YAML::Node node_;
  std::string where_;
  std::set<std::string> used_;
};

// "7-10", "8" or a two-element list.
std::pair<int, int> parse_n_range(const YAML::Node& node, const std::string& where) {
  try {
    if (node.IsSequence() && node.size() == 2) return {node[0].as<int>(), node[1].as<int>()};
    const std::string text = node.as<std::string>();
    const auto dash = text.find('-');
    if (dash == std::string::npos) return {std::stoi(text), std::stoi(text)};
    return {std::stoi(text.substr(0, dash)), std::stoi(text.substr(dash + 1))};
  } catch (const std::exception&) {
    throw config_error(where + ": bad n range");
  }
}

Step parse_step(const YAML::Node& node, std::size_t index) {
  Fields f(node, fmt::format("steps[{}]", index));
  Step step;
  step.id = f.get<std::string>("id");
  const std::string where = "step " + step.id;
  int actions = 0;
  if (f.has("construct")) {
    ++actions;
    Fields a(f.node("construct"), where + " construct");
    ConstructStep c;
    c.request.family = a.get<std::string>("family");
    c.request.n = a.get<int>("n", 0);
    c.request.k = a.get<int>("k", 0);
    c.request.base = a.get<std::string>("base", "");
    c.request.inner = a.get<std::string>("inner", "");
    c.output = a.get<std::string>("output");
    a.finish();
    step.action = c;
  }
  if (f.has("verify")) {
    ++actions;
    Fields a(f.node("verify"), where + " verify");
    VerifyStep v;
    v.input = a.get<std::string>("input");
    v.pattern = a.get<std::string>("pattern");
    v.colors = a.get<std::vector<Color>>("colors", {});
    v.certificate = a.get<std::string>("certificate", step.id);
    if (a.has("expect-sha256")) v.expect_sha256 = a.get<std::string>("expect-sha256");
    a.finish();
    try {
      Pattern::parse(v.pattern);
    } catch (const std::exception& e) {
      throw config_error(where + ": " + e.what());
    }
    step.action = v;
  }
  if (f.has("bounds")) {
    ++actions;
    Fields a(f.node("bounds"), where + " bounds");
    BoundsStep b;
    b.k = a.get<int>("k", 2);
    std::tie(b.n_first, b.n_last) = parse_n_range(a.node("n"), where);
    b.advisory = a.get<bool>("advisory", false);
    b.output = a.get<std::string>("output");
    a.finish();
    step.action = b;
  }
  if (f.has("crosscheck")) {
    ++actions;
    Fields a(f.node("crosscheck"), where + " crosscheck");
    CrosscheckStep x;
    x.samples = a.get<int>("samples", x.samples);
    x.order = a.get<int>("order", x.order);
    x.colors = a.get<int>("colors", x.colors);
    x.n = a.get<int>("n", x.n);
    x.output = a.get<std::string>("output");
    a.finish();
    if (x.order > 10) throw config_error(where + ": crosscheck order is capped at 10 (oracle size cap)");
    step.action = x;
  }
  f.finish();
  if (actions != 1) throw config_error(where + ": expected exactly one of construct, verify, bounds, crosscheck");
  return step;
}

}  // namespace

PipelineConfig parse_pipeline(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw config_error(std::string("YAML: ") + e.what());
  }
  Fields f(root, "pipeline");
  PipelineConfig config;
  config.name = f.get<std::string>("name");
  config.output_dir = f.get<std::string>("output-dir", "artifacts/" + config.name);
  config.threads = f.get<int>("threads", 0);
  config.seed = f.get<std::uint64_t>("seed", 1);
  const YAML::Node steps = f.node("steps");
  if (!steps || !steps.IsSequence() || steps.size() == 0) throw config_error("pipeline: 'steps' must be a non-empty list");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    config.steps.push_back(parse_step(steps[i], i));
    if (!ids.insert(config.steps.back().id).second)
      throw config_error("duplicate step id '" + config.steps.back().id + "'");
  }
  f.finish();
  return config;
}

PipelineConfig load_pipeline(const fs::path& path) {
  if (!fs::exists(path)) throw missing_input("pipeline config " + path.string() + " does not exist");
  return parse_pipeline(read_file(path));
}

std::vector<std::vector<std::size_t>> schedule(const PipelineConfig& config) {
  std::map<std::string, std::size_t> producer;
  for (std::size_t i = 0; i < config.steps.size(); ++i)
    for (const std::string& out : config.steps[i].outputs())
      if (!producer.emplace(out, i).second) throw config_error("two steps write " + out);

  const std::size_t count = config.steps.size();
  std::vector<int> level(count, -1);
  std::vector<int> state(count, 0);  // 0 new, 1 in progress, 2 done
  auto visit = [&](auto&& self, std::size_t i) -> int {
    if (state[i] == 2) return level[i];
    if (state[i] == 1) throw config_error("dependency cycle through step " + config.steps[i].id);
    state[i] = 1;
    int lvl = 0;
    for (const std::string& in : config.steps[i].inputs()) {
      auto it = producer.find(in);
      if (it != producer.end()) {
        lvl = std::max(lvl, self(self, it->second) + 1);
      } else if (!fs::exists(config.output_dir / in)) {
        throw missing_input("step " + config.steps[i].id + " reads " + in + ", which no step produces");
      }
    }
    state[i] = 2;
    return level[i] = lvl;
  };
  std::vector<std::vector<std::size_t>> waves;
  for (std::size_t i = 0; i < count; ++i) {
    const auto lvl = static_cast<std::size_t>(visit(visit, i));
    if (waves.size() <= lvl) waves.resize(lvl + 1);
  }
  for (std::size_t i = 0; i < count; ++i) waves[static_cast<std::size_t>(level[i])].push_back(i);
  return waves;
}

namespace {

struct Runner {
  const PipelineConfig& config;
  Catalog catalog;

  StepOutcome run(std::size_t index) {
    const Step& step = config.steps[index];
    StepOutcome out{step.id, step.kind(), true, ""};
    std::visit([&](const auto& action) { execute(index, action, out); }, step.action);
    return out;
  }

  void execute(std::size_t, const ConstructStep& s, StepOutcome& out) {
    ConstructRequest request = s.request;
    if (!request.base.empty()) request.base = config.output_dir / request.base;
    if (!request.inner.empty()) request.inner = config.output_dir / request.inner;
    const Construction c = build_construction(request);
    write_construction(c, config.output_dir / s.output);
    out.detail = fmt::format("{} order={} colors={}", s.output, c.coloring.order(), c.coloring.num_colors());
  }

  void execute(std::size_t, const VerifyStep& s, StepOutcome& out) {
    const fs::path input = config.output_dir / s.input;
    if (!fs::exists(input)) throw missing_input("step " + out.id + ": " + s.input + " does not exist");
    if (s.expect_sha256) {
      const std::string actual = sha256_hex(read_file(input));
      if (actual != *s.expect_sha256)
        throw hash_mismatch(
            fmt::format("step={} file={} expected={} actual={}", out.id, s.input, *s.expect_sha256, actual));
    }
    CertifyRequest request{s.certificate, s.input, Pattern::parse(s.pattern), {config.threads, s.colors}};
    Certified certified = certify(config.output_dir, request);
    catalog.store(certified.certificate);
    out.ok = certified.certificate.pass();
    out.detail = result_line(certified.report);
  }

  void execute(std::size_t, const BoundsStep& s, StepOutcome& out) {
    write_file(config.output_dir / s.output, format_bounds_csv(bound_rows(s.k, s.n_first, s.n_last, s.advisory)));
    out.detail = fmt::format("{} k={} n={}-{}", s.output, s.k, s.n_first, s.n_last);
  }

  void execute(std::size_t index, const CrosscheckStep& s, StepOutcome& out) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> pick(0, s.colors - 1);
    int agree = 0, total = 0, found = 0;
    std::string lines;
    for (int sample = 0; sample < s.samples; ++sample) {
      EdgeColoring coloring(s.order, s.colors);
      for (Vertex u = 0; u < s.order; ++u)
        for (Vertex v = u + 1; v < s.order; ++v) coloring.set_color(u, v, pick(rng));
      for (Color c = 0; c < s.colors; ++c) {
        const bool detected = find_mono_wheel(coloring, s.n, c, {config.threads}).has_value();
        const bool expected = oracle::has_wheel(coloring, s.n, c);
        ++total;
        agree += detected == expected;
        found += detected;
        lines += fmt::format("sample={} color={} detector={} oracle={}\n", sample, c, detected ? 1 : 0, expected ? 1 : 0);
      }
    }
    const std::string summary = fmt::format("crosscheck wheel({}) order={} colors={} samples={} agree={}/{} found={}",
                                            s.n, s.order, s.colors, s.samples, agree, total, found);
    write_file(config.output_dir / s.output, lines + summary + "\n");
    out.ok = agree == total;
    out.detail = summary;
  }
};

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config, std::ostream& log) {
  const auto waves = schedule(config);
  fs::create_directories(config.output_dir);
  Runner runner{config, Catalog(config.output_dir)};
  PipelineResult result;
  result.steps.resize(config.steps.size());
  for (std::size_t w = 0; w < waves.size(); ++w) {
    const auto& wave = waves[w];
    std::vector<std::exception_ptr> errors(wave.size());
    parallel_for(static_cast<int>(wave.size()), config.threads, [&](int i) {
      try {
        result.steps[wave[i]] = runner.run(wave[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
    // Report and fail in config order so the outcome is independent of scheduling.
    for (std::size_t i = 0; i < wave.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      const StepOutcome& s = result.steps[wave[i]];
      log << fmt::format("[wave {}] {} {} {}: {}\n", w, s.ok ? "OK  " : "FAIL", s.kind, s.id, s.detail);
    }
  }

  std::string summary = fmt::format("pipeline: {}\nseed: {}\n", config.name, config.seed);
  for (const StepOutcome& s : result.steps)
    summary += fmt::format("step: {} {} {} {}\n", s.id, s.kind, s.ok ? "ok" : "fail", s.detail);
  summary += fmt::format("result: {}\ncreated: {}\n", result.pass() ? "PASS" : "FAIL", utc_timestamp());
  write_file(config.output_dir / "summary.txt", summary);
  return result;
}

}  // namespace wheelramsey::app
