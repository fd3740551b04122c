#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "wheelramsey/app/operations.hpp"
#include "wheelramsey/detection.hpp"

namespace wheelramsey::app {

struct ConstructStep {
  ConstructRequest request;  // blowup operand paths are relative to the output dir
  std::string output;
};

struct VerifyStep {
  std::string input;
  std::string pattern;
  std::vector<Color> colors;
  std::string certificate;                   // id; defaults to the step id
  std::optional<std::string> expect_sha256;  // of the input coloring file
};

struct BoundsStep {
  int k = 2;
  int n_first = 7;
  int n_last = 7;
  bool advisory = false;
  std::string output;
};

// Seeded cross-check of wheel detection against the brute-force oracle.
struct CrosscheckStep {
  int samples = 20;
  int order = 8;
  int colors = 2;
  int n = 5;
  std::string output;
};

struct Step {
  std::string id;
  std::variant<ConstructStep, VerifyStep, BoundsStep, CrosscheckStep> action;

  std::string kind() const;
  std::vector<std::string> inputs() const;
  std::vector<std::string> outputs() const;
};

struct PipelineConfig {
  std::string name;
  std::filesystem::path output_dir;
  int threads = 0;
  std::uint64_t seed = 1;
  std::vector<Step> steps;
};

// YAML file. Throws AppError(BAD_CONFIG) on schema violations.
PipelineConfig load_pipeline(const std::filesystem::path& path);
PipelineConfig parse_pipeline(const std::string& text);

// Steps grouped into waves; every step's inputs are produced by an earlier
// wave or already exist on disk. Throws on cycles and duplicate outputs.
std::vector<std::vector<std::size_t>> schedule(const PipelineConfig& config);

struct StepOutcome {
  std::string id;
  std::string kind;
  bool ok = true;
  std::string detail;
};

struct PipelineResult {
  std::vector<StepOutcome> steps;  // config order
  bool pass() const;
};

// Runs every wave, steps of a wave concurrently. Writes summary.txt into the
// output directory. Integrity errors propagate as AppError.
PipelineResult run_pipeline(const PipelineConfig& config, std::ostream& log);

}  // namespace wheelramsey::app
