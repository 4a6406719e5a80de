#pragma once

#include <array>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "homol2o/acopf.hpp"
#include "homol2o/problem.hpp"
#include "homol2o/train.hpp"

namespace homol2o {

inline constexpr int kRunConfigVersion = 1;

struct ProblemConfig {
  std::string kind = "acopf";  // acopf | randnlp
  std::string case_path;       // acopf grid file; empty selects the bundled case30
  acopf::AcopfOptions acopf;
  std::size_t n = 5;           // randnlp size
  std::uint64_t system_seed = 0;
};

struct DatasetConfig {
  std::string path = "data_out";  // directory holding xi.csv and problem.json
  std::size_t count = 50000;
  std::uint64_t seed = 0;
  std::array<double, 3> split{8.0, 1.0, 1.0};
  std::uint64_t split_seed = 0;
};

struct EvalConfig {
  std::vector<std::string> checkpoints;
  std::vector<std::string> labels;
  std::size_t test_subset = 100;  // 0 evaluates the whole test split
  std::uint64_t subset_seed = 0;
};

struct ReportConfig {
  std::vector<std::string> inputs;  // eval output directories, in row order
};

// Declarative run description. Relative paths resolve against base_dir (the
// directory of the config file).
struct RunConfig {
  int schema_version = kRunConfigVersion;
  std::string label;
  std::uint64_t seed = 0;
  std::string out = "out";
  ProblemConfig problem;
  DatasetConfig dataset;
  TrainConfig train;
  EvalConfig eval;
  ReportConfig report;
  std::filesystem::path base_dir = ".";

  std::filesystem::path resolve(const std::string& p) const;
  void validate() const;
};

// Problem-dependent training defaults: batch 1024, 2 x 200 hidden units and
// output weights scaled by 0.01 around the flat start for ACOPF; batch 256 and
// 4 x round(30 sqrt(n/5)) for randnlp.
TrainConfig default_train_config(const ProblemConfig& problem);

// Unknown keys anywhere raise ConfigError naming the dotted path.
RunConfig run_config_from_json(const nlohmann::json& doc, std::filesystem::path base_dir = ".");
nlohmann::json run_config_to_json(const RunConfig& config);
RunConfig load_run_config(const std::filesystem::path& path,
                          const std::vector<std::string>& overrides = {});

// Applies "a.b.c=value"; value is parsed as JSON and falls back to a string.
void apply_override(nlohmann::json& doc, const std::string& assignment);

// Self-contained problem description written next to a dataset.
nlohmann::json problem_description_json(const ProblemConfig& problem, const std::filesystem::path& base_dir);
std::unique_ptr<ParametricProblem> problem_from_json(const nlohmann::json& sys);

// Bundled MATPOWER case30 in the grid-case JSON schema.
const std::string& builtin_case30_json();

}  // namespace homol2o
