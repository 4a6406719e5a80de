#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "homol2o/config.hpp"
#include "homol2o/report.hpp"
#include "homol2o/train.hpp"

namespace homol2o {

// Dataset directory contents.
inline constexpr const char* kDatasetCsv = "xi.csv";
inline constexpr const char* kProblemJson = "problem.json";

struct Dataset {
  std::unique_ptr<ParametricProblem> problem;
  DenseMat xi;
};

Dataset load_dataset(const std::filesystem::path& dir);

// Writes xi.csv and problem.json into the dataset directory.
void cmd_gen_data(const RunConfig& config);

struct TrainOutcome {
  TrainResult result;
  std::filesystem::path checkpoint;
};

// Splits the dataset, trains, and writes checkpoint.json, epochs.csv,
// stages.csv, stages/stage_NNN.json and train_summary.json into `out`.
TrainOutcome cmd_train(const RunConfig& config);

// Evaluates each checkpoint on the seeded test subset and writes report.txt,
// report.csv, instances_K.csv and test_subset.csv into `out`.
std::vector<EvalReport> cmd_eval(const RunConfig& config);

// Combines report.csv files of several eval outputs, in input order.
std::vector<SummaryRow> cmd_report(const RunConfig& config);

std::string epochs_csv(const std::vector<EpochLog>& logs);
std::string stages_csv(const std::vector<StageLog>& logs);

}  // namespace homol2o
