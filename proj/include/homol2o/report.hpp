#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "homol2o/metrics.hpp"
#include "homol2o/mlp.hpp"
#include "homol2o/problem.hpp"

namespace homol2o {

enum class TableStyle { acopf, randnlp };

TableStyle table_style_for(const std::string& problem_kind);

struct EvalReport {
  std::string label;
  std::string problem_kind;
  std::vector<std::size_t> instance_ids;  // dataset row of each evaluated instance
  ViolationStats stats;
};

// Scores `policy` on `xi` against the original problem.
EvalReport evaluate(const std::string& label, const PolicyNet& policy, const ParametricProblem& problem,
                    const DenseMat& xi, std::vector<std::size_t> instance_ids = {});

struct SummaryRow {
  std::string label;
  std::string problem_kind;
  std::size_t instances = 0;
  Aggregate objective;
  Aggregate mean_eq;
  Aggregate max_eq;
  Aggregate mean_ineq;
  Aggregate max_ineq;
};

// Aligned text table. ACOPF columns: Obj | Mean eq. | Max eq. | Mean ineq. |
// Max ineq.; randnlp columns: Obj | Mean viol. | Max viol. All cells are
// "mean (std)"; mean violations use 4 decimals, maxima 3.
std::string format_table(const std::vector<EvalReport>& reports);
std::string format_table(const std::vector<SummaryRow>& rows);

// Summary CSV with one row per report holding every aggregate at full
// precision.
std::string summary_csv(const std::vector<EvalReport>& reports);
std::string summary_csv(const std::vector<SummaryRow>& rows);


std::vector<SummaryRow> parse_summary_csv(const std::string& text);
SummaryRow summary_row(const EvalReport& report);

// One row per instance: id, objective, mean/max eq, mean/max ineq.
std::string instances_csv(const EvalReport& report);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace homol2o
