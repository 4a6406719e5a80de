#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <nlohmann/json.hpp>

#include "homol2o/acopf.hpp"
#include "homol2o/checkpoint.hpp"
#include "homol2o/commands.hpp"
#include "homol2o/config.hpp"
#include "homol2o/error.hpp"
#include "homol2o/homotopy.hpp"
#include "homol2o/metrics.hpp"
#include "homol2o/randnlp.hpp"
#include "homol2o/report.hpp"

namespace py = pybind11;
using namespace homol2o;

namespace {

std::set<Transform> parse_transforms(const std::vector<std::string>& names) {
  std::set<Transform> out;
  for (const std::string& n : names) out.insert(parse_transform(n));
  return out;
}

HomotopyState stage_at(const std::vector<std::string>& transforms, double lambda) {
  if (transforms.empty()) return HomotopyState::original();
  HomotopyState st = HomotopyState::start(parse_transforms(transforms), 0.05);
  st.lambda = lambda;
  st.validate();
  return st;
}

py::dict aggregate_dict(const Aggregate& a) {
  py::dict d;
  d["mean"] = a.mean;
  d["std"] = a.std;
  return d;
}

py::dict stats_dict(const ViolationStats& s) {
  py::dict d;
  d["objective"] = aggregate_dict(s.objective);
  d["mean_eq"] = aggregate_dict(s.mean_eq);
  d["max_eq"] = aggregate_dict(s.max_eq);
  d["mean_ineq"] = aggregate_dict(s.mean_ineq);
  d["max_ineq"] = aggregate_dict(s.max_ineq);
  return d;
}

py::dict summary_dict(const SummaryRow& r) {
  py::dict d;
  d["label"] = r.label;
  d["problem"] = r.problem_kind;
  d["instances"] = r.instances;
  d["objective"] = aggregate_dict(r.objective);
  d["mean_eq"] = aggregate_dict(r.mean_eq);
  d["max_eq"] = aggregate_dict(r.max_eq);
  d["mean_ineq"] = aggregate_dict(r.mean_ineq);
  d["max_ineq"] = aggregate_dict(r.max_ineq);
  return d;
}

RunConfig config_at(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
  return load_run_config(path, overrides);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Homotopy-guided self-supervised learning to optimize";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DimensionError>(m, "DimensionError", base);
  py::register_exception<NumericError>(m, "NumericError", base);
  py::register_exception<ConfigError>(m, "ConfigError", base);
  py::register_exception<DataError>(m, "DataError", base);
  py::register_exception<DivergenceError>(m, "DivergenceError", base);

  m.def("transform_names", &transform_names);
  m.def("schedule_lambdas", &schedule_lambdas, py::arg("delta_lambda"), py::arg("start_lambda") = 0.0);

  py::class_<ParametricProblem, std::shared_ptr<ParametricProblem>>(m, "Problem")
      .def_property_readonly("kind", &ParametricProblem::kind)
      .def_property_readonly("signature", &ParametricProblem::signature)
      .def_property_readonly("dim_x", &ParametricProblem::dim_x)
      .def_property_readonly("dim_xi", &ParametricProblem::dim_xi)
      .def_property_readonly("num_eq", &ParametricProblem::num_eq)
      .def_property_readonly("num_ineq", &ParametricProblem::num_ineq)
      .def_property_readonly("xi_names", &ParametricProblem::xi_names)
      .def_property_readonly("nominal_decision", &ParametricProblem::nominal_decision)
      .def("sample", &ParametricProblem::sample, py::arg("count"), py::arg("seed"))
      .def(
          "eval_constraints",
          [](const ParametricProblem& p, const DenseMat& x, const DenseMat& xi,
             const std::vector<std::string>& transforms, double lambda) {
            const ConstraintValues v = eval_constraints(p, x, xi, stage_at(transforms, lambda));
            py::dict d;
            d["objective"] = DenseMat(v.objective);
            d["eq"] = DenseMat(v.eq);
            d["ineq"] = DenseMat(v.ineq);
            return d;
          },
          py::arg("x"), py::arg("xi"), py::arg("transforms") = std::vector<std::string>{},
          py::arg("lambda_") = 1.0)
      .def(
          "violation_metrics",
          [](const ParametricProblem& p, const DenseMat& x, const DenseMat& xi) {
            return stats_dict(violation_metrics(p, x, xi));
          },
          py::arg("x"), py::arg("xi"));

  py::class_<acopf::AcopfProblem, ParametricProblem, std::shared_ptr<acopf::AcopfProblem>>(m, "AcopfProblem")
      .def(py::init([](const std::string& case_json) {
             const std::string& text = case_json.empty() ? builtin_case30_json() : case_json;
             return std::make_shared<acopf::AcopfProblem>(acopf::GridCase::from_json(nlohmann::json::parse(text)));
           }),
           py::arg("case_json") = std::string())
      .def_property_readonly("ybus", [](const acopf::AcopfProblem& p) { return Eigen::MatrixXcd(p.ybus().y); })
      .def(
          "tx_step_ybus",
          [](const acopf::AcopfProblem& p, double lambda, double delta_short) {
            return Eigen::MatrixXcd(acopf::tx_step_ybus(p.grid(), lambda, delta_short).y);
          },
          py::arg("lambda_"), py::arg("delta_short") = 1e-3)
      .def("dispatch_cost", [](const acopf::AcopfProblem& p, const std::vector<double>& pg) {
        return acopf::dispatch_cost(p.grid(), pg);
      });

  py::class_<randnlp::RandNlpProblem, ParametricProblem, std::shared_ptr<randnlp::RandNlpProblem>>(m, "RandNlpProblem")
      .def(py::init([](std::size_t n, std::uint64_t system_seed) {
             return std::make_shared<randnlp::RandNlpProblem>(randnlp::generate_system(n, system_seed));
           }),
           py::arg("n"), py::arg("system_seed"))
      .def(
          "oracle",
          [](const randnlp::RandNlpProblem& p, const std::vector<double>& xi, double resolution, bool refine) {
            const randnlp::OracleResult r = randnlp::oracle_grid_search(p.sys(), xi, resolution, {}, refine);
            py::dict d;
            d["feasible"] = r.feasible;
            d["objective"] = r.objective;
            d["x"] = r.x;
            return d;
          },
          py::arg("xi"), py::arg("resolution") = 0.01, py::arg("refine") = true);

  py::class_<PolicyNet>(m, "PolicyNet")
      .def_property_readonly("layer_dims", &PolicyNet::layer_dims)
      .def_property_readonly("num_params", &PolicyNet::num_params)
      .def("forward", &PolicyNet::forward, py::arg("xi"));

  m.def(
      "load_checkpoint",
      [](const std::filesystem::path& path) {
        Checkpoint c = load_checkpoint(path);
        py::dict meta;
        meta["problem_kind"] = c.meta.problem_kind;
        meta["problem_signature"] = c.meta.problem_signature;
        meta["method"] = c.meta.method;
        meta["label"] = c.meta.label;
        return py::make_tuple(c.net, meta);
      },
      py::arg("path"));

  m.def(
      "load_dataset",
      [](const std::filesystem::path& dir) {
        Dataset d = load_dataset(dir);
        return py::make_tuple(std::shared_ptr<ParametricProblem>(std::move(d.problem)), d.xi);
      },
      py::arg("dir"));

  m.def(
      "gen_data",
      [](const std::filesystem::path& config, const std::vector<std::string>& overrides) {
        cmd_gen_data(config_at(config, overrides));
      },
      py::arg("config"), py::arg("overrides") = std::vector<std::string>{});
  m.def(
      "train",
      [](const std::filesystem::path& config, const std::vector<std::string>& overrides) {
        TrainOutcome t;
        {
          py::gil_scoped_release release;
          t = cmd_train(config_at(config, overrides));
        }
        py::dict d;
        d["checkpoint"] = t.checkpoint;
        d["stages"] = t.result.stages.size();
        d["total_steps"] = t.result.total_steps;
        d["final_val_loss"] = t.result.final_val_loss;
        return d;
      },
      py::arg("config"), py::arg("overrides") = std::vector<std::string>{});
  m.def(
      "evaluate",
      [](const std::filesystem::path& config, const std::vector<std::string>& overrides) {
        py::list rows;
        for (const EvalReport& r : cmd_eval(config_at(config, overrides))) rows.append(summary_dict(summary_row(r)));
        return rows;
      },
      py::arg("config"), py::arg("overrides") = std::vector<std::string>{});
  m.def(
      "report",
      [](const std::filesystem::path& config, const std::vector<std::string>& overrides) {
        py::list rows;
        for (const SummaryRow& r : cmd_report(config_at(config, overrides))) rows.append(summary_dict(r));
        return rows;
      },
      py::arg("config"), py::arg("overrides") = std::vector<std::string>{});
}
