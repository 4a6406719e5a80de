#pragma once

#include <complex>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "homol2o/dense.hpp"

namespace homol2o::acopf {

// Grid case file schema ("homol2o.gridcase", version 1). All electrical
// quantities are per-unit on base_mva; costs are $/MWh^2, $/MWh, $/h.
inline constexpr int kGridCaseVersion = 1;

enum class BusType { slack, pv, pq };

struct Bus {
  int id = 0;
  BusType type = BusType::pq;
  double gs = 0.0;  // shunt conductance
  double bs = 0.0;  // shunt susceptance
  double vmin = 0.95;
  double vmax = 1.05;
};

struct Branch {
  int from = 0;
  int to = 0;
  double r = 0.0;
  double x = 0.0;
  double b = 0.0;      // total line charging
  double tap = 1.0;    // off-nominal ratio, 1 for lines
  double shift = 0.0;  // phase shift, radians
  bool in_service = true;
};

struct Generator {
  int bus = 0;
  double pmin = 0.0, pmax = 0.0;
  double qmin = 0.0, qmax = 0.0;
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

struct Load {
  int bus = 0;
  double pd = 0.0;
  double qd = 0.0;
};

struct GridCase {
  std::string name;
  double base_mva = 100.0;
  std::vector<Bus> buses;
  std::vector<Branch> branches;
  std::vector<Generator> generators;
  std::vector<Load> loads;

  std::size_t num_buses() const { return buses.size(); }
  std::size_t num_generators() const { return generators.size(); }
  std::size_t bus_index(int id) const;
  std::size_t slack_index() const;

  void validate() const;

  static GridCase from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;
  static GridCase load(const std::filesystem::path& path);
};

// Complex bus admittance matrix.
struct AdmittanceMatrix {
  Eigen::MatrixXcd y;

  DenseMat real() const { return y.real(); }
  DenseMat imag() const { return y.imag(); }
};

// Standard branch pi-model stamping plus bus shunts. Rejects in-service
// branches with r = x = 0.
AdmittanceMatrix build_ybus(const GridCase& grid);

// Same topology with every series impedance scaled by delta_short and charging
// and bus shunts removed.
AdmittanceMatrix build_shorted_ybus(const GridCase& grid, double delta_short);

// (1 - lambda) Y0 + lambda Ybus.
AdmittanceMatrix tx_step_ybus(const GridCase& grid, double lambda, double delta_short);
AdmittanceMatrix blend_admittance(const AdmittanceMatrix& shorted, const AdmittanceMatrix& full,
                                  double lambda);

}  // namespace homol2o::acopf
