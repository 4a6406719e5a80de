#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace homol2o {

// Row-major 64-bit dense matrix. Batches are stored one instance per row.
using DenseMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowVec = Eigen::Matrix<double, 1, Eigen::Dynamic>;

// Ordered list of trainable tensors (W0, b0, W1, b1, ...).
using ParamList = std::vector<DenseMat>;

inline bool all_finite(const DenseMat& m) { return m.allFinite(); }

// Copies the rows named by `indices` into a new matrix.
DenseMat gather_rows(const DenseMat& m, const std::vector<std::size_t>& indices);

// FNV-1a over the raw bytes of every entry; used to fingerprint weights.
std::uint64_t hash_params(const ParamList& params);

}  // namespace homol2o
