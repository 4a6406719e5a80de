#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "homol2o/dense.hpp"

namespace homol2o {

struct DataSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> val;
  std::vector<std::size_t> test;
};

// Seeded shuffle of [0, count) followed by a contiguous train/val/test cut.
// Train and validation sizes are floor(ratio_k * count / sum(ratio)); the test
// split takes the remainder.
DataSplit split_dataset(std::size_t count, std::array<double, 3> ratio, std::uint64_t seed);

// `k` indices drawn without replacement from the test split, in draw order.
// ConfigError if the split holds fewer than `k`.
std::vector<std::size_t> test_subset(const DataSplit& split, std::size_t k, std::uint64_t seed);

// Dataset CSV: header row of column names, then one parameter row per
// instance written with round-trip precision.
void write_dataset_csv(const std::filesystem::path& path, const DenseMat& xi,
                       const std::vector<std::string>& names);
DenseMat read_dataset_csv(const std::filesystem::path& path, std::vector<std::string>* names = nullptr);

// Round-trip decimal rendering of a double.
std::string format_double(double v);

}  // namespace homol2o
