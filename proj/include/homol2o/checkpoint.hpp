#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "homol2o/mlp.hpp"

namespace homol2o {

// Model checkpoint: a JSON record with layer dims, activation, standardizer and
// weights. Every float array is stored as the hex encoding of its
// little-endian IEEE-754 float64 bytes, so a save/load cycle is bit-exact.
inline constexpr int kCheckpointVersion = 1;

struct CheckpointMeta {
  std::string problem_kind;
  std::string problem_signature;
  std::string method;
  std::string label;
  nlohmann::json extra = nlohmann::json::object();
};

struct Checkpoint {
  PolicyNet net;
  CheckpointMeta meta;
};

std::string encode_f64(const double* data, std::size_t count);
std::vector<double> decode_f64(const std::string& hex);

nlohmann::json checkpoint_to_json(const PolicyNet& net, const CheckpointMeta& meta);
Checkpoint checkpoint_from_json(const nlohmann::json& doc);

void save_checkpoint(const std::filesystem::path& path, const PolicyNet& net,
                     const CheckpointMeta& meta);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace homol2o
