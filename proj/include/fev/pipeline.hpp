#pragma once

#include "fev/config.hpp"
#include "fev/datagen.hpp"

#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fev {

/// A stage could not run or did not finish (missing artifact, divergence, I/O).
class StageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Where each stage reads and writes, relative to the experiment output directory.
struct Layout {
  std::filesystem::path root;

  std::filesystem::path generator_dir() const { return root / "generator"; }
  std::filesystem::path generator_weights() const { return generator_dir() / "generator.fev"; }
  std::filesystem::path dataset_dir() const { return root / "dataset"; }
  std::filesystem::path model_dir(std::string_view name) const { return root / "models" / std::string(name); }
  std::filesystem::path model_weights(std::string_view name) const { return model_dir(name) / "model.fev"; }
  std::filesystem::path attack_dir(std::string_view name) const { return root / "attacks" / std::string(name); }
  std::filesystem::path transfer_dir() const { return root / "transfer"; }
  std::filesystem::path report_dir() const { return root / "report"; }
};

/// Image id used in results files: "test/fake/00012.png" -> "test_fake_00012".
std::string image_id(const DatasetEntry& entry);

/// Tau as written by the train stage.
Tau load_tau(const std::filesystem::path& model_dir);

void cmd_gen_data(const ExperimentConfig& config, std::ostream& log);
/// only: restrict to one model or attack section by name (empty = all).
void cmd_train(const ExperimentConfig& config, std::ostream& log, std::string_view only = {});
void cmd_attack(const ExperimentConfig& config, std::ostream& log, std::string_view only = {});
void cmd_transfer(const ExperimentConfig& config, std::ostream& log);
void cmd_report(const ExperimentConfig& config, std::ostream& log);

}  // namespace fev
