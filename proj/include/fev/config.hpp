#pragma once

#include "fev/attacks.hpp"
#include "fev/models.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fev {

/// Schema or syntax problem in an experiment file. Messages carry "source:line: ...".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DatasetSection {
  int n_real = 2000;
  int n_fake = 2000;
  double train_fraction = 0.8;
  double val_fraction = 0.1;
};

struct GeneratorSection {
  int reals = 2000;  // procedural images the autoencoder is fitted to (own seed stream)
  int steps = 1500;
  int batch = 16;
  double lr = 2e-3;
};

/// Which part of the training split a model sees, so that two models can
/// be trained on disjoint halves.
enum class TrainSubset : std::uint8_t { All, FirstHalf, SecondHalf };

struct ModelSection {
  std::string name;
  Architecture architecture = Architecture::PixelCnn;
  std::vector<int> widths{16, 32, 64};  // pixel-cnn only
  int epochs = 20;
  int batch = 32;
  double lr = 1e-3;
  bool augment = false;
  TrainSubset subset = TrainSubset::All;
};

enum class LaunderKind : std::uint8_t { Jpeg, Blur, Resize };

struct LaunderSpec {
  LaunderKind kind = LaunderKind::Jpeg;
  double parameter = 80;  // quality, sigma or scale

  friend bool operator==(const LaunderSpec&, const LaunderSpec&) = default;
};

struct EvaluationSection {
  double target_fpr = 0.05;
  std::vector<LaunderSpec> launder;
};

struct AttackSection {
  std::string name;
  std::string model;
  int images = 200;        // attacked test images (fresh latents for kind = latent)
  int train_images = 1000;  // patch only: training fakes from the train split
  AttackConfig config;
};

struct TransferSection {
  std::string source;
  std::string target;
  int images = 200;
  bool allow_same = false;
  AttackConfig config;  // kind is always l0
};

struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::filesystem::path output = "runs/desk";
  int workers = 0;  // 0 = all logical cores
  DatasetSection dataset;
  GeneratorSection generator;
  std::vector<ModelSection> models;
  EvaluationSection evaluation;
  std::vector<AttackSection> attacks;
  std::optional<TransferSection> transfer;

  const ModelSection& model(std::string_view name) const;
  /// Stream seed for one named purpose, derived from the experiment seed.
  std::uint64_t derive_seed(std::string_view purpose) const;
  int resolved_workers() const;
};

/// Defaults of each attack kind (PGD steps default to a quarter of the budget, etc.).
AttackConfig default_attack_config(AttackKind kind);

ExperimentConfig parse_config(std::string_view text, const std::string& source = "<config>");
/// Canonical form: every field, fixed order, shortest round-trip numbers.
std::string serialize_config(const ExperimentConfig& config);
ExperimentConfig load_config(const std::filesystem::path& path);
/// FNV-1a of the canonical form, as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

std::string_view subset_name(TrainSubset subset);
std::string launder_name(const LaunderSpec& spec);
Image apply_launder(const Image& image, const LaunderSpec& spec);

}  // namespace fev
