#pragma once

#include "fev/adam.hpp"
#include "fev/eval.hpp"
#include "fev/models.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fev {

struct LabeledSet {
  std::vector<Image> images;
  std::vector<int> labels;  // 1 = fake, 0 = real

  void append(std::vector<Image> imgs, int label);
  std::size_t size() const { return images.size(); }
};

struct TrainConfig {
  int epochs = 20;
  int batch = 32;
  double lr = 1e-3;
  bool augment = false;
  /// Fraction of the training set held out when no explicit held-out set is given.
  double heldout_fraction = 0.1;
  bool shuffle_labels = false;
  std::uint64_t seed = 1;
};

struct TrainResult {
  ClassifierParams params;
  std::vector<double> loss_curve;  // mean training loss per epoch
};

/// Random blur or JPEG laundering, each with probability 1/2.
Image augment_image(const Image& image, std::mt19937_64& rng);

/// Binary cross-entropy training with Adam. Held-out AUC lands in params.meta.
TrainResult train_classifier(const ClassifierParams& init, const LabeledSet& train, const LabeledSet& heldout,
                             const TrainConfig& cfg);
/// Splits cfg.heldout_fraction off the data first.
TrainResult train_classifier(const ClassifierParams& init, const LabeledSet& data, const TrainConfig& cfg);

RocReport evaluate(const ClassifierParams& params, const LabeledSet& data);

struct GeneratorTrainConfig {
  int steps = 600;
  int batch = 16;
  double lr = 2e-3;
  std::uint64_t seed = 1;
};

struct GeneratorTrainResult {
  GeneratorParams gen;
  std::vector<double> loss_curve;  // reconstruction MSE per step
};

/// Trains the decoder as half of an autoencoder on the given real images, then
/// folds the encoder's latent statistics into the seed layer so that z ~ N(0, I).
GeneratorTrainResult train_generator(std::span<const Image> reals, const GeneratorTrainConfig& cfg);

}  // namespace fev
