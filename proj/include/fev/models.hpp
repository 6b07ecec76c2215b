#pragma once

#include "fev/graph.hpp"
#include "fev/image.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fev {

enum class Architecture : std::uint8_t { PixelCnn, SpectralCnn, Generator };

std::string_view architecture_tag(Architecture arch);
Architecture parse_architecture(std::string_view tag);

struct NamedTensor {
  std::string name;
  Tensor value;
};

/// Ordered, named parameter collection shared by classifiers and generators.
class ParamSet {
 public:
  ParamSet() = default;
  explicit ParamSet(Architecture arch) : arch_(arch) {}

  Architecture architecture() const { return arch_; }
  const std::vector<NamedTensor>& tensors() const { return tensors_; }
  std::vector<NamedTensor>& tensors() { return tensors_; }

  void add(std::string name, Tensor value);
  bool contains(std::string_view name) const;
  const Tensor& get(std::string_view name) const;
  Tensor& get(std::string_view name);
  std::size_t parameter_count() const;

  friend bool operator==(const ParamSet& a, const ParamSet& b);

 private:
  Architecture arch_ = Architecture::PixelCnn;
  std::vector<NamedTensor> tensors_;
};

struct TrainingMetadata {
  int epochs = 0;
  bool augment = false;
  std::string dataset_hash;
  double heldout_auc = 0.0;
  std::uint64_t seed = 0;
};

struct ClassifierParams {
  ParamSet params;
  TrainingMetadata meta;

  Architecture architecture() const { return params.architecture(); }
};

inline constexpr int kLatentZ = 32;
inline constexpr int kLatentW = 16;

struct GeneratorParams {
  ParamSet params{Architecture::Generator};
};

inline constexpr double kLeakySlope = 0.1;

/// Parameters recorded as graph leaves, so training can ask for their gradients.
template <typename T>
struct BoundParams {
  Architecture arch = Architecture::PixelCnn;
  std::vector<std::string> names;
  std::vector<BasicVar<T>> vars;

  bool contains(std::string_view name) const;
  BasicVar<T> get(std::string_view name) const;
};

template <typename T>
BoundParams<T> bind_params(BasicGraph<T>& graph, const ParamSet& params);

// -- classifiers ------------------------------------------------------------

/// Blocks of [conv3x3 -> leaky-relu -> avg-pool2], then global-avg-pool and a
/// dense layer to one logit. Widths {16, 32, 64} is the detector; {8, 16} the surrogate.
ClassifierParams init_pixel_cnn(std::span<const int> widths, std::uint64_t seed);

/// Block-DCT log-magnitude front end followed by a small convolutional head.
ClassifierParams init_spectral_cnn(std::uint64_t seed);

ClassifierParams zero_like(const ClassifierParams& params);

/// Validates that parameter names and shapes match the architecture tag.
void validate(const ClassifierParams& params);

/// N x 3 x 64 x 64 images to N x 1 logits. Larger logits mean "more likely fake".
template <typename T>
BasicVar<T> classifier_forward(BasicGraph<T>& graph, const ParamSet& params, BasicVar<T> images);
template <typename T>
BasicVar<T> classifier_forward(const BoundParams<T>& params, BasicVar<T> images);

/// Block-DCT coefficients seen by the spectral front end (before the log magnitude).
template <typename T>
BasicVar<T> spectral_frontend(BasicVar<T> images);

float classify(const ClassifierParams& params, const Image& image);
float classify_spectral(const ClassifierParams& params, const Image& image);
/// Scores an N x 3 x H x W batch, evaluating in chunks of at most chunk images.
std::vector<float> classify_batch(const ClassifierParams& params, const Tensor& images, int chunk = 64);
std::vector<float> classify_all(const ClassifierParams& params, std::span<const Image> images, int chunk = 64);

// -- generator --------------------------------------------------------------

/// Channel widths of the four upsampling stages.
inline constexpr std::array<int, 4> kGeneratorWidths{48, 32, 16, 8};
inline constexpr int kGeneratorSeedChannels = 64;

GeneratorParams init_generator(std::uint64_t seed);

/// z: N x 32, w: N x 16 -> N x 3 x 64 x 64 in [0, 1].
template <typename T>
BasicVar<T> generator_forward(BasicGraph<T>& graph, const ParamSet& params, BasicVar<T> z, BasicVar<T> w);
template <typename T>
BasicVar<T> generator_forward(const BoundParams<T>& params, BasicVar<T> z, BasicVar<T> w);

Image generate(const GeneratorParams& gen, std::span<const float> z, std::span<const float> w);

/// Latents drawn from the standard normal prior the generator is calibrated to.
struct Latents {
  std::vector<float> z;
  std::vector<float> w;
};
Latents sample_latents(std::mt19937_64& rng);

// -- persistence --------------------------------------------------------------

/// "FEV1", tag, per-tensor records, 64-bit FNV-1a checksum; all little endian.
std::vector<std::uint8_t> encode_weights(const ParamSet& params);
ParamSet decode_weights(std::span<const std::uint8_t> bytes);
std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes);

void save_weights(const ParamSet& params, const std::filesystem::path& path);
ParamSet load_weights(const std::filesystem::path& path);

/// Weights plus a JSON sidecar (path + ".json") holding the training metadata.
void save_classifier(const ClassifierParams& params, const std::filesystem::path& path);
ClassifierParams load_classifier(const std::filesystem::path& path);

class WeightFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fev
