#pragma once

#include "fev/image.hpp"
#include "fev/models.hpp"

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace fev {

/// Procedural stand-in for a photograph: four octaves of smooth value noise,
/// a random colour gradient and, sometimes, anti-aliased hard edges.
Image synth_real(std::mt19937_64& rng);

enum class Label : std::uint8_t { Real, Fake };
enum class Split : std::uint8_t { Train, Val, Test };

std::string_view label_name(Label label);
std::string_view split_name(Split split);
Label parse_label(std::string_view text);
Split parse_split(std::string_view text);

struct DatasetEntry {
  std::string path;  // relative to the dataset root
  Label label = Label::Real;
  Split split = Split::Train;
  std::uint64_t seed = 0;
};

struct Dataset {
  std::filesystem::path root;
  std::vector<DatasetEntry> entries;

  std::vector<const DatasetEntry*> select(Split split, Label label) const;
  std::size_t count(Split split, Label label) const { return select(split, label).size(); }
  /// FNV-1a of the manifest text; identifies the corpus in training metadata.
  std::string hash() const;
};

struct DatasetSpec {
  int n_real = 2000;
  int n_fake = 2000;
  std::uint64_t seed = 1;
  double train_fraction = 0.8;
  double val_fraction = 0.1;
  int workers = 1;
};

/// Per-image seed; real and fake streams never share a seed.
std::uint64_t image_seed(std::uint64_t dataset_seed, Label label, int index);

/// Writes root/{train,val,test}/{real,fake}/NNNNN.png and root/manifest.csv.
Dataset build_dataset(const std::filesystem::path& root, const DatasetSpec& spec, const GeneratorParams& gen);

/// Reads manifest.csv and checks that every listed file exists.
Dataset load_dataset(const std::filesystem::path& root);

std::string manifest_csv(const Dataset& dataset);

std::vector<Image> load_images(const Dataset& dataset, Split split, Label label);

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fev
