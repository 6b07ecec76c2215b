#pragma once

#include "fev/image.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fev {

struct RocPoint {
  double threshold;  // an image is called fake when its score >= threshold
  double fpr;
  double tpr;
};

struct RocReport {
  std::vector<RocPoint> points;  // (0,0) first, (1,1) last
  double auc = 0.0;
  std::optional<double> tpr_at_tau;
  std::size_t n_real = 0;
  std::size_t n_fake = 0;
  std::string real_id;
  std::string fake_id;
};

/// Full threshold sweep with tied scores grouped into one step; trapezoid AUC.
/// Fake is the positive class.
RocReport roc(std::span<const float> scores_real, std::span<const float> scores_fake);
RocReport roc(std::span<const float> scores_real, std::span<const float> scores_fake, double tau);

/// Largest TPR among sweep points whose FPR does not exceed fpr.
double tpr_at_fpr(const RocReport& report, double fpr);

struct Tau {
  double value = 0.0;
  double target_fpr = 0.05;
  std::string calibration_id;
};

/// Smallest threshold whose FPR on the real calibration scores is <= target,
/// never splitting a group of tied scores.
Tau calibrate_tau(std::span<const float> real_scores, double target_fpr = 0.05, std::string calibration_id = {});

struct Norms {
  std::size_t l0_values = 0;  // channel values that differ
  std::size_t l0_pixels = 0;  // spatial positions where any channel differs
  double l2 = 0.0;
};
Norms norms(const Image& x, const Image& y);

/// Per-pixel mean of the perturbations, remapped affinely to [0, 1].
/// All-zero input renders as uniform mid-gray.
Image mean_perturbation(std::span<const Image> deltas);

/// Share of the non-DC spectral energy of an image that sits on harmonics of
/// the 8 x 8 block lattice (spatial frequencies that are multiples of size/8).
double lattice_energy_share(const Image& image);

void write_roc_csv(const RocReport& report, const std::filesystem::path& path);

struct RocCurve {
  std::string label;
  const RocReport* report;
};
std::string roc_svg(std::span<const RocCurve> curves, const std::string& title);
void write_roc_svg(std::span<const RocCurve> curves, const std::string& title, const std::filesystem::path& path);

}  // namespace fev
