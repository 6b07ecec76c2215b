#pragma once

#include "fev/eval.hpp"
#include "fev/models.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fev {

enum class AttackKind : std::uint8_t { L2, L0, Linf, BitFlip, Patch, Latent, Reverse };

std::string_view attack_name(AttackKind kind);
AttackKind parse_attack(std::string_view name);  // names the valid kinds on failure
std::vector<std::string_view> attack_names();

struct AttackConfig {
  AttackKind kind = AttackKind::L2;
  int iterations = 1000;     // inner Adam iterations for l2/l0/reverse; latent steps
  int pgd_steps = 20;        // linf/bitflip
  double step = 0.005;       // Adam rate for l2/l0/reverse; PGD step for linf (0 means epsilon/4)
  double cap = 1.0 / 255.0;  // per-value cap for l0/reverse/bitflip
  double p = std::numeric_limits<double>::infinity();  // loss-max norm: 2 or inf
  double epsilon = 4.0 / 255.0;
  double c0 = 0.0;
  double c1 = 100.0;
  int max_doublings = 3;
  int bisection_rounds = 12;
  double freeze_fraction = 0.2;  // l0: share of surviving perturbed values reset each round
  int max_rounds = 20;
  int patience = 0;  // l2/l0/reverse: end an inner solve after this many iterations without progress (0 = never)
  double pixel_fraction = 0.4;  // bitflip support size
  int patch_size = 7;
  int patch_row = 0;
  int patch_col = 0;
  int patch_epochs = 4;
  double patch_lr = 0.01;
  double latent_lr = 0.01;
  std::uint64_t seed = 1;

  void validate() const;
};

struct AttackResult {
  std::string id;
  AttackKind kind = AttackKind::L2;
  float orig_score = 0.0f;
  float adv_score = 0.0f;
  Image adversarial;  // x + delta, inside [0, 1]
  Image delta;        // adversarial - x
  double l2 = 0.0;
  double pixel_frac = 0.0;  // spatial positions with any channel changed
  double value_frac = 0.0;  // channel values changed
  bool success = false;
  double c = 0.0;  // l2: constant of the returned perturbation
  int rounds = 0;  // l0/reverse: rounds that ended in success
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
};

/// Signed view of a classifier: minimizing sign * f. The reverse attack uses sign = -1.
struct Objective {
  const ClassifierParams* f = nullptr;
  double sign = 1.0;
};

/// f(x) and df/dx for one 3 x 64 x 64 image.
std::pair<float, Image> score_and_gradient(const ClassifierParams& f, const Image& x);

/// One inner solve of ||delta||_2 + c * sign * f(clamp(x + delta)) with Adam.
/// mask (optional) restricts which values may move; cap (if > 0) bounds |delta|.
struct InnerResult {
  bool success = false;
  Image adversarial;  // best successful iterate, or the lowest-score iterate
  float score = 0.0f;
  double l2 = 0.0;
};
InnerResult l2_inner(const Objective& obj, const Image& x, double tau, double c, const AttackConfig& cfg,
                     const std::vector<std::uint8_t>* mask = nullptr, double cap = 0.0);

AttackResult attack_l2_min(const ClassifierParams& f, const Image& x, double tau, const AttackConfig& cfg);
AttackResult attack_l0_lowbit(const ClassifierParams& f, const Image& x, double tau, const AttackConfig& cfg);
AttackResult attack_reverse(const ClassifierParams& f, const Image& x_real, double tau, const AttackConfig& cfg);
AttackResult attack_loss_max(const ClassifierParams& f, const Image& x, double tau, const AttackConfig& cfg);
/// Loss-max restricted to the top pixel_fraction of pixels by |df/dx| at delta = 0,
/// each value capped at cfg.cap and finally snapped to one 8-bit step.
AttackResult attack_bitflip(const ClassifierParams& f, const Image& x, double tau, const AttackConfig& cfg);

/// Perturbation-based attacks by kind (l2, l0, linf, bitflip, reverse).
AttackResult run_attack(const ClassifierParams& f, const Image& x, double tau, const AttackConfig& cfg);

struct UniversalPatch {
  Tensor values;  // 3 x k x k in [0, 1]
  int row = 0;
  int col = 0;
  std::string training_set;
  std::vector<double> trace;  // mean score per epoch
};

Image apply_patch(const Image& image, const UniversalPatch& patch);
UniversalPatch train_universal_patch(const ClassifierParams& f, std::span<const Image> train_images,
                                     const AttackConfig& cfg, std::string training_set = {});

struct UniversalLatent {
  std::vector<float> w;
  std::vector<float> w_init;
  std::vector<double> trace;  // score of g(z_i, w) at each iteration
  int iterations = 0;
  double final_mean_score = 0.0;
};

class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, UniversalLatent partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const UniversalLatent& partial() const { return partial_; }

 private:
  UniversalLatent partial_;
};

UniversalLatent train_universal_latent(const ClassifierParams& f, const GeneratorParams& g, const AttackConfig& cfg);

/// Runs fn(i) for i in [0, n) on a bounded pool; results keep input order.
void parallel_for_each(int n, int workers, const std::function<void(int)>& fn);

std::vector<AttackResult> attack_batch(const ClassifierParams& f, std::span<const Image> images,
                                       std::span<const std::string> ids, double tau, const AttackConfig& cfg,
                                       int workers);

/// Pixel-fraction curve: for each budget, share of attacked images that were
/// misclassified with at most that fraction of pixels modified.
struct FractionPoint {
  double pixel_fraction;
  double misclassified;
};
std::vector<FractionPoint> fraction_curve(std::span<const AttackResult> results, std::span<const double> budgets);

void write_results_csv(std::span<const AttackResult> results, const std::filesystem::path& path,
                       bool include_wall_time = true);
std::string results_csv(std::span<const AttackResult> results, bool include_wall_time = true);

struct TransferReport {
  RocReport before;
  RocReport after;
  RocReport source_before;
  RocReport source_after;
  std::vector<AttackResult> results;
};

/// Attacks source with the capped l0 attack, writes the adversarial fakes as
/// PNG under out_dir, reloads them and scores both classifiers.
TransferReport transfer_campaign(const ClassifierParams& source, const ClassifierParams& target, double source_tau,
                                 std::span<const Image> reals, std::span<const Image> fakes,
                                 std::span<const std::string> ids, const AttackConfig& cfg,
                                 const std::filesystem::path& out_dir, int workers, bool allow_same = false);

}  // namespace fev
