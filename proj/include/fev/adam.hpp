#pragma once

#include "fev/tensor.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace fev {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

/// Raised when a gradient handed to the optimizer contains NaN or Inf.
class NonFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AdamState {
 public:
  AdamState() = default;
  AdamState(AdamConfig config, std::span<const Tensor> params);

  const AdamConfig& config() const { return config_; }
  std::int64_t step_count() const { return t_; }
  const std::vector<Tensor>& first_moment() const { return m_; }
  const std::vector<Tensor>& second_moment() const { return v_; }

  /// Bias-corrected Adam update of params in place. A non-finite gradient
  /// rejects the whole step: params and state are left untouched.
  void step(std::span<Tensor> params, std::span<const Tensor> grads);

 private:
  AdamConfig config_;
  std::int64_t t_ = 0;
  std::vector<Tensor> m_;
  std::vector<Tensor> v_;
};

inline void adam_step(std::span<Tensor> params, std::span<const Tensor> grads, AdamState& state) {
  state.step(params, grads);
}

}  // namespace fev
