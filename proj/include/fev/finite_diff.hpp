#pragma once

#include "fev/tensor.hpp"

#include <stdexcept>

namespace fev {

/// Central-difference gradient estimate of a tensor -> scalar function:
/// (fn(x + h e_i) - fn(x - h e_i)) / 2h for every coordinate i.
template <typename T, typename Fn>
BasicTensor<T> finite_diff(Fn&& fn, const BasicTensor<T>& x, double h) {
  if (!(h > 0)) throw std::invalid_argument("finite_diff: h must be positive");
  BasicTensor<T> probe = x;
  BasicTensor<T> out(x.shape());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const T orig = probe[i];
    probe[i] = orig + static_cast<T>(h);
    const double up = static_cast<double>(fn(probe));
    probe[i] = orig - static_cast<T>(h);
    const double down = static_cast<double>(fn(probe));
    probe[i] = orig;
    out[i] = static_cast<T>((up - down) / (2.0 * h));
  }
  return out;
}

}  // namespace fev
