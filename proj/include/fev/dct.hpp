#pragma once

#include "fev/tensor.hpp"

#include <array>

namespace fev {

/// Orthonormal 8-point DCT-II basis, row k holds frequency k.
const std::array<double, 64>& dct8_basis();

/// In-place per-block transform of a contiguous H x W plane, both multiples of 8.
template <typename T>
void dct8_plane(const T* in, T* out, int height, int width, bool inverse);

/// Block DCT of every 8 x 8 block of every plane of a rank-2, rank-3 or rank-4 tensor
/// (the last two extents are spatial). Planes whose extents are not multiples of 8
/// are reflect-padded up to the next multiple first, so the output may be larger.
template <typename T>
BasicTensor<T> block_dct8(const BasicTensor<T>& x);

/// Inverse of block_dct8 for tensors whose spatial extents are multiples of 8.
template <typename T>
BasicTensor<T> block_idct8(const BasicTensor<T>& coeffs);

}  // namespace fev

namespace fev {

/// Row-major (u * 8 + v) coefficient indices in JPEG zigzag order.
const std::array<int, 64>& zigzag_order();

}  // namespace fev
