#pragma once

#include "fev/image.hpp"

#include <array>
#include <vector>

namespace fev {

/// Standard JPEG luminance quantization table, row-major.
const std::array<int, 64>& jpeg_luma_table();

/// Quantizer table for a quality factor in [1, 100] using the conventional
/// 5000/q (q < 50) or 200 - 2q scaling, each entry floored at 1.
std::array<int, 64> jpeg_quant_table(int quality);

/// Simplified JPEG round trip: per-channel 8 x 8 block DCT, quantization with the
/// scaled luminance table, dequantization, inverse DCT, 8-bit output.
/// No chroma subsampling, no entropy coding.
Image jpeg_launder(const Image& image, int quality);

/// Normalized 1-D Gaussian taps, radius ceil(3 sigma).
std::vector<double> gaussian_kernel(double sigma);

/// Separable Gaussian blur with reflect padding.
Image blur(const Image& image, double sigma);

/// Bilinear resize by 0.5 or 2.0 (half-pixel centers, edge clamped).
Image resize(const Image& image, double scale);

}  // namespace fev
