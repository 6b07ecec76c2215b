#pragma once

#include "fev/tensor.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fev {

/// A 3 x H x W tensor with values in [0, 1].
using Image = Tensor;

inline constexpr int kImageSize = 64;
inline constexpr int kChannels = 3;
inline const Shape kImageShape{kChannels, kImageSize, kImageSize};

/// round(v * 255) / 255 with halves rounded away from zero; v is clamped to [0, 1] first.
float quantize8(float v);
Image quantize8(const Image& image);
std::uint8_t to_byte(float v);
bool is_quantized(const Image& image);

class PngError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 8-bit RGB PNG, no alpha. The image is quantized on the way out.
std::vector<std::uint8_t> encode_png(const Image& image);
Image decode_png(std::span<const std::uint8_t> bytes, const std::string& source = "<memory>");

void save_png(const Image& image, const std::filesystem::path& path);
Image load_png(const std::filesystem::path& path);

/// Stacks 3 x H x W images into an N x 3 x H x W batch.
Tensor stack_images(std::span<const Image> images);
Image batch_item(const Tensor& batch, int index);

}  // namespace fev
