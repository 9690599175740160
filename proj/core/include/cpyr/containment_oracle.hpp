#pragma once

#include <cstdint>
#include <vector>

namespace cpyr {

/// Dense label raster, row-major.
struct LabelImage {
  std::int32_t width = 0;
  std::int32_t height = 0;
  std::vector<std::int32_t> labels;

  std::int32_t at(std::int32_t x, std::int32_t y) const {
    return labels[static_cast<std::size_t>(y) * width + x];
  }
};

/// Pixel-level definition of "b inside a": no pixel of b reaches the image
/// border through pixels not labelled a. Regions are 4-connected, so the
/// complement is walked with 8-connectivity.
///
/// Independent of the pyramid code; used as a test oracle.
bool flood_fill_contains_oracle(const LabelImage& image, std::int32_t a, std::int32_t b);

/// Labels of every region inside a, sorted.
std::vector<std::int32_t> flood_fill_inside_oracle(const LabelImage& image, std::int32_t a);

/// Relabels `image` into 4-connected components numbered 0.. in scan order.
LabelImage connected_components(const LabelImage& image);

}  // namespace cpyr
