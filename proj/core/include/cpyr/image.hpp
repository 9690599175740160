#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cpyr {

/// 8-bit raster with 1 (gray) or 3 (RGB) channels, row-major, interleaved.
struct Image {
  std::int32_t width = 0;
  std::int32_t height = 0;
  int channels = 1;
  std::vector<std::uint8_t> data;

  Image() = default;
  Image(std::int32_t w, std::int32_t h, int c)
      : width(w), height(h), channels(c), data(static_cast<std::size_t>(w) * h * c, 0) {}

  std::uint8_t& at(std::int32_t x, std::int32_t y, int c = 0) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::uint8_t at(std::int32_t x, std::int32_t y, int c = 0) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  /// Pixel as RGB; gray pixels are replicated.
  std::array<double, 3> rgb(std::int32_t x, std::int32_t y) const;
  void set_rgb(std::int32_t x, std::int32_t y, std::array<std::uint8_t, 3> c);
};

/// Reads PGM (P2/P5) or PPM (P3/P6). Samples are rescaled to 0..255.
/// Throws ParseError carrying the byte offset of the failure.
Image read_pnm(std::istream& in);
Image load_image(const std::string& path);

/// Writes binary P5 (1 channel) or P6 (3 channels).
void write_pnm(std::ostream& out, const Image& img);
void save_image(const std::string& path, const Image& img);

}  // namespace cpyr
