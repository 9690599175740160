#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "cpyr/image.hpp"
#include "cpyr/pyramid.hpp"

namespace cpyr {

/// A pyramid as stored on disk, optionally with the raster it was built from.
struct PyramidFile {
  Pyramid pyramid{1, 1};
  std::optional<Image> image;
};

/// JSON document holding the implicit encoding:
///   {"format": "cpyr", "version": 1, "width", "height",
///    "levels": [per dart slot], "states": ["CK", ...],
///    "orientations": [per dart slot], "image": {...}?}
/// Dart slot s is dart id (s/2 + 1), negated when s is odd.
std::string to_json(const Pyramid& pyr, const Image* image = nullptr);
PyramidFile from_json(const std::string& text);

void save_pyramid(const std::string& path, const Pyramid& pyr, const Image* image = nullptr);
PyramidFile load_pyramid(const std::string& path);

}  // namespace cpyr
