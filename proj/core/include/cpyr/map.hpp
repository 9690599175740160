#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cpyr/dart.hpp"

namespace cpyr {

/// Freeman codes of the four crack directions. The y axis points down, so
/// `up` decreases y.
enum class Move : std::uint8_t { right = 0, up = 1, left = 2, down = 3 };

constexpr Move opposite(Move m) {
  return static_cast<Move>((static_cast<int>(m) + 2) % 4);
}

char freeman_char(Move m);

struct Point {
  std::int32_t x = 0;
  std::int32_t y = 0;
  auto operator<=>(const Point&) const = default;
};

Point step(Point p, Move m);

/// Geometric embedding of base darts as oriented cracks (pixel sides).
class CrackEmbedding {
 public:
  CrackEmbedding() = default;
  explicit CrackEmbedding(std::int32_t max_id);

  void set(Dart d, Point start, Move move);

  std::int32_t max_id() const { return max_id_; }
  Point start(Dart d) const { return starts_[d.slot()]; }
  Point end(Dart d) const { return step(start(d), move(d)); }
  Move move(Dart d) const { return moves_[d.slot()]; }

  bool operator==(const CrackEmbedding&) const = default;

 private:
  std::int32_t max_id_ = 0;
  std::vector<Point> starts_;
  std::vector<Move> moves_;
};

enum class Permutation { sigma, alpha, phi };

/// One 2D combinatorial map G = (D, sigma, alpha), phi = sigma o alpha.
///
/// Darts are drawn from the id range [-max_id, max_id] \ {0}; permutations are
/// dense arrays indexed by Dart::slot(), an absent dart maps to Dart{0}. Every
/// level of a pyramid uses the id range of its base map, so surviving darts
/// keep their identity across levels.
class CombinatorialMap {
 public:
  CombinatorialMap() = default;
  explicit CombinatorialMap(std::int32_t max_id);

  /// Builds a map from parallel arrays without checking any invariant; use
  /// validate() to inspect the result.
  static CombinatorialMap from_arrays(std::int32_t max_id, std::span<const Dart> darts,
                                      std::span<const Dart> sigma_images,
                                      std::span<const Dart> alpha_images);

  /// Adds (or overwrites) dart `d` with the given images.
  void set(Dart d, Dart sigma_image, Dart alpha_image);
  void erase(Dart d);

  std::int32_t max_id() const { return max_id_; }
  std::size_t slot_count() const { return sigma_.size(); }
  std::size_t dart_count() const { return count_; }

  bool contains(Dart d) const {
    return d.valid() && d.slot() < sigma_.size() && sigma_[d.slot()].valid();
  }

  Dart sigma(Dart d) const { return sigma_[checked(d)]; }
  Dart alpha(Dart d) const { return alpha_[checked(d)]; }
  Dart phi(Dart d) const { return sigma(alpha(d)); }
  Dart apply(Permutation p, Dart d) const;

  /// Present darts in slot order (+1, -1, +2, -2, ...).
  std::vector<Dart> darts() const;

  bool operator==(const CombinatorialMap&) const = default;

 private:
  std::size_t checked(Dart d) const;

  std::int32_t max_id_ = 0;
  std::size_t count_ = 0;
  std::vector<Dart> sigma_;
  std::vector<Dart> alpha_;
};

/// (d, p(d), p^2(d), ...) up to but excluding the return to d.
std::vector<Dart> orbit(const CombinatorialMap& map, Dart d, Permutation kind);

/// All cycles of a permutation, each starting at its canonical (smallest slot)
/// dart, sorted by that dart.
std::vector<std::vector<Dart>> cycles(const CombinatorialMap& map, Permutation kind);
std::size_t cycle_count(const CombinatorialMap& map, Permutation kind);

/// Dual map (D, phi, alpha).
CombinatorialMap dual(const CombinatorialMap& map);

struct ValidationCheck {
  std::string name;
  bool passed = true;
  Dart witness{};
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
  const ValidationCheck* find(std::string_view name) const;
};

/// Checks: alpha involution, alpha fixed point free, sigma bijective,
/// connected, Euler characteristic 2.
ValidationReport validate(const CombinatorialMap& map);

/// Graphviz export: one node per sigma cycle, one edge per alpha cycle.
std::string to_dot(const CombinatorialMap& map);

/// Dart numbering of the W x H 4-connected grid.
///
/// Positive ids first enumerate the vertical cracks row-major
/// (id = 1 + y*(W+1) + c for the crack at column line c in pixel row y), then
/// the horizontal cracks (id = 1 + (W+1)*H + r*W + x for the crack at row line
/// r in pixel column x). A positive vertical dart moves up and a positive
/// horizontal dart moves left; a dart belongs to the pixel on its left, so
/// every pixel's sigma cycle runs counter-clockwise. Darts with the image
/// exterior on their left form the outer vertex.
class GridNumbering {
 public:
  GridNumbering() = default;
  GridNumbering(std::int32_t width, std::int32_t height);

  std::int32_t width() const { return width_; }
  std::int32_t height() const { return height_; }
  std::int32_t max_id() const;

  Dart vertical(std::int32_t column_line, std::int32_t row) const;
  Dart horizontal(std::int32_t column, std::int32_t row_line) const;

  /// Pixel index (y*W + x) owning the dart, or -1 for the image exterior.
  std::int32_t owner(Dart d) const;
  /// Pixel on the right of the dart (owner of its twin), or -1.
  std::int32_t neighbour(Dart d) const { return owner(-d); }

  Point start(Dart d) const;
  Move move(Dart d) const;

 private:
  std::int32_t width_ = 0;
  std::int32_t height_ = 0;
};

struct GridMap {
  GridNumbering numbering;
  CombinatorialMap map;
  CrackEmbedding embedding;
};

/// Base map of a W x H pixel grid: one vertex per pixel plus the outer vertex,
/// one edge per crack, one face per pixel corner.
GridMap build_grid_map(std::int32_t width, std::int32_t height);

}  // namespace cpyr
