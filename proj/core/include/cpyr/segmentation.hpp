#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cpyr/containment_oracle.hpp"
#include "cpyr/image.hpp"
#include "cpyr/level.hpp"
#include "cpyr/pyramid.hpp"

namespace cpyr {

/// Pixel partition of one level. Regions are the vertices of G_i other than
/// the exterior, numbered by increasing canonical dart.
struct Partition {
  int level = 0;
  LabelImage labels;
  std::vector<Dart> regions;
  Dart exterior{};

  std::size_t region_count() const { return regions.size(); }
  /// Region index of a vertex (any dart of it), or -1 for the exterior.
  int region_of(const LevelView& view, Dart d) const;
  /// Base pixel owning a region's canonical dart.
  std::int32_t seed_pixel(const Pyramid& pyr, int region) const;
};

Partition partition_at(const LevelView& view);

struct RegionStats {
  std::int64_t pixels = 0;
  std::array<double, 3> mean{0, 0, 0};
  std::int32_t x0 = 0, y0 = 0, x1 = -1, y1 = -1;  // inclusive bounding box
};

std::vector<RegionStats> region_stats(const Partition& part, const Image& img);

double color_distance(const std::array<double, 3>& a, const std::array<double, 3>& b);

/// Applies `k` when non-empty. Returns whether a level was added.
bool apply_if_nonempty(Pyramid& pyr, const Kernel& k);

/// Applies the removal kernels that clean the top map after a contraction.
void apply_removals(Pyramid& pyr);

/// Pyramid whose top level is the partition of `labels` into 4-connected
/// components: one contraction of a spanning forest of equal-label pixel
/// pairs, followed by the removal kernels.
Pyramid build_from_labels(const LabelImage& labels);

struct MergeResult {
  std::size_t regions_before = 0;
  std::size_t regions_after = 0;
  std::size_t contracted_edges = 0;
};

/// One color-threshold merge step on the top level: contracts a spanning
/// forest of adjacent region pairs whose mean colors lie within `threshold`,
/// then removes the redundant edges it created. Adds no level when no pair
/// qualifies.
MergeResult merge_level(Pyramid& pyr, const Image& img, double threshold);

/// Repeats merge_level until it no longer merges. `region_counts`, when given,
/// receives the region count of every level built.
Pyramid segment_image(const Image& img, double threshold,
                      std::vector<std::size_t>* region_counts = nullptr);

struct RoadsignQuery {
  int k = 5;
  std::array<double, 3> background{0, 0, 255};
  std::array<double, 3> symbol{255, 255, 255};
};

struct RoadsignResult {
  bool found = false;
  int background_region = -1;
  std::vector<int> symbol_regions;  // sorted region indices
  double score = 0;                  // distance of the symbol mean to the symbol color
  std::string message;
};

/// Picks, among the k regions whose color is closest to the background color
/// and that contain at least one region, the one whose contained regions have
/// the mean color closest to the symbol color (ties: larger contained area).
RoadsignResult roadsign_extract(const LevelView& view, const Partition& part,
                                const std::vector<RegionStats>& stats, const RoadsignQuery& q);

/// Variant for images holding several signs: every non-empty candidate that
/// contains no other non-empty candidate yields one result.
std::vector<RoadsignResult> roadsign_extract_each(const LevelView& view, const Partition& part,
                                                  const std::vector<RegionStats>& stats,
                                                  const RoadsignQuery& q);

/// Binary mask (255 on the given regions).
Image region_mask(const Partition& part, const std::vector<int>& regions);

/// RGB image with each region painted with its mean color.
Image mean_color_image(const Partition& part, const std::vector<RegionStats>& stats);

}  // namespace cpyr
