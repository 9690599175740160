#include "cpyr/level.hpp"

#include <algorithm>

#include "cpyr/boundary.hpp"
#include "cpyr/errors.hpp"

namespace cpyr {

bool is_redundant_face(const CombinatorialMap& map, Dart d) {
  const Dart v = map.phi(d);
  if (v == d) return map.dart_count() > 2;
  return map.phi(v) == d && v != map.alpha(d);
}

LevelView::LevelView(const Pyramid& pyramid, int level_index)
    : pyramid_(&pyramid), level_(level_index) {
  if (level_index < 0 || level_index > pyramid.top_level()) {
    throw InvalidArgument("level " + std::to_string(level_index) + " out of range");
  }
  const bool top = level_index == pyramid.top_level();
  map_ = top ? pyramid.top() : pyramid.reconstruct_level(level_index);

  const std::size_t n = map_.slot_count();
  sigma_inv_.assign(n, Dart{});
  degree_.assign(n, 0);
  orientation_.assign(n, 0);
  vertex_of_ = vertex_representatives(map_);

  for (Dart d : map_.darts()) {
    sigma_inv_[map_.sigma(d).slot()] = d;
    const Dart v = vertex_of_[d.slot()];
    if (v == d) vertices_.push_back(d);
    ++degree_[v.slot()];
    orientation_[d.slot()] =
        top ? pyramid.cached_orientation(d) : dart_orientation(pyramid, level_index, d);
    if (!redundant_.valid() && is_redundant_face(map_, d)) redundant_ = d;
  }
  for (Dart d : pyramid.exterior_darts()) {
    if (map_.contains(d)) {
      exterior_ = vertex_of_[d.slot()];
      break;
    }
  }
}

Dart LevelView::sigma_inverse(Dart d) const {
  if (!contains(d)) throw InvalidArgument("unknown dart " + std::to_string(d.id()));
  return sigma_inv_[d.slot()];
}

Dart LevelView::vertex(Dart d) const {
  if (!contains(d)) throw InvalidArgument("unknown dart " + std::to_string(d.id()));
  return vertex_of_[d.slot()];
}

std::size_t LevelView::degree(Dart v) const { return degree_[vertex(v).slot()]; }

int LevelView::orientation(Dart d) const {
  if (!contains(d)) throw InvalidArgument("unknown dart " + std::to_string(d.id()));
  return orientation_[d.slot()];
}

Move LevelView::first_move(Dart d) const { return pyramid_->embedding().move(d); }

Move LevelView::last_move(Dart d) const { return pyramid_->embedding().move(-alpha(d)); }

}  // namespace cpyr
