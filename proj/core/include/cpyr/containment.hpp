#pragma once

#include <cstddef>
#include <vector>

#include "cpyr/level.hpp"

namespace cpyr {

/// Dart visits performed by a containment query, for checking the
/// 2 * degree bound.
struct ContainmentStats {
  std::size_t classify_visits = 0;
  std::size_t inside_visits = 0;
  std::size_t total() const { return classify_visits + inside_visits; }
};

/// One self-loop incident to a vertex, as met while walking its sigma cycle
/// from the queried dart: `first` is met before `second`.
struct LoopRecord {
  Dart first;
  Dart second;
  /// Orientation of the darts strictly between first and second, obtained in
  /// constant time from prefix orientations.
  int inner_orientation = 0;
  /// The dart of the loop whose enclosed span (the +4 side) holds the inside
  /// component: `first` when inner_orientation is +4, `second` otherwise.
  Dart starting;
};

/// Walks sigma*(v) once with a stack of open loops and classifies every
/// self-loop at v. Requires a level without redundant edges.
std::vector<LoopRecord> classify_loops(const LevelView& view, Dart v,
                                       ContainmentStats* stats = nullptr);

/// Starting darts of the self-loops at v.
std::vector<Dart> starting_darts(const LevelView& view, Dart v, ContainmentStats* stats = nullptr);

/// Vertices adjacent to v across the darts enclosed by its loops (canonical
/// darts, sorted).
std::vector<Dart> inside_direct(const LevelView& view, Dart v, ContainmentStats* stats = nullptr);

/// Every vertex reachable from inside_direct(v) without passing through v.
std::vector<Dart> inside_all(const LevelView& view, Dart v);

/// True when region b lies inside region a.
bool contains(const LevelView& view, Dart a, Dart b);

/// Cross-check of one loop against a direct evaluation of both closed
/// sequences it splits sigma*(v) into.
struct LoopCheck {
  LoopRecord loop;
  int inner_direct = 0;   // or(C1) evaluated as a closed sequence
  int outer_direct = 0;   // or(C2) evaluated as a closed sequence
  bool brackets_ok = false;  // d_{j+1} != alpha(d_{k-1}) and d_{j-1} != alpha(d_{k+1})
};

std::vector<LoopCheck> check_loops(const LevelView& view, Dart v);

}  // namespace cpyr
