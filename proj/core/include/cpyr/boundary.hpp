#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cpyr/level.hpp"
#include "cpyr/map.hpp"
#include "cpyr/pyramid.hpp"

namespace cpyr {

/// Turn between two consecutive oriented cracks: +1 clockwise quarter turn,
/// -1 counter-clockwise, 0 straight. A U-turn has no angle.
class Angle {
 public:
  static constexpr Angle undefined() { return Angle(); }
  static constexpr Angle of(int v) { return Angle(v); }

  constexpr bool defined() const { return defined_; }
  /// Throws InternalError for an undefined angle.
  int value() const;

  constexpr bool operator==(const Angle&) const = default;

 private:
  constexpr Angle() = default;
  constexpr explicit Angle(int v) : value_(v), defined_(true) {}
  int value_ = 0;
  bool defined_ = false;
};

/// (m1 - m2) mod 4 mapped to {0, +1, -1}; undefined for opposite moves.
Angle angle(Move m1, Move m2);

struct OrientedCrack {
  Point start;
  Move move;
  bool operator==(const OrientedCrack&) const = default;
};

/// Boundary segment of a dart: the base darts of its external boundary and
/// the chain of oriented cracks they realize.
struct Segment {
  std::vector<Dart> darts;
  std::vector<OrientedCrack> cracks;
};

Segment segment(const Pyramid& pyramid, int level_index, Dart d);

/// Sum of the angles along the segment of d.
int dart_orientation(const Pyramid& pyramid, int level_index, Dart d);

/// (Fm(d), Lm(d)): moves of the first and last crack of d's segment.
std::pair<Move, Move> first_last_moves(const LevelView& view, Dart d);

/// Orientation of a sigma-consecutive dart sequence; `closed` adds the
/// closing junction angle. Closed boundaries evaluate to +4 (clockwise) or
/// -4 (counter-clockwise).
int sequence_orientation(const LevelView& view, std::span<const Dart> seq, bool closed);

/// "x,y:codes" Freeman chain.
std::string freeman_chain(const Segment& s);
/// JSON array of {"x","y","move"} records.
std::string cracks_json(const Segment& s);

}  // namespace cpyr
