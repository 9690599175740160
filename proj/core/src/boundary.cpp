#include "cpyr/boundary.hpp"

#include <sstream>

#include "cpyr/errors.hpp"

namespace cpyr {

int Angle::value() const {
  if (!defined_) throw InternalError("undefined angle (U-turn) in an orientation sum");
  return value_;
}

Angle angle(Move m1, Move m2) {
  switch (((static_cast<int>(m1) - static_cast<int>(m2)) % 4 + 4) % 4) {
    case 0: return Angle::of(0);
    case 1: return Angle::of(1);
    case 3: return Angle::of(-1);
    default: return Angle::undefined();
  }
}

Segment segment(const Pyramid& pyramid, int level_index, Dart d) {
  Segment s;
  s.darts = pyramid.segment_darts(level_index, d);
  const auto& emb = pyramid.embedding();
  s.cracks.reserve(s.darts.size());
  for (Dart e : s.darts) s.cracks.push_back({emb.start(e), emb.move(e)});
  for (std::size_t j = 1; j < s.cracks.size(); ++j) {
    if (s.cracks[j].move == opposite(s.cracks[j - 1].move)) {
      throw InternalError("U-turn inside the segment of dart " + std::to_string(d.id()));
    }
  }
  return s;
}

int dart_orientation(const Pyramid& pyramid, int level_index, Dart d) {
  const auto darts = pyramid.segment_darts(level_index, d);
  const auto& emb = pyramid.embedding();
  int sum = 0;
  for (std::size_t j = 1; j < darts.size(); ++j) {
    sum += angle(emb.move(darts[j - 1]), emb.move(darts[j])).value();
  }
  return sum;
}

std::pair<Move, Move> first_last_moves(const LevelView& view, Dart d) {
  if (!view.contains(d)) {
    throw InvalidArgument("dart " + std::to_string(d.id()) + " is not alive at level " +
                          std::to_string(view.level()));
  }
  return {view.first_move(d), view.last_move(d)};
}

int sequence_orientation(const LevelView& view, std::span<const Dart> seq, bool closed) {
  if (seq.empty()) throw InvalidArgument("empty dart sequence");
  for (Dart d : seq) {
    if (!view.contains(d)) throw InvalidArgument("dart " + std::to_string(d.id()) + " is dead");
  }
  for (std::size_t j = 1; j < seq.size(); ++j) {
    if (view.sigma(seq[j - 1]) != seq[j]) {
      throw InvalidArgument("sequence is not sigma-consecutive at position " + std::to_string(j));
    }
  }
  const Dart first = seq.front();
  const Dart last = seq.back();
  if (closed) {
    if (last == view.alpha(first)) {
      throw InvalidArgument("closed sequence ends with the twin of its first dart");
    }
    bool incident = false;
    const Dart start = view.alpha(last);
    Dart cur = start;
    do {
      if (cur == first) {
        incident = true;
        break;
      }
      cur = view.phi(cur);
    } while (cur != start);
    if (!incident) throw InvalidArgument("sequence does not close around a face");
  }
  int sum = 0;
  for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
    sum += view.orientation(seq[j]) + angle(view.last_move(seq[j]), view.first_move(seq[j + 1])).value();
  }
  sum += view.orientation(last);
  if (closed) sum += angle(view.last_move(last), view.first_move(first)).value();
  return sum;
}

std::string freeman_chain(const Segment& s) {
  std::ostringstream os;
  if (s.cracks.empty()) return "";
  os << s.cracks.front().start.x << ',' << s.cracks.front().start.y << ':';
  for (const auto& c : s.cracks) os << freeman_char(c.move);
  return os.str();
}

std::string cracks_json(const Segment& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.cracks.size(); ++i) {
    const auto& c = s.cracks[i];
    os << (i ? "," : "") << "{\"x\":" << c.start.x << ",\"y\":" << c.start.y
       << ",\"move\":" << static_cast<int>(c.move) << '}';
  }
  os << ']';
  return os.str();
}

}  // namespace cpyr
