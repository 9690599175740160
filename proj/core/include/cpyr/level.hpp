#pragma once

#include <vector>

#include "cpyr/map.hpp"
#include "cpyr/pyramid.hpp"

namespace cpyr {

/// Read-only snapshot of one reconstructed level G_i with the per-dart data
/// the geometric and containment queries need in constant time: vertex
/// representatives, sigma^-1, and segment orientation and first/last moves.
///
/// Building a view costs one reconstruction; it then answers every query
/// without touching the pyramid's arrays again. Views are immutable and may be
/// shared between threads.
class LevelView {
 public:
  LevelView(const Pyramid& pyramid, int level_index);

  const Pyramid& pyramid() const { return *pyramid_; }
  int level() const { return level_; }
  const CombinatorialMap& map() const { return map_; }

  bool contains(Dart d) const { return map_.contains(d); }
  Dart sigma(Dart d) const { return map_.sigma(d); }
  Dart alpha(Dart d) const { return map_.alpha(d); }
  Dart phi(Dart d) const { return map_.phi(d); }
  Dart sigma_inverse(Dart d) const;

  /// Canonical dart of the vertex (sigma cycle) holding d.
  Dart vertex(Dart d) const;
  /// Canonical darts of every vertex, sorted.
  const std::vector<Dart>& vertices() const { return vertices_; }
  std::size_t degree(Dart vertex) const;
  bool is_vertex(Dart d) const { return contains(d) && vertex(d) == d; }

  /// Vertex holding the image exterior.
  Dart exterior_vertex() const { return exterior_; }

  /// Orientation of d's segment: the cached value at the top level, the
  /// recomputed sum of angles otherwise.
  int orientation(Dart d) const;
  Move first_move(Dart d) const;
  Move last_move(Dart d) const;

  /// True when G_i holds neither an empty self-loop (degree-1 face) nor an
  /// empty double edge (removable degree-2 face).
  bool redundant_edge_free() const { return !redundant_.valid(); }
  /// A dart of the first redundant face found, or Dart{0}.
  Dart redundant_witness() const { return redundant_; }

 private:
  const Pyramid* pyramid_;
  int level_;
  CombinatorialMap map_;
  std::vector<Dart> sigma_inv_;
  std::vector<Dart> vertex_of_;
  std::vector<Dart> vertices_;
  std::vector<std::uint32_t> degree_;
  std::vector<int> orientation_;
  Dart exterior_{};
  Dart redundant_{};
};

/// True when the face of d has degree 1, or degree 2 without being the two
/// sides of a single edge.
bool is_redundant_face(const CombinatorialMap& map, Dart d);

}  // namespace cpyr
