#pragma once

#include <cstdint>
#include <limits>
#include <string_view>
#include <utility>
#include <vector>

#include "cpyr/dart.hpp"
#include "cpyr/map.hpp"

namespace cpyr {

enum class KernelState : std::uint8_t { CK = 0, RKESL = 1, RKEDE = 2 };

std::string_view to_string(KernelState s);
KernelState kernel_state_from_string(std::string_view s);

/// Darts reduced by one level.
///
/// CK and RKESL kernels are sets of whole edges of the current top map. An
/// RKEDE kernel holds the darts of degree-2 faces: removing the face (u, w)
/// glues the edges of alpha(u) and alpha(w) into one, so the kernel is not
/// closed under alpha.
struct Kernel {
  KernelState state = KernelState::CK;
  std::vector<Dart> darts;
};

/// Combinatorial pyramid over a W x H grid, stored implicitly: the base map,
/// the crack embedding, the level at which each dart is reduced and the state
/// of each kernel. Level i (0 <= i <= top_level()) is the map G_i obtained
/// after the first i kernels; a dart survives at level i iff level(d) > i.
///
/// The pyramid also carries, per dart, the segment orientation maintained by
/// incremental updates while double edges are removed (see boundary.hpp).
class Pyramid {
 public:
  Pyramid(std::int32_t width, std::int32_t height);

  const GridNumbering& numbering() const { return grid_.numbering; }
  const CombinatorialMap& base() const { return grid_.map; }
  const CrackEmbedding& embedding() const { return grid_.embedding; }
  std::int32_t width() const { return grid_.numbering.width(); }
  std::int32_t height() const { return grid_.numbering.height(); }

  /// Number of kernels applied; G_top is the current top map.
  int top_level() const { return static_cast<int>(states_.size()); }
  /// Last level at which d exists plus one, in 1..top_level()+1.
  int level(Dart d) const;
  KernelState state(int kernel_index) const;
  bool survives(Dart d, int level_index) const { return level(d) > level_index; }

  /// Darts of kernel K_i (1-based), in slot order.
  std::vector<Dart> kernel_darts(int kernel_index) const;

  /// Current top map (kept in sync with the implicit encoding).
  const CombinatorialMap& top() const { return top_; }

  /// Validates `k` against the top map and appends it.
  void apply_kernel(const Kernel& k);

  Kernel compute_rkesl() const;
  Kernel compute_rkede() const;

  /// Base darts reduced into d at level i, starting with d itself.
  std::vector<Dart> receptive_field(int level_index, Dart d) const;

  /// Base darts of the external boundary encoded by d at level i: d first,
  /// alpha_0(alpha_i(d)) last.
  std::vector<Dart> segment_darts(int level_index, Dart d) const;

  Dart sigma_at(int level_index, Dart d) const;
  Dart alpha_at(int level_index, Dart d) const;

  CombinatorialMap reconstruct_level(int level_index) const;

  /// For each vertex of level i (canonical dart, sorted), the canonical darts
  /// of the level i-1 vertices merged into it.
  std::vector<std::pair<Dart, std::vector<Dart>>> composition(int level_index) const;
  std::vector<Dart> composed_of(int level_index, Dart vertex) const;

  /// Incrementally maintained orientation of a dart at the top level.
  int cached_orientation(Dart d) const;
  const std::vector<int>& cached_orientations() const { return orientation_; }

  /// Base darts having the image exterior on their left.
  const std::vector<Dart>& exterior_darts() const { return exterior_; }

  /// Rebuilds a pyramid from its implicit encoding (used by deserialization).
  /// Throws if the arrays are inconsistent with the grid.
  static Pyramid from_encoding(std::int32_t width, std::int32_t height,
                               const std::vector<int>& levels,
                               const std::vector<KernelState>& states,
                               const std::vector<int>& orientations);

 private:
  static constexpr int kSurvivor = std::numeric_limits<int>::max();

  void check_level(int level_index) const;
  void check_order(KernelState next) const;

  GridMap grid_;
  std::vector<int> level_;  // per slot; kSurvivor for top survivors
  std::vector<KernelState> states_;
  std::vector<int> orientation_;  // per slot
  std::vector<Dart> exterior_;
  CombinatorialMap top_;
};

/// Canonical vertex representative of every dart of `map` (smallest slot in
/// the sigma cycle), indexed by slot; absent darts map to Dart{0}.
std::vector<Dart> vertex_representatives(const CombinatorialMap& map);

}  // namespace cpyr
