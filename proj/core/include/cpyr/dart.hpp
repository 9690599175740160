#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <ostream>

namespace cpyr {

/// Half-edge identifier. Ids are nonzero and signed; at the base level of a
/// pyramid the edge involution is plain negation.
class Dart {
 public:
  constexpr Dart() = default;
  constexpr explicit Dart(std::int32_t id) : id_(id) {}

  constexpr std::int32_t id() const { return id_; }
  constexpr bool valid() const { return id_ != 0; }
  constexpr explicit operator bool() const { return id_ != 0; }

  /// Base-level involution.
  constexpr Dart operator-() const { return Dart(-id_); }

  /// Dense array index: darts +k and -k occupy adjacent slots.
  constexpr std::size_t slot() const {
    const auto mag = static_cast<std::size_t>(id_ < 0 ? -id_ : id_);
    return 2 * (mag - 1) + (id_ < 0 ? 1 : 0);
  }
  static constexpr Dart from_slot(std::size_t slot) {
    const auto mag = static_cast<std::int32_t>(slot / 2 + 1);
    return Dart(slot % 2 == 0 ? mag : -mag);
  }

  constexpr auto operator<=>(const Dart&) const = default;

 private:
  std::int32_t id_ = 0;
};

/// Ordering used for canonical representatives: smaller |id| first, and the
/// positive dart before its negative twin.
struct CanonicalLess {
  constexpr bool operator()(Dart a, Dart b) const { return a.slot() < b.slot(); }
};

inline std::ostream& operator<<(std::ostream& os, Dart d) { return os << d.id(); }

}  // namespace cpyr

template <>
struct std::hash<cpyr::Dart> {
  std::size_t operator()(cpyr::Dart d) const noexcept {
    return std::hash<std::int32_t>{}(d.id());
  }
};
