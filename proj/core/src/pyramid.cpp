#include "cpyr/pyramid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cpyr/boundary.hpp"
#include "cpyr/errors.hpp"

namespace cpyr {

std::string_view to_string(KernelState s) {
  switch (s) {
    case KernelState::CK: return "CK";
    case KernelState::RKESL: return "RKESL";
    case KernelState::RKEDE: return "RKEDE";
  }
  return "?";
}

KernelState kernel_state_from_string(std::string_view s) {
  if (s == "CK") return KernelState::CK;
  if (s == "RKESL") return KernelState::RKESL;
  if (s == "RKEDE") return KernelState::RKEDE;
  throw InvalidArgument("unknown kernel state '" + std::string(s) + "'");
}

std::vector<Dart> vertex_representatives(const CombinatorialMap& map) {
  std::vector<Dart> rep(map.slot_count());
  for (Dart d : map.darts()) {
    if (rep[d.slot()].valid()) continue;
    const auto cyc = orbit(map, d, Permutation::sigma);
    // darts() runs in slot order, so d is the smallest dart of its cycle.
    for (Dart e : cyc) rep[e.slot()] = d;
  }
  return rep;
}

namespace {

/// Mutable copy of a level used to check kernels and to replay removals.
class WorkMap {
 public:
  explicit WorkMap(const CombinatorialMap& m)
      : sigma_(m.slot_count()), sigma_inv_(m.slot_count()), alpha_(m.slot_count()) {
    for (Dart d : m.darts()) {
      sigma_[d.slot()] = m.sigma(d);
      alpha_[d.slot()] = m.alpha(d);
      sigma_inv_[m.sigma(d).slot()] = d;
    }
    count_ = m.dart_count();
  }

  bool alive(Dart d) const { return sigma_[d.slot()].valid(); }
  Dart sigma(Dart d) const { return sigma_[d.slot()]; }
  Dart alpha(Dart d) const { return alpha_[d.slot()]; }
  Dart phi(Dart d) const { return sigma(alpha(d)); }
  std::size_t count() const { return count_; }

  void splice(Dart d) {
    const Dart prev = sigma_inv_[d.slot()];
    const Dart next = sigma_[d.slot()];
    if (prev != d) {
      sigma_[prev.slot()] = next;
      sigma_inv_[next.slot()] = prev;
    }
    sigma_[d.slot()] = sigma_inv_[d.slot()] = alpha_[d.slot()] = Dart{};
    --count_;
  }

  void pair(Dart a, Dart b) {
    alpha_[a.slot()] = b;
    alpha_[b.slot()] = a;
  }

 private:
  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  std::vector<Dart> alpha_;
  std::size_t count_ = 0;
};

bool empty_self_loop(const WorkMap& w, Dart d) {
  // A lone edge on a lone vertex is the whole map; keep it.
  return w.phi(d) == d && w.count() > 2;
}

bool removable_double_edge(const WorkMap& w, Dart u) {
  const Dart v = w.phi(u);
  return v != u && w.phi(v) == u && v != w.alpha(u);
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string dart_str(Dart d) { return std::to_string(d.id()); }

}  // namespace

// ---------------------------------------------------------------------------

Pyramid::Pyramid(std::int32_t width, std::int32_t height)
    : grid_(build_grid_map(width, height)),
      level_(grid_.map.slot_count(), kSurvivor),
      orientation_(grid_.map.slot_count(), 0),
      top_(grid_.map) {
  for (Dart d : grid_.map.darts()) {
    if (grid_.numbering.owner(d) < 0) exterior_.push_back(d);
  }
}

int Pyramid::level(Dart d) const {
  if (!grid_.map.contains(d)) throw InvalidArgument("unknown dart " + dart_str(d));
  const int l = level_[d.slot()];
  return l == kSurvivor ? top_level() + 1 : l;
}

KernelState Pyramid::state(int kernel_index) const {
  if (kernel_index < 1 || kernel_index > top_level()) {
    throw InvalidArgument("kernel index " + std::to_string(kernel_index) + " out of range");
  }
  return states_[static_cast<std::size_t>(kernel_index - 1)];
}

std::vector<Dart> Pyramid::kernel_darts(int kernel_index) const {
  state(kernel_index);
  std::vector<Dart> out;
  for (std::size_t s = 0; s < level_.size(); ++s) {
    if (level_[s] == kernel_index) out.push_back(Dart::from_slot(s));
  }
  return out;
}

int Pyramid::cached_orientation(Dart d) const {
  if (!top_.contains(d)) throw InvalidArgument("dart " + dart_str(d) + " is not alive at the top");
  return orientation_[d.slot()];
}

void Pyramid::check_level(int level_index) const {
  if (level_index < 0 || level_index > top_level()) {
    throw InvalidArgument("level " + std::to_string(level_index) + " out of range [0, " +
                          std::to_string(top_level()) + "]");
  }
}

void Pyramid::check_order(KernelState next) const {
  if (states_.empty() || next == KernelState::CK) return;
  if (static_cast<int>(next) <= static_cast<int>(states_.back())) {
    throw KernelError(std::string("kernel order: ") + std::string(to_string(next)) +
                      " cannot follow " + std::string(to_string(states_.back())));
  }
}

void Pyramid::apply_kernel(const Kernel& k) {
  check_order(k.state);
  std::vector<char> in(top_.slot_count(), 0);
  for (Dart d : k.darts) {
    if (!top_.contains(d)) throw KernelError("kernel contains dead dart " + dart_str(d));
    if (in[d.slot()]) throw KernelError("kernel lists dart " + dart_str(d) + " twice");
    in[d.slot()] = 1;
  }
  auto require_alpha_closed = [&] {
    for (Dart d : k.darts) {
      if (!in[top_.alpha(d).slot()]) {
        throw KernelError("kernel is not closed under alpha at dart " + dart_str(d));
      }
    }
  };

  std::vector<int> orientation = orientation_;
  switch (k.state) {
    case KernelState::CK: {
      require_alpha_closed();
      const auto rep = vertex_representatives(top_);
      UnionFind uf(top_.slot_count());
      for (Dart d : k.darts) {
        const Dart a = top_.alpha(d);
        if (CanonicalLess{}(a, d)) continue;
        if (rep[d.slot()] == rep[a.slot()]) {
          throw KernelError("contraction kernel holds self-loop " + dart_str(d));
        }
        if (!uf.unite(rep[d.slot()].slot(), rep[a.slot()].slot())) {
          throw KernelError("contraction kernel is not a forest (cycle through " + dart_str(d) +
                            ")");
        }
      }
      break;
    }
    case KernelState::RKESL: {
      require_alpha_closed();
      WorkMap w(top_);
      std::size_t left = k.darts.size();
      while (left > 0) {
        bool progress = false;
        for (Dart d : k.darts) {
          if (!w.alive(d) || !empty_self_loop(w, d)) continue;
          const Dart a = w.alpha(d);
          w.splice(d);
          w.splice(a);
          left -= 2;
          progress = true;
        }
        if (!progress) {
          Dart witness;
          for (Dart d : k.darts) {
            if (w.alive(d)) {
              witness = d;
              break;
            }
          }
          throw KernelError("RKESL dart " + dart_str(witness) + " is not an empty self-loop");
        }
      }
      break;
    }
    case KernelState::RKEDE: {
      WorkMap w(top_);
      const auto& emb = grid_.embedding;
      std::size_t left = k.darts.size();
      while (left > 0) {
        bool progress = false;
        for (Dart u : k.darts) {
          if (!w.alive(u) || !removable_double_edge(w, u)) continue;
          const Dart v = w.phi(u);
          if (!in[v.slot()]) continue;
          const Dart a = w.alpha(u);
          const Dart b = w.alpha(v);
          // sigma(a) = v and sigma(b) = u: a's segment continues with v's,
          // b's with u's.
          orientation[a.slot()] += orientation[v.slot()] + angle(emb.move(-u), emb.move(v)).value();
          orientation[b.slot()] += orientation[u.slot()] + angle(emb.move(-v), emb.move(u)).value();
          w.splice(u);
          w.splice(v);
          w.pair(a, b);
          left -= 2;
          progress = true;
        }
        if (!progress) {
          Dart witness;
          for (Dart d : k.darts) {
            if (w.alive(d)) {
              witness = d;
              break;
            }
          }
          throw KernelError("RKEDE dart " + dart_str(witness) +
                            " is not on a removable degree-2 face");
        }
      }
      break;
    }
  }

  states_.push_back(k.state);
  const int index = top_level();
  for (Dart d : k.darts) {
    level_[d.slot()] = index;
    orientation[d.slot()] = 0;
  }
  orientation_ = std::move(orientation);
  top_ = reconstruct_level(index);
}

Kernel Pyramid::compute_rkesl() const {
  Kernel k{KernelState::RKESL, {}};
  WorkMap w(top_);
  const auto darts = top_.darts();
  bool progress = true;
  while (progress) {
    progress = false;
    for (Dart d : darts) {
      if (!w.alive(d) || !empty_self_loop(w, d)) continue;
      const Dart a = w.alpha(d);
      k.darts.push_back(d);
      k.darts.push_back(a);
      w.splice(d);
      w.splice(a);
      progress = true;
    }
  }
  return k;
}

Kernel Pyramid::compute_rkede() const {
  Kernel k{KernelState::RKEDE, {}};
  WorkMap w(top_);
  const auto darts = top_.darts();
  bool progress = true;
  while (progress) {
    progress = false;
    for (Dart u : darts) {
      if (!w.alive(u) || !removable_double_edge(w, u)) continue;
      const Dart v = w.phi(u);
      const Dart a = w.alpha(u);
      const Dart b = w.alpha(v);
      k.darts.push_back(u);
      k.darts.push_back(v);
      w.splice(u);
      w.splice(v);
      w.pair(a, b);
      progress = true;
    }
  }
  return k;
}

std::vector<Dart> Pyramid::receptive_field(int level_index, Dart d) const {
  check_level(level_index);
  if (!survives(d, level_index)) {
    throw InvalidArgument("dart " + dart_str(d) + " does not survive at level " +
                          std::to_string(level_index));
  }
  std::vector<Dart> rf{d};
  if (level_index == 0) return rf;
  const auto& base = grid_.map;
  Dart cur = base.sigma(d);
  while (level(cur) <= level_index) {
    rf.push_back(cur);
    if (rf.size() > base.dart_count()) throw InternalError("receptive field does not close");
    cur = state(level(cur)) == KernelState::CK ? base.phi(cur) : base.sigma(cur);
  }
  return rf;
}

Dart Pyramid::sigma_at(int level_index, Dart d) const {
  check_level(level_index);
  if (!survives(d, level_index)) {
    throw InvalidArgument("dart " + dart_str(d) + " does not survive at level " +
                          std::to_string(level_index));
  }
  const auto& base = grid_.map;
  Dart cur = base.sigma(d);
  std::size_t guard = 0;
  while (level(cur) <= level_index) {
    if (++guard > base.dart_count()) throw InternalError("receptive field does not close");
    cur = state(level(cur)) == KernelState::CK ? base.phi(cur) : base.sigma(cur);
  }
  return cur;
}

std::vector<Dart> Pyramid::segment_darts(int level_index, Dart d) const {
  check_level(level_index);
  if (!survives(d, level_index)) {
    throw InvalidArgument("dart " + dart_str(d) + " does not survive at level " +
                          std::to_string(level_index));
  }
  const auto& base = grid_.map;
  std::vector<Dart> seg{d};
  for (;;) {
    const Dart twin = -seg.back();
    const int l = level(twin);
    if (l > level_index || state(l) != KernelState::RKEDE) break;
    // The segment goes on through the point where twin starts; the other
    // dart of the removed degree-2 face there is the next crack.
    Dart next = base.phi(twin);
    std::size_t guard = 0;
    while (level(next) > top_level() || state(level(next)) != KernelState::RKEDE) {
      next = base.phi(next);
      if (++guard > base.dart_count()) throw InternalError("segment step does not close");
    }
    if (next == twin || level(next) != l) {
      throw InternalError("unpaired double-edge dart " + dart_str(twin));
    }
    seg.push_back(next);
    if (seg.size() > base.dart_count()) throw InternalError("segment does not close");
  }
  return seg;
}

Dart Pyramid::alpha_at(int level_index, Dart d) const {
  return -segment_darts(level_index, d).back();
}

CombinatorialMap Pyramid::reconstruct_level(int level_index) const {
  check_level(level_index);
  if (level_index == 0) return grid_.map;
  CombinatorialMap m(grid_.map.max_id());
  for (std::size_t s = 0; s < level_.size(); ++s) {
    const Dart d = Dart::from_slot(s);
    if (level(d) <= level_index) continue;
    m.set(d, sigma_at(level_index, d), alpha_at(level_index, d));
  }
  return m;
}

std::vector<std::pair<Dart, std::vector<Dart>>> Pyramid::composition(int level_index) const {
  check_level(level_index);
  if (level_index < 1) throw InvalidArgument("composition needs level >= 1");
  const auto parent = reconstruct_level(level_index - 1);
  const auto child = level_index == top_level() ? top_ : reconstruct_level(level_index);
  const auto prep = vertex_representatives(parent);
  const auto crep = vertex_representatives(child);

  UnionFind uf(parent.slot_count());
  if (state(level_index) == KernelState::CK) {
    for (Dart d : kernel_darts(level_index)) {
      uf.unite(prep[d.slot()].slot(), prep[parent.alpha(d).slot()].slot());
    }
  }
  std::vector<std::vector<Dart>> members(parent.slot_count());
  for (Dart d : parent.darts()) {
    if (prep[d.slot()] == d) members[uf.find(d.slot())].push_back(d);
  }
  std::vector<std::pair<Dart, std::vector<Dart>>> out;
  for (Dart d : child.darts()) {
    if (crep[d.slot()] != d) continue;
    auto m = members[uf.find(prep[d.slot()].slot())];
    std::sort(m.begin(), m.end(), CanonicalLess{});
    out.emplace_back(d, std::move(m));
  }
  return out;
}

std::vector<Dart> Pyramid::composed_of(int level_index, Dart vertex) const {
  for (auto& [v, parts] : composition(level_index)) {
    if (v == vertex) return parts;
  }
  throw InvalidArgument("dart " + dart_str(vertex) + " is not a vertex representative at level " +
                        std::to_string(level_index));
}

Pyramid Pyramid::from_encoding(std::int32_t width, std::int32_t height,
                               const std::vector<int>& levels,
                               const std::vector<KernelState>& states,
                               const std::vector<int>& orientations) {
  Pyramid p(width, height);
  if (levels.size() != p.level_.size() || orientations.size() != p.level_.size()) {
    throw ParseError("encoding arrays do not match a " + std::to_string(width) + "x" +
                     std::to_string(height) + " grid");
  }
  const int n = static_cast<int>(states.size());
  std::vector<Kernel> kernels(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) kernels[i].state = states[i];
  for (std::size_t s = 0; s < levels.size(); ++s) {
    const int l = levels[s];
    if (l < 1 || l > n + 1) throw ParseError("level out of range at slot " + std::to_string(s));
    if (l <= n) kernels[static_cast<std::size_t>(l - 1)].darts.push_back(Dart::from_slot(s));
  }
  for (const auto& k : kernels) p.apply_kernel(k);
  if (p.orientation_ != orientations) {
    throw ParseError("stored orientations disagree with the replayed pyramid");
  }
  return p;
}

}  // namespace cpyr
