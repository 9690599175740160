#include "eager.hpp"

#include <set>
#include <stdexcept>

namespace cpyr::testing {

EagerMap::EagerMap(const CombinatorialMap& base) {
  for (Dart d : base.darts()) {
    sigma_[d.id()] = base.sigma(d).id();
    alpha_[d.id()] = base.alpha(d).id();
  }
}

void EagerMap::splice_sigma(int d) {
  int prev = d;
  while (sigma_.at(prev) != d) prev = sigma_.at(prev);
  sigma_[prev] = sigma_.at(d);
  sigma_.erase(d);
}

void EagerMap::splice_phi(std::map<int, int>& phi, int d) {
  int prev = d;
  while (phi.at(prev) != d) prev = phi.at(prev);
  phi[prev] = phi.at(d);
  phi.erase(d);
}

void EagerMap::apply(KernelState state, const std::vector<Dart>& darts) {
  std::set<int> in;
  for (Dart d : darts) {
    if (!contains(d)) throw std::runtime_error("kernel dart not in map");
    in.insert(d.id());
  }
  auto vertex_of = [&](int d) {
    int best = d;
    for (int x = sigma_.at(d); x != d; x = sigma_.at(x)) best = std::min(best, x);
    return best;
  };

  switch (state) {
    case KernelState::CK: {
      std::map<int, int> parent;
      auto find = [&](int x) {
        while (parent.count(x) && parent[x] != x) x = parent[x];
        return x;
      };
      for (int d : in) {
        const int a = alpha_.at(d);
        if (!in.count(a)) throw std::runtime_error("CK not closed under alpha");
        if (d > a) continue;
        const int u = find(vertex_of(d));
        const int v = find(vertex_of(a));
        if (u == v) throw std::runtime_error("CK is not a forest");
        parent[u] = v;
      }
      std::map<int, int> phi;
      for (const auto& [d, a] : alpha_) phi[d] = sigma_.at(a);
      for (int d : in) splice_phi(phi, d);
      for (int d : in) {
        alpha_.erase(d);
        sigma_.erase(d);
      }
      for (auto& [d, s] : sigma_) s = phi.at(alpha_.at(d));
      break;
    }
    case KernelState::RKESL: {
      for (int d : in) {
        if (!in.count(alpha_.at(d))) throw std::runtime_error("RKESL not closed under alpha");
        if (vertex_of(d) != vertex_of(alpha_.at(d))) {
          throw std::runtime_error("RKESL edge is not a self-loop");
        }
      }
      for (int d : in) {
        splice_sigma(d);
        alpha_.erase(d);
      }
      break;
    }
    case KernelState::RKEDE: {
      std::set<int> done;
      for (int u : in) {
        if (done.count(u)) continue;
        const int w = sigma_.at(alpha_.at(u));
        if (!in.count(w) || sigma_.at(alpha_.at(w)) != u || w == alpha_.at(u) || w == u) {
          throw std::runtime_error("RKEDE dart not on a degree-2 face");
        }
        const int a = alpha_.at(u);
        const int b = alpha_.at(w);
        splice_sigma(u);
        splice_sigma(w);
        alpha_.erase(u);
        alpha_.erase(w);
        alpha_[a] = b;
        alpha_[b] = a;
        done.insert(u);
        done.insert(w);
      }
      break;
    }
  }
}

std::string EagerMap::diff(const CombinatorialMap& m) const {
  if (m.dart_count() != sigma_.size()) {
    return "dart count " + std::to_string(m.dart_count()) + " vs " +
           std::to_string(sigma_.size());
  }
  for (const auto& [d, s] : sigma_) {
    const Dart dd(d);
    if (!m.contains(dd)) return "dart " + std::to_string(d) + " missing";
    if (m.sigma(dd).id() != s) {
      return "sigma(" + std::to_string(d) + ") = " + std::to_string(m.sigma(dd).id()) +
             ", expected " + std::to_string(s);
    }
    if (m.alpha(dd).id() != alpha_.at(d)) {
      return "alpha(" + std::to_string(d) + ") = " + std::to_string(m.alpha(dd).id()) +
             ", expected " + std::to_string(alpha_.at(d));
    }
  }
  return {};
}

}  // namespace cpyr::testing
