#include "cpyr/map.hpp"

#include <algorithm>
#include <sstream>
#include <string_view>

#include "cpyr/errors.hpp"

namespace cpyr {

char freeman_char(Move m) { return static_cast<char>('0' + static_cast<int>(m)); }

Point step(Point p, Move m) {
  switch (m) {
    case Move::right: return {p.x + 1, p.y};
    case Move::up: return {p.x, p.y - 1};
    case Move::left: return {p.x - 1, p.y};
    case Move::down: return {p.x, p.y + 1};
  }
  return p;
}

// ---------------------------------------------------------------------------
// CrackEmbedding

CrackEmbedding::CrackEmbedding(std::int32_t max_id)
    : max_id_(max_id),
      starts_(2 * static_cast<std::size_t>(max_id)),
      moves_(2 * static_cast<std::size_t>(max_id), Move::right) {}

void CrackEmbedding::set(Dart d, Point start, Move move) {
  starts_.at(d.slot()) = start;
  moves_.at(d.slot()) = move;
}

// ---------------------------------------------------------------------------
// CombinatorialMap

CombinatorialMap::CombinatorialMap(std::int32_t max_id)
    : max_id_(max_id),
      sigma_(2 * static_cast<std::size_t>(max_id)),
      alpha_(2 * static_cast<std::size_t>(max_id)) {
  if (max_id < 0) throw InvalidArgument("negative dart range");
}

CombinatorialMap CombinatorialMap::from_arrays(std::int32_t max_id, std::span<const Dart> darts,
                                               std::span<const Dart> sigma_images,
                                               std::span<const Dart> alpha_images) {
  if (darts.size() != sigma_images.size() || darts.size() != alpha_images.size()) {
    throw InvalidArgument("from_arrays: array sizes differ");
  }
  CombinatorialMap m(max_id);
  for (std::size_t i = 0; i < darts.size(); ++i) m.set(darts[i], sigma_images[i], alpha_images[i]);
  return m;
}

void CombinatorialMap::set(Dart d, Dart sigma_image, Dart alpha_image) {
  if (!d.valid() || d.slot() >= sigma_.size()) {
    throw InvalidArgument("dart " + std::to_string(d.id()) + " outside the map's id range");
  }
  if (!sigma_image.valid() || !alpha_image.valid()) throw InvalidArgument("null permutation image");
  if (!sigma_[d.slot()].valid()) ++count_;
  sigma_[d.slot()] = sigma_image;
  alpha_[d.slot()] = alpha_image;
}

void CombinatorialMap::erase(Dart d) {
  if (!contains(d)) return;
  sigma_[d.slot()] = Dart{};
  alpha_[d.slot()] = Dart{};
  --count_;
}

std::size_t CombinatorialMap::checked(Dart d) const {
  if (!contains(d)) throw InvalidArgument("unknown dart " + std::to_string(d.id()));
  return d.slot();
}

Dart CombinatorialMap::apply(Permutation p, Dart d) const {
  switch (p) {
    case Permutation::sigma: return sigma(d);
    case Permutation::alpha: return alpha(d);
    case Permutation::phi: return phi(d);
  }
  return Dart{};
}

std::vector<Dart> CombinatorialMap::darts() const {
  std::vector<Dart> out;
  out.reserve(count_);
  for (std::size_t s = 0; s < sigma_.size(); ++s) {
    if (sigma_[s].valid()) out.push_back(Dart::from_slot(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Traversals

std::vector<Dart> orbit(const CombinatorialMap& map, Dart d, Permutation kind) {
  if (!map.contains(d)) throw InvalidArgument("unknown dart " + std::to_string(d.id()));
  std::vector<Dart> out;
  Dart cur = d;
  do {
    out.push_back(cur);
    if (out.size() > map.dart_count()) throw InternalError("orbit does not close");
    cur = map.apply(kind, cur);
    if (!map.contains(cur)) throw InternalError("permutation leaves the dart set");
  } while (cur != d);
  return out;
}

std::vector<std::vector<Dart>> cycles(const CombinatorialMap& map, Permutation kind) {
  std::vector<std::vector<Dart>> out;
  std::vector<char> seen(map.slot_count(), 0);
  for (Dart d : map.darts()) {
    if (seen[d.slot()]) continue;
    auto cyc = orbit(map, d, kind);
    for (Dart e : cyc) seen[e.slot()] = 1;
    out.push_back(std::move(cyc));
  }
  return out;
}

std::size_t cycle_count(const CombinatorialMap& map, Permutation kind) {
  std::size_t n = 0;
  std::vector<char> seen(map.slot_count(), 0);
  for (Dart d : map.darts()) {
    if (seen[d.slot()]) continue;
    ++n;
    Dart cur = d;
    std::size_t guard = 0;
    do {
      seen[cur.slot()] = 1;
      cur = map.apply(kind, cur);
      if (++guard > map.dart_count()) throw InternalError("cycle does not close");
    } while (cur != d);
  }
  return n;
}

CombinatorialMap dual(const CombinatorialMap& map) {
  CombinatorialMap out(map.max_id());
  for (Dart d : map.darts()) out.set(d, map.phi(d), map.alpha(d));
  return out;
}

// ---------------------------------------------------------------------------
// Validation

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ValidationReport validate(const CombinatorialMap& map) {
  ValidationReport report;
  const auto darts = map.darts();

  ValidationCheck involution{"alpha involution", true, {}, {}};
  ValidationCheck fixed{"alpha fixed point free", true, {}, {}};
  ValidationCheck bijective{"sigma bijective", true, {}, {}};
  std::vector<int> sigma_hits(map.slot_count(), 0);
  for (Dart d : darts) {
    const Dart a = map.alpha(d);
    if (a == d && fixed.passed) {
      fixed.passed = false;
      fixed.witness = d;
      fixed.detail = "alpha fixed point at dart " + std::to_string(d.id());
    }
    if ((!map.contains(a) || map.alpha(a) != d) && involution.passed) {
      involution.passed = false;
      involution.witness = d;
      involution.detail = "alpha(alpha(d)) != d";
    }
    const Dart s = map.sigma(d);
    if (!map.contains(s)) {
      if (bijective.passed) {
        bijective.passed = false;
        bijective.witness = d;
        bijective.detail = "sigma image outside the dart set";
      }
    } else if (++sigma_hits[s.slot()] > 1 && bijective.passed) {
      bijective.passed = false;
      bijective.witness = s;
      bijective.detail = "dart is the sigma image of two darts";
    }
  }
  report.checks.push_back(involution);
  report.checks.push_back(fixed);
  report.checks.push_back(bijective);

  ValidationCheck connected{"connected", true, {}, {}};
  if (!darts.empty() && bijective.passed && involution.passed) {
    std::vector<char> seen(map.slot_count(), 0);
    std::vector<Dart> stack{darts.front()};
    seen[darts.front().slot()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Dart d = stack.back();
      stack.pop_back();
      for (Dart n : {map.sigma(d), map.alpha(d)}) {
        if (!seen[n.slot()]) {
          seen[n.slot()] = 1;
          ++reached;
          stack.push_back(n);
        }
      }
    }
    if (reached != darts.size()) {
      connected.passed = false;
      for (Dart d : darts) {
        if (!seen[d.slot()]) {
          connected.witness = d;
          break;
        }
      }
      connected.detail = "not connected: " + std::to_string(darts.size() - reached) +
                         " darts unreachable";
    }
  } else if (!darts.empty()) {
    connected.passed = false;
    connected.detail = "skipped: permutations invalid";
  }
  report.checks.push_back(connected);

  ValidationCheck euler{"euler characteristic", true, {}, {}};
  if (bijective.passed && involution.passed) {
    const auto v = static_cast<long>(cycle_count(map, Permutation::sigma));
    const auto e = static_cast<long>(cycle_count(map, Permutation::alpha));
    const auto f = static_cast<long>(cycle_count(map, Permutation::phi));
    if (v - e + f != 2) {
      euler.passed = false;
      euler.detail = "V - E + F = " + std::to_string(v - e + f);
    }
  } else {
    euler.passed = false;
    euler.detail = "skipped: permutations invalid";
  }
  report.checks.push_back(euler);
  return report;
}

std::string to_dot(const CombinatorialMap& map) {
  const auto vertices = cycles(map, Permutation::sigma);
  std::vector<std::size_t> vertex_of(map.slot_count(), 0);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (Dart d : vertices[v]) vertex_of[d.slot()] = v;
  }
  std::ostringstream os;
  os << "graph cmap {\n";
  for (const auto& cyc : vertices) {
    os << "  \"v" << cyc.front().id() << "\" [label=\"(";
    for (std::size_t i = 0; i < cyc.size(); ++i) os << (i ? "," : "") << cyc[i].id();
    os << ")\"];\n";
  }
  for (Dart d : map.darts()) {
    const Dart a = map.alpha(d);
    if (CanonicalLess{}(a, d)) continue;
    os << "  \"v" << vertices[vertex_of[d.slot()]].front().id() << "\" -- \"v"
       << vertices[vertex_of[a.slot()]].front().id() << "\" [label=\"" << d.id() << "/" << a.id()
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Grid

GridNumbering::GridNumbering(std::int32_t width, std::int32_t height)
    : width_(width), height_(height) {
  if (width < 1 || height < 1) throw InvalidArgument("grid dimensions must be positive");
}

std::int32_t GridNumbering::max_id() const {
  return width_ * (height_ + 1) + (width_ + 1) * height_;
}

Dart GridNumbering::vertical(std::int32_t column_line, std::int32_t row) const {
  return Dart(1 + row * (width_ + 1) + column_line);
}

Dart GridNumbering::horizontal(std::int32_t column, std::int32_t row_line) const {
  return Dart(1 + (width_ + 1) * height_ + row_line * width_ + column);
}

namespace {

struct Crack {
  bool vertical;
  std::int32_t a;  // column line (vertical) or column (horizontal)
  std::int32_t b;  // row (vertical) or row line (horizontal)
};

Crack decode(const GridNumbering& g, Dart d) {
  std::int32_t k = (d.id() < 0 ? -d.id() : d.id()) - 1;
  const std::int32_t nv = (g.width() + 1) * g.height();
  if (k < nv) return {true, k % (g.width() + 1), k / (g.width() + 1)};
  k -= nv;
  return {false, k % g.width(), k / g.width()};
}

}  // namespace

std::int32_t GridNumbering::owner(Dart d) const {
  const Crack c = decode(*this, d);
  const bool pos = d.id() > 0;
  if (c.vertical) {
    const std::int32_t x = pos ? c.a - 1 : c.a;
    return (x < 0 || x >= width_) ? -1 : c.b * width_ + x;
  }
  const std::int32_t y = pos ? c.b : c.b - 1;
  return (y < 0 || y >= height_) ? -1 : y * width_ + c.a;
}

Point GridNumbering::start(Dart d) const {
  const Crack c = decode(*this, d);
  const bool pos = d.id() > 0;
  if (c.vertical) return pos ? Point{c.a, c.b + 1} : Point{c.a, c.b};
  return pos ? Point{c.a + 1, c.b} : Point{c.a, c.b};
}

Move GridNumbering::move(Dart d) const {
  const Crack c = decode(*this, d);
  const bool pos = d.id() > 0;
  if (c.vertical) return pos ? Move::up : Move::down;
  return pos ? Move::left : Move::right;
}

GridMap build_grid_map(std::int32_t width, std::int32_t height) {
  GridMap g{GridNumbering(width, height), CombinatorialMap{}, CrackEmbedding{}};
  const auto& n = g.numbering;
  const std::int32_t max_id = n.max_id();
  g.map = CombinatorialMap(max_id);
  g.embedding = CrackEmbedding(max_id);

  for (std::int32_t y = 0; y < height; ++y) {
    for (std::int32_t x = 0; x < width; ++x) {
      const Dart cyc[4] = {n.vertical(x + 1, y), n.horizontal(x, y), -n.vertical(x, y),
                           -n.horizontal(x, y + 1)};
      for (int i = 0; i < 4; ++i) g.map.set(cyc[i], cyc[(i + 1) % 4], -cyc[i]);
    }
  }

  // Exterior darts: exactly one starts at each border corner point.
  const std::int32_t pw = width + 1;
  std::vector<Dart> outer_from(static_cast<std::size_t>(pw) * (height + 1));
  auto at = [&](Point p) -> Dart& { return outer_from[static_cast<std::size_t>(p.y) * pw + p.x]; };
  std::vector<Dart> outer;
  for (std::int32_t y = 0; y < height; ++y) {
    outer.push_back(n.vertical(0, y));
    outer.push_back(-n.vertical(width, y));
  }
  for (std::int32_t x = 0; x < width; ++x) {
    outer.push_back(-n.horizontal(x, 0));
    outer.push_back(n.horizontal(x, height));
  }
  for (Dart d : outer) at(n.start(d)) = d;
  for (Dart d : outer) g.map.set(d, at(step(n.start(d), n.move(d))), -d);

  for (Dart d : g.map.darts()) g.embedding.set(d, n.start(d), n.move(d));
  return g;
}

}  // namespace cpyr
