#include "gen.hpp"

#include <algorithm>
#include <numeric>

#include "cpyr/segmentation.hpp"

namespace cpyr::testing {

namespace {

struct Sets {
  std::vector<std::size_t> p;
  explicit Sets(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

}  // namespace

Kernel random_contraction(const Pyramid& pyr, std::mt19937& rng, double p) {
  const CombinatorialMap& top = pyr.top();
  const auto rep = vertex_representatives(top);
  Dart ext{};
  for (Dart d : pyr.exterior_darts()) {
    if (top.contains(d)) {
      ext = rep[d.slot()];
      break;
    }
  }
  std::vector<Dart> edges;
  for (Dart d : top.darts()) {
    const Dart a = top.alpha(d);
    if (a.slot() < d.slot()) continue;
    if (rep[d.slot()] == rep[a.slot()] || rep[d.slot()] == ext || rep[a.slot()] == ext) continue;
    edges.push_back(d);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  std::bernoulli_distribution keep(p);
  Sets sets(top.slot_count());
  Kernel k{KernelState::CK, {}};
  for (Dart d : edges) {
    const Dart a = top.alpha(d);
    if (!keep(rng)) continue;
    if (!sets.unite(rep[d.slot()].slot(), rep[a.slot()].slot())) continue;
    k.darts.push_back(d);
    k.darts.push_back(a);
  }
  return k;
}

Pyramid random_pyramid(std::mt19937& rng, std::int32_t w, std::int32_t h, int max_levels) {
  Pyramid pyr(w, h);
  std::uniform_real_distribution<double> prob(0.05, 0.6);
  std::bernoulli_distribution removal(0.8);
  while (pyr.top_level() < max_levels) {
    const Kernel ck = random_contraction(pyr, rng, prob(rng));
    if (ck.darts.empty()) {
      const Kernel all = random_contraction(pyr, rng, 1.0);
      if (all.darts.empty()) break;
      continue;
    }
    pyr.apply_kernel(ck);
    if (removal(rng)) apply_if_nonempty(pyr, pyr.compute_rkesl());
    if (removal(rng)) apply_if_nonempty(pyr, pyr.compute_rkede());
  }
  return pyr;
}

LabelImage random_labels(std::mt19937& rng, std::int32_t w, std::int32_t h) {
  LabelImage img{w, h, std::vector<std::int32_t>(static_cast<std::size_t>(w) * h, 0)};
  std::uniform_int_distribution<int> label(0, 5);
  std::uniform_int_distribution<int> shapes(2, 9);
  auto set = [&](std::int32_t x, std::int32_t y, int l) {
    if (x >= 0 && y >= 0 && x < w && y < h) img.labels[static_cast<std::size_t>(y) * w + x] = l;
  };
  const int n = shapes(rng);
  for (int s = 0; s < n; ++s) {
    std::uniform_int_distribution<std::int32_t> xs(0, w - 1), ys(0, h - 1);
    std::int32_t x0 = xs(rng), x1 = xs(rng), y0 = ys(rng), y1 = ys(rng);
    if (x1 < x0) std::swap(x0, x1);
    if (y1 < y0) std::swap(y0, y1);
    const int l = label(rng);
    switch (rng() % 3) {
      case 0:  // filled rectangle
        for (std::int32_t y = y0; y <= y1; ++y)
          for (std::int32_t x = x0; x <= x1; ++x) set(x, y, l);
        break;
      case 1:  // ring, one or two pixels thick
        {
          const std::int32_t t = 1 + static_cast<std::int32_t>(rng() % 2);
          for (std::int32_t y = y0; y <= y1; ++y)
            for (std::int32_t x = x0; x <= x1; ++x)
              if (x - x0 < t || x1 - x < t || y - y0 < t || y1 - y < t) set(x, y, l);
        }
        break;
      default:  // random walk blob
        {
          std::int32_t x = x0, y = y0;
          const int steps = 5 + static_cast<int>(rng() % 40);
          for (int k = 0; k < steps; ++k) {
            set(x, y, l);
            switch (rng() % 4) {
              case 0: ++x; break;
              case 1: --x; break;
              case 2: ++y; break;
              default: --y; break;
            }
          }
        }
        break;
    }
  }
  // Sprinkle isolated pixels so single-pixel holes and diagonal contacts occur.
  const int dots = static_cast<int>(rng() % 6);
  for (int k = 0; k < dots; ++k) {
    set(static_cast<std::int32_t>(rng() % static_cast<unsigned>(w)),
        static_cast<std::int32_t>(rng() % static_cast<unsigned>(h)), label(rng));
  }
  return img;
}

namespace {

constexpr std::array<std::uint8_t, 3> kWhite{255, 255, 255};
constexpr std::array<std::uint8_t, 3> kBlue{20, 40, 200};
constexpr std::array<std::uint8_t, 3> kGray{128, 128, 128};

void paint_sign(Image& img, std::int32_t ox, std::int32_t oy, std::int32_t size) {
  const std::int32_t b = std::max<std::int32_t>(2, size / 8);
  for (std::int32_t y = 0; y < size; ++y) {
    for (std::int32_t x = 0; x < size; ++x) {
      const bool border = x < b || y < b || x >= size - b || y >= size - b;
      img.set_rgb(ox + x, oy + y, border ? kWhite : kBlue);
    }
  }
  // Up-arrow: a triangle head on a shaft, well inside the background.
  const std::int32_t cx = size / 2;
  const std::int32_t top = b + 3;
  const std::int32_t head = size / 4;
  for (std::int32_t r = 0; r < head; ++r) {
    for (std::int32_t x = cx - r; x <= cx + r; ++x) img.set_rgb(ox + x, oy + top + r, kWhite);
  }
  const std::int32_t shaft = std::max<std::int32_t>(1, size / 16);
  for (std::int32_t y = top + head; y < size - b - 3; ++y) {
    for (std::int32_t x = cx - shaft; x <= cx + shaft; ++x) img.set_rgb(ox + x, oy + y, kWhite);
  }
}

}  // namespace

Image arrow_sign(std::int32_t size) {
  Image img(size, size, 3);
  paint_sign(img, 0, 0, size);
  return img;
}

Image flag_sign(std::int32_t size) {
  Image img(size, size, 3);
  for (std::int32_t y = 0; y < size; ++y) {
    for (std::int32_t x = 0; x < size; ++x) {
      const bool middle = x >= size / 3 && x < 2 * size / 3;
      img.set_rgb(x, y, middle ? kBlue : kWhite);
    }
  }
  return img;
}

Image two_signs() {
  const std::int32_t s = 24;
  Image img(2 * s + 12, s + 8, 3);
  for (std::int32_t y = 0; y < img.height; ++y)
    for (std::int32_t x = 0; x < img.width; ++x) img.set_rgb(x, y, kGray);
  paint_sign(img, 4, 4, s);
  paint_sign(img, s + 8, 4, s);
  return img;
}

LabelImage concentric_rings(std::int32_t size, int rings) {
  LabelImage img{size, size, std::vector<std::int32_t>(static_cast<std::size_t>(size) * size)};
  for (std::int32_t y = 0; y < size; ++y) {
    for (std::int32_t x = 0; x < size; ++x) {
      const std::int32_t d = std::min({x, y, size - 1 - x, size - 1 - y});
      img.labels[static_cast<std::size_t>(y) * size + x] = std::min<std::int32_t>(d / 2, rings - 1);
    }
  }
  return img;
}

LabelImage c_shape() {
  // 0 = background, 1 = C, 2 = block in the mouth touching both arms, not the spine.
  const char* rows[] = {
      "00000000",
      "01111110",
      "01022200",
      "01022200",
      "01111110",
      "00000000",
  };
  LabelImage img{8, 6, {}};
  for (const char* r : rows)
    for (int x = 0; x < 8; ++x) img.labels.push_back(r[x] - '0');
  return img;
}

LabelImage two_blobs() {
  const char* rows[] = {
      "0000000000",
      "0110002200",
      "0110002200",
      "0000000000",
  };
  LabelImage img{10, 4, {}};
  for (const char* r : rows)
    for (int x = 0; x < 10; ++x) img.labels.push_back(r[x] - '0');
  return img;
}

}  // namespace cpyr::testing
