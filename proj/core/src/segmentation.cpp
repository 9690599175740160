#include "cpyr/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "cpyr/containment.hpp"
#include "cpyr/errors.hpp"

namespace cpyr {

namespace {

struct DisjointSets {
  std::vector<std::int32_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::int32_t find(std::int32_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

}  // namespace

int Partition::region_of(const LevelView& view, Dart d) const {
  const Dart v = view.vertex(d);
  const auto it = std::lower_bound(regions.begin(), regions.end(), v, CanonicalLess{});
  if (it == regions.end() || *it != v) return -1;
  return static_cast<int>(it - regions.begin());
}

std::int32_t Partition::seed_pixel(const Pyramid& pyr, int region) const {
  return pyr.numbering().owner(regions.at(static_cast<std::size_t>(region)));
}

Partition partition_at(const LevelView& view) {
  const Pyramid& pyr = view.pyramid();
  const std::int32_t w = pyr.width();
  const std::int32_t h = pyr.height();
  const std::int32_t outside = w * h;
  const auto& grid = pyr.numbering();
  auto node = [&](Dart d) {
    const std::int32_t p = grid.owner(d);
    return p < 0 ? outside : p;
  };

  DisjointSets sets(static_cast<std::size_t>(outside) + 1);
  for (int k = 1; k <= view.level(); ++k) {
    if (pyr.state(k) != KernelState::CK) continue;
    for (Dart d : pyr.kernel_darts(k)) sets.unite(node(d), node(-d));
  }

  Partition part;
  part.level = view.level();
  part.exterior = view.exterior_vertex();
  std::vector<int> region_of_root(static_cast<std::size_t>(outside) + 1, -1);
  for (Dart v : view.vertices()) {
    if (v == part.exterior) continue;
    region_of_root[static_cast<std::size_t>(sets.find(node(v)))] =
        static_cast<int>(part.regions.size());
    part.regions.push_back(v);
  }
  part.labels = LabelImage{w, h, std::vector<std::int32_t>(static_cast<std::size_t>(outside))};
  for (std::int32_t p = 0; p < outside; ++p) {
    const int r = region_of_root[static_cast<std::size_t>(sets.find(p))];
    if (r < 0) throw InternalError("pixel " + std::to_string(p) + " maps to no region");
    part.labels.labels[static_cast<std::size_t>(p)] = r;
  }
  return part;
}

std::vector<RegionStats> region_stats(const Partition& part, const Image& img) {
  if (img.width != part.labels.width || img.height != part.labels.height) {
    throw InvalidArgument("image size does not match the partition");
  }
  std::vector<RegionStats> out(part.region_count());
  std::vector<std::array<double, 3>> sum(part.region_count(), {0, 0, 0});
  for (std::int32_t y = 0; y < img.height; ++y) {
    for (std::int32_t x = 0; x < img.width; ++x) {
      const auto r = static_cast<std::size_t>(part.labels.at(x, y));
      RegionStats& s = out[r];
      if (s.pixels == 0) {
        s.x0 = s.x1 = x;
        s.y0 = s.y1 = y;
      }
      ++s.pixels;
      s.x0 = std::min(s.x0, x);
      s.x1 = std::max(s.x1, x);
      s.y0 = std::min(s.y0, y);
      s.y1 = std::max(s.y1, y);
      const auto c = img.rgb(x, y);
      for (std::size_t k = 0; k < 3; ++k) sum[r][k] += c[k];
    }
  }
  for (std::size_t r = 0; r < out.size(); ++r) {
    for (std::size_t k = 0; k < 3; ++k) {
      out[r].mean[k] = out[r].pixels ? sum[r][k] / static_cast<double>(out[r].pixels) : 0;
    }
  }
  return out;
}

double color_distance(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) +
                   (a[2] - b[2]) * (a[2] - b[2]));
}

bool apply_if_nonempty(Pyramid& pyr, const Kernel& k) {
  if (k.darts.empty()) return false;
  pyr.apply_kernel(k);
  return true;
}

void apply_removals(Pyramid& pyr) {
  apply_if_nonempty(pyr, pyr.compute_rkesl());
  apply_if_nonempty(pyr, pyr.compute_rkede());
}

Pyramid build_from_labels(const LabelImage& labels) {
  Pyramid pyr(labels.width, labels.height);
  const auto& grid = pyr.numbering();
  DisjointSets sets(static_cast<std::size_t>(labels.width) * labels.height);
  Kernel ck{KernelState::CK, {}};
  auto consider = [&](Dart d) {
    const std::int32_t a = grid.owner(d);
    const std::int32_t b = grid.owner(-d);
    if (labels.labels[static_cast<std::size_t>(a)] != labels.labels[static_cast<std::size_t>(b)]) {
      return;
    }
    if (!sets.unite(a, b)) return;
    ck.darts.push_back(d);
    ck.darts.push_back(-d);
  };
  for (std::int32_t y = 0; y < labels.height; ++y) {
    for (std::int32_t c = 1; c < labels.width; ++c) consider(grid.vertical(c, y));
  }
  for (std::int32_t r = 1; r < labels.height; ++r) {
    for (std::int32_t x = 0; x < labels.width; ++x) consider(grid.horizontal(x, r));
  }
  apply_if_nonempty(pyr, ck);
  apply_removals(pyr);
  return pyr;
}

MergeResult merge_level(Pyramid& pyr, const Image& img, double threshold) {
  const LevelView view(pyr, pyr.top_level());
  const Partition part = partition_at(view);
  const auto stats = region_stats(part, img);

  struct Candidate {
    double dist;
    std::int32_t key;
    Dart d;
    int a, b;
  };
  std::vector<Candidate> cand;
  for (Dart d : view.map().darts()) {
    const Dart t = view.alpha(d);
    if (t.slot() < d.slot()) continue;
    const int a = part.region_of(view, d);
    const int b = part.region_of(view, t);
    if (a < 0 || b < 0 || a == b) continue;
    const double dist = color_distance(stats[static_cast<std::size_t>(a)].mean,
                                       stats[static_cast<std::size_t>(b)].mean);
    if (dist > threshold) continue;
    cand.push_back({dist, std::min(std::abs(d.id()), std::abs(t.id())), d, a, b});
  }
  std::sort(cand.begin(), cand.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(x.dist, x.key) < std::tie(y.dist, y.key);
  });

  DisjointSets sets(part.region_count());
  Kernel ck{KernelState::CK, {}};
  for (const auto& c : cand) {
    if (!sets.unite(c.a, c.b)) continue;
    ck.darts.push_back(c.d);
    ck.darts.push_back(view.alpha(c.d));
  }

  MergeResult res;
  res.regions_before = part.region_count();
  res.contracted_edges = ck.darts.size() / 2;
  res.regions_after = res.regions_before - res.contracted_edges;
  if (ck.darts.empty()) return res;
  pyr.apply_kernel(ck);
  apply_removals(pyr);
  return res;
}

Pyramid segment_image(const Image& img, double threshold, std::vector<std::size_t>* region_counts) {
  Pyramid pyr(img.width, img.height);
  if (region_counts) {
    region_counts->clear();
    region_counts->push_back(static_cast<std::size_t>(img.width) * img.height);
  }
  for (;;) {
    const MergeResult r = merge_level(pyr, img, threshold);
    if (r.contracted_edges == 0) break;
    if (region_counts) region_counts->push_back(r.regions_after);
  }
  return pyr;
}

namespace {

struct Scored {
  int candidate = -1;
  std::vector<int> inside;
  std::int64_t area = 0;
  double score = 0;
};

std::vector<Scored> scored_candidates(const LevelView& view, const Partition& part,
                                      const std::vector<RegionStats>& stats,
                                      const RoadsignQuery& q) {
  if (q.k < 1) throw InvalidArgument("k must be at least 1");
  std::vector<int> order(part.region_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return color_distance(stats[static_cast<std::size_t>(a)].mean, q.background) <
           color_distance(stats[static_cast<std::size_t>(b)].mean, q.background);
  });
  order.resize(std::min(order.size(), static_cast<std::size_t>(q.k)));

  std::vector<Scored> out;
  for (int c : order) {
    Scored s;
    s.candidate = c;
    for (Dart v : inside_all(view, part.regions[static_cast<std::size_t>(c)])) {
      const int r = part.region_of(view, v);
      if (r >= 0) s.inside.push_back(r);
    }
    if (s.inside.empty()) continue;
    std::sort(s.inside.begin(), s.inside.end());
    std::array<double, 3> sum{0, 0, 0};
    for (int r : s.inside) {
      const auto& st = stats[static_cast<std::size_t>(r)];
      s.area += st.pixels;
      for (std::size_t k = 0; k < 3; ++k) sum[k] += st.mean[k] * static_cast<double>(st.pixels);
    }
    for (auto& v : sum) v /= static_cast<double>(s.area);
    s.score = color_distance(sum, q.symbol);
    out.push_back(std::move(s));
  }
  return out;
}

RoadsignResult to_result(const Scored& s) {
  RoadsignResult r;
  r.found = true;
  r.background_region = s.candidate;
  r.symbol_regions = s.inside;
  r.score = s.score;
  return r;
}

RoadsignResult not_found() {
  RoadsignResult r;
  r.message = "no sign found";
  return r;
}

}  // namespace

RoadsignResult roadsign_extract(const LevelView& view, const Partition& part,
                                const std::vector<RegionStats>& stats, const RoadsignQuery& q) {
  const auto cands = scored_candidates(view, part, stats, q);
  if (cands.empty()) return not_found();
  const Scored* best = &cands.front();
  for (const auto& s : cands) {
    if (s.score < best->score || (s.score == best->score && s.area > best->area)) best = &s;
  }
  return to_result(*best);
}

std::vector<RoadsignResult> roadsign_extract_each(const LevelView& view, const Partition& part,
                                                  const std::vector<RegionStats>& stats,
                                                  const RoadsignQuery& q) {
  const auto cands = scored_candidates(view, part, stats, q);
  std::vector<RoadsignResult> out;
  for (const auto& s : cands) {
    const bool holds_other = std::any_of(cands.begin(), cands.end(), [&](const Scored& o) {
      return o.candidate != s.candidate &&
             std::binary_search(s.inside.begin(), s.inside.end(), o.candidate);
    });
    if (!holds_other) out.push_back(to_result(s));
  }
  if (out.empty()) out.push_back(not_found());
  return out;
}

Image region_mask(const Partition& part, const std::vector<int>& regions) {
  Image img(part.labels.width, part.labels.height, 1);
  std::vector<char> on(part.region_count(), 0);
  for (int r : regions) on.at(static_cast<std::size_t>(r)) = 1;
  for (std::size_t i = 0; i < part.labels.labels.size(); ++i) {
    if (on[static_cast<std::size_t>(part.labels.labels[i])]) img.data[i] = 255;
  }
  return img;
}

Image mean_color_image(const Partition& part, const std::vector<RegionStats>& stats) {
  Image img(part.labels.width, part.labels.height, 3);
  for (std::int32_t y = 0; y < img.height; ++y) {
    for (std::int32_t x = 0; x < img.width; ++x) {
      const auto& m = stats[static_cast<std::size_t>(part.labels.at(x, y))].mean;
      img.set_rgb(x, y,
                  {static_cast<std::uint8_t>(std::lround(m[0])),
                   static_cast<std::uint8_t>(std::lround(m[1])),
                   static_cast<std::uint8_t>(std::lround(m[2]))});
    }
  }
  return img;
}

}  // namespace cpyr
