#include "cpyr/invariants.hpp"

#include "cpyr/boundary.hpp"
#include "cpyr/containment.hpp"
#include "cpyr/level.hpp"
#include "cpyr/segmentation.hpp"

namespace cpyr {

namespace {

void fail(InvariantResult& r, const std::string& detail) {
  if (r.passed) r.detail = detail;
  r.passed = false;
}

std::string at(int level, Dart d) {
  return "level " + std::to_string(level) + ", dart " + std::to_string(d.id());
}

}  // namespace

std::vector<InvariantResult> check_invariants(const Pyramid& pyr, const Image* image) {
  InvariantResult maps{"map validity", true, 0, {}};
  InvariantResult cache{"cached orientation", true, 0, {}};
  InvariantResult closed{"closed boundary orientation", true, 0, {}};
  InvariantResult loops{"self-loop orientation", true, 0, {}};
  InvariantResult bound{"containment work bound", true, 0, {}};
  InvariantResult pixels{"pixel conservation", true, 0, {}};
  InvariantResult stats{"region statistics", true, 0, {}};
  const std::int64_t area = static_cast<std::int64_t>(pyr.width()) * pyr.height();

  for (int i = 0; i <= pyr.top_level(); ++i) {
    const LevelView view(pyr, i);
    ++maps.checked;
    const ValidationReport rep = validate(view.map());
    for (const auto& c : rep.checks) {
      if (!c.passed) fail(maps, "level " + std::to_string(i) + ": " + c.name + ": " + c.detail);
    }
    for (Dart d : view.map().darts()) {
      ++cache.checked;
      if (view.orientation(d) != dart_orientation(pyr, i, d)) fail(cache, at(i, d));
    }

    const Partition part = partition_at(view);
    ++pixels.checked;
    std::int64_t total = 0;
    std::vector<std::int64_t> count(part.region_count(), 0);
    for (auto l : part.labels.labels) ++count[static_cast<std::size_t>(l)];
    for (auto c : count) {
      total += c;
      if (c == 0) fail(pixels, "level " + std::to_string(i) + ": empty region");
    }
    if (total != area) fail(pixels, "level " + std::to_string(i) + ": pixel count differs");
    if (image) {
      ++stats.checked;
      for (const auto& s : region_stats(part, *image)) {
        for (double m : s.mean) {
          if (m < 0 || m > 255) fail(stats, "level " + std::to_string(i) + ": mean out of range");
        }
      }
    }

    if (!view.redundant_edge_free()) continue;
    int positive = 0;
    for (Dart v : view.vertices()) {
      ++closed.checked;
      const auto cyc = orbit(view.map(), v, Permutation::sigma);
      const int o = sequence_orientation(view, cyc, true);
      if (o == 4) ++positive;
      if (o != 4 && o != -4) fail(closed, at(i, v) + ": orientation " + std::to_string(o));
      for (const auto& c : check_loops(view, v)) {
        ++loops.checked;
        if (!c.brackets_ok || c.inner_direct != -c.outer_direct ||
            c.inner_direct != c.loop.inner_orientation) {
          fail(loops, at(i, c.loop.first));
        }
      }
      ++bound.checked;
      ContainmentStats st;
      inside_direct(view, v, &st);
      if (st.total() > 2 * view.degree(v)) fail(bound, at(i, v));
    }
    if (positive != 1) {
      fail(closed, "level " + std::to_string(i) + ": " + std::to_string(positive) +
                       " clockwise boundaries");
    }
  }
  std::vector<InvariantResult> out{maps, cache, closed, loops, bound, pixels};
  if (image) out.push_back(stats);
  return out;
}

}  // namespace cpyr
