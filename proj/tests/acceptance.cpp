// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "cpyr/boundary.hpp"
#include "cpyr/containment.hpp"
#include "cpyr/containment_oracle.hpp"
#include "cpyr/map.hpp"
#include "cpyr/relations.hpp"
#include "cpyr/segmentation.hpp"
#include "eager.hpp"
#include "gen.hpp"
#include "raster.hpp"

using namespace cpyr;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Pyramid> random_pyramids(int count) {
  std::vector<Pyramid> out;
  for (int seed = 0; seed < count; ++seed) {
    std::mt19937 rng(static_cast<unsigned>(seed));
    const auto w = static_cast<std::int32_t>(1 + rng() % 8);
    const auto h = static_cast<std::int32_t>(1 + rng() % 8);
    out.push_back(cpyr::testing::random_pyramid(rng, w, h, 12));
  }
  return out;
}

struct PartitionCase {
  LabelImage labels;
  Pyramid pyr;
};

std::vector<PartitionCase> random_partitions(int count) {
  std::vector<PartitionCase> out;
  for (int seed = 0; seed < count; ++seed) {
    std::mt19937 rng(static_cast<unsigned>(10000 + seed));
    const auto w = static_cast<std::int32_t>(4 + rng() % 29);
    const auto h = static_cast<std::int32_t>(4 + rng() % 29);
    LabelImage labels = cpyr::testing::random_labels(rng, w, h);
    Pyramid pyr = build_from_labels(labels);
    out.push_back({std::move(labels), std::move(pyr)});
  }
  return out;
}

void grid_reproduction() {
  double best = 1e9;
  GridMap g;
  for (int k = 0; k < 20; ++k) {
    const auto t0 = Clock::now();
    g = build_grid_map(3, 3);
    best = std::min(best, seconds_since(t0));
  }
  const std::size_t darts = g.map.dart_count();
  const std::size_t pixel = orbit(g.map, g.numbering.vertical(1, 0), Permutation::sigma).size();
  bool owner_ok = true;
  for (Dart d : orbit(g.map, g.numbering.vertical(1, 0), Permutation::sigma)) {
    owner_ok = owner_ok && g.numbering.owner(d) == 0;
  }
  // The dart leaving the top-left image corner.
  const std::size_t corner = orbit(g.map, -g.numbering.horizontal(0, 0), Permutation::phi).size();
  const bool ok = darts == 48 && pixel == 4 && owner_ok && corner == 2 && best < 1e-3;
  report(1, "grid reproduction", ok,
         std::to_string(darts) + " darts, top-left pixel sigma cycle " + std::to_string(pixel) +
             ", top-left corner phi cycle " + std::to_string(corner) + ", build " +
             std::to_string(best * 1e6) + " us");
}

void implicit_equivalence(const std::vector<Pyramid>& pyrs) {
  std::size_t levels = 0, mismatches = 0;
  std::string first;
  for (std::size_t p = 0; p < pyrs.size(); ++p) {
    const Pyramid& pyr = pyrs[p];
    cpyr::testing::EagerMap eager(pyr.base());
    for (int i = 0; i <= pyr.top_level(); ++i) {
      if (i > 0) eager.apply(pyr.state(i), pyr.kernel_darts(i));
      ++levels;
      const std::string d = eager.diff(pyr.reconstruct_level(i));
      if (!d.empty()) {
        ++mismatches;
        if (first.empty()) first = " (pyramid " + std::to_string(p) + " level " + std::to_string(i) + ": " + d + ")";
      }
    }
  }
  report(2, "implicit encoding equivalence", mismatches == 0 && pyrs.size() >= 100,
         std::to_string(pyrs.size()) + " pyramids, " + std::to_string(levels) +
             " levels compared with eager reduction, " + std::to_string(mismatches) +
             " mismatches" + first);
}

void orientation_theorem(const std::vector<Pyramid>& pyrs) {
  std::size_t levels = 0, cycles = 0, bad = 0;
  for (const Pyramid& pyr : pyrs) {
    for (int i = 0; i <= pyr.top_level(); ++i) {
      const LevelView view(pyr, i);
      if (!view.redundant_edge_free()) continue;
      ++levels;
      int positive = 0;
      for (Dart v : view.vertices()) {
        ++cycles;
        const int o = sequence_orientation(view, orbit(view.map(), v, Permutation::sigma), true);
        if (o == 4) ++positive;
        if (o != 4 && o != -4) ++bad;
      }
      if (positive != 1) ++bad;
    }
  }
  report(3, "orientation theorem", bad == 0 && levels > 0,
         std::to_string(levels) + " redundant-edge-free levels, " + std::to_string(cycles) +
             " closed boundaries in {-4,+4}, one +4 per level, " + std::to_string(bad) +
             " exceptions");
}

struct LoopSweep {
  std::size_t loops = 0, prop1_bad = 0, prop2_bad = 0, vertices = 0, bound_bad = 0;
  std::size_t worst_visits = 0, worst_degree = 0;

  void run(const LevelView& view) {
    if (!view.redundant_edge_free()) return;
    for (Dart v : view.vertices()) {
      ++vertices;
      for (const auto& c : check_loops(view, v)) {
        ++loops;
        const bool four = (c.inner_direct == 4 || c.inner_direct == -4);
        if (!c.brackets_ok || c.inner_direct != -c.outer_direct || !four) ++prop1_bad;
        if (c.inner_direct != c.loop.inner_orientation) ++prop2_bad;
      }
      ContainmentStats st;
      inside_direct(view, v, &st);
      if (st.total() > 2 * view.degree(v)) ++bound_bad;
      if (st.total() * std::max<std::size_t>(worst_degree, 1) >=
          worst_visits * std::max<std::size_t>(view.degree(v), 1)) {
        worst_visits = st.total();
        worst_degree = view.degree(v);
      }
    }
  }
};

void containment_equivalence(const std::vector<PartitionCase>& cases) {
  const auto t0 = Clock::now();
  std::size_t pairs = 0, disagree = 0, positives = 0;
  for (const auto& c : cases) {
    const LevelView view(c.pyr, c.pyr.top_level());
    const Partition part = partition_at(view);
    const auto n = part.region_count();
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<char> mine(n, 0);
      for (Dart v : inside_all(view, part.regions[a])) {
        mine[static_cast<std::size_t>(part.region_of(view, v))] = 1;
      }
      std::vector<char> oracle(n, 0);
      for (auto b : flood_fill_inside_oracle(part.labels, static_cast<std::int32_t>(a))) {
        oracle[static_cast<std::size_t>(b)] = 1;
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        ++pairs;
        positives += oracle[b];
        // contains(a, b) must also agree pairwise, not only through the closure.
        const bool direct = contains(view, part.regions[a], part.regions[b]);
        if (mine[b] != oracle[b] || direct != static_cast<bool>(oracle[b])) ++disagree;
      }
    }
  }
  const double t = seconds_since(t0);
  report(6, "containment oracle equivalence", disagree == 0 && cases.size() >= 100 && t < 60,
         std::to_string(cases.size()) + " partitions up to 32x32, " + std::to_string(pairs) +
             " ordered pairs (" + std::to_string(positives) + " contained), " +
             std::to_string(disagree) + " disagreements, " + std::to_string(t) + " s");
}

void cache_correctness(const std::vector<Pyramid>& pyrs) {
  std::size_t darts = 0, bad = 0;
  for (const Pyramid& pyr : pyrs) {
    // Replaying a prefix of the kernels gives the cache as it stood at each level.
    Pyramid replay(pyr.width(), pyr.height());
    for (int i = 0; i <= pyr.top_level(); ++i) {
      if (i > 0) replay.apply_kernel({pyr.state(i), pyr.kernel_darts(i)});
      for (Dart d : replay.top().darts()) {
        ++darts;
        if (replay.cached_orientation(d) != dart_orientation(pyr, i, d)) ++bad;
      }
    }
  }
  report(7, "orientation cache correctness", bad == 0,
         std::to_string(darts) + " (level, dart) pairs, cached == recomputed, " +
             std::to_string(bad) + " mismatches");
}

void meets_each_correctness(const std::vector<PartitionCase>& cases) {
  std::size_t pairs = 0, bad = 0, multi = 0;
  auto check = [&](const Pyramid& pyr) {
    const LevelView view(pyr, pyr.top_level());
    const Partition part = partition_at(view);
    for (const auto& [a, b] : rag_export(view).edges) {
      const int ra = part.region_of(view, a), rb = part.region_of(view, b);
      const auto got = meets_each(view, a, b).size();
      const auto want = static_cast<std::size_t>(
          cpyr::testing::shared_border_components(part.labels, ra, rb));
      ++pairs;
      multi += want > 1;
      if (got != want) ++bad;
    }
  };
  for (const auto& c : cases) check(c.pyr);
  check(build_from_labels(cpyr::testing::c_shape()));
  report(8, "meets_each correctness", bad == 0 && pairs > 0,
         std::to_string(pairs) + " adjacent pairs (" + std::to_string(multi) +
             " with several border pieces), segment count == raster crack components, " +
             std::to_string(bad) + " mismatches");
}

void roadsign_pipeline() {
  const Image arrow = cpyr::testing::arrow_sign();
  const Pyramid pa = segment_image(arrow, 24);
  const LevelView va(pa, pa.top_level());
  const Partition parta = partition_at(va);
  const auto ra = roadsign_extract(va, parta, region_stats(parta, arrow), {});
  const auto truth = cpyr::testing::white_inside_blue(arrow, parta);
  const bool arrow_ok = ra.found && ra.symbol_regions == truth && !truth.empty();

  const Image flag = cpyr::testing::flag_sign();
  const Pyramid pf = segment_image(flag, 24);
  const LevelView vf(pf, pf.top_level());
  const Partition partf = partition_at(vf);
  const auto rf = roadsign_extract(vf, partf, region_stats(partf, flag), {});
  const bool same_rag = rag_export(va).edges.size() == rag_export(vf).edges.size() &&
                        rag_export(va).vertices.size() == rag_export(vf).vertices.size();
  const bool flag_ok = !rf.found && rf.message == "no sign found";

  report(9, "road-sign pipeline", arrow_ok && flag_ok && same_rag,
         std::string("arrow: ") + (ra.found ? std::to_string(ra.symbol_regions.size()) : "no") +
             " symbol region(s), " + (arrow_ok ? "matches" : "differs from") +
             " ground truth; flag: " + (rf.found ? "sign reported" : rf.message) +
             "; identical RAGs: " + (same_rag ? "yes" : "no"));
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  grid_reproduction();

  const auto pyrs = random_pyramids(120);
  implicit_equivalence(pyrs);
  orientation_theorem(pyrs);

  const auto cases = random_partitions(120);
  LoopSweep sweep;
  for (const Pyramid& pyr : pyrs) {
    for (int i = 0; i <= pyr.top_level(); ++i) sweep.run(LevelView(pyr, i));
  }
  for (const auto& c : cases) sweep.run(LevelView(c.pyr, c.pyr.top_level()));
  report(4, "self-loop proposition (C1 = -C2, brackets)", sweep.prop1_bad == 0 && sweep.loops > 0,
         std::to_string(sweep.loops) + " self-loops, " + std::to_string(sweep.prop1_bad) +
             " exceptions");
  report(5, "constant-time C1 orientation", sweep.prop2_bad == 0 && sweep.loops > 0,
         std::to_string(sweep.loops) + " self-loops, prefix formula == direct sum, " +
             std::to_string(sweep.prop2_bad) + " mismatches");

  containment_equivalence(cases);
  cache_correctness(pyrs);
  meets_each_correctness(cases);
  roadsign_pipeline();
  report(10, "containment work bound", sweep.bound_bad == 0 && sweep.vertices > 0,
         std::to_string(sweep.vertices) + " vertices queried, visits <= 2 * degree, worst " +
             std::to_string(sweep.worst_visits) + " visits at degree " +
             std::to_string(sweep.worst_degree) + ", " + std::to_string(sweep.bound_bad) +
             " violations");

  std::printf("%d of 10 criteria failed, %.2f s\n", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
