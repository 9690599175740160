#include <benchmark/benchmark.h>

#include <random>

#include "cpyr/containment.hpp"
#include "cpyr/segmentation.hpp"

using namespace cpyr;

namespace {

// Nested squares: every ring is a region holding the next one.
LabelImage rings(std::int32_t size) {
  LabelImage img{size, size, std::vector<std::int32_t>(static_cast<std::size_t>(size) * size)};
  for (std::int32_t y = 0; y < size; ++y)
    for (std::int32_t x = 0; x < size; ++x)
      img.labels[static_cast<std::size_t>(y) * size + x] =
          std::min({x, y, size - 1 - x, size - 1 - y}) / 3;
  return img;
}

Image noise(std::int32_t size) {
  Image img(size, size, 1);
  std::mt19937 rng(1);
  for (auto& v : img.data) v = static_cast<std::uint8_t>(rng() % 8 * 32);
  return img;
}

void BM_GridMap(benchmark::State& state) {
  const auto n = static_cast<std::int32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_grid_map(n, n));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_GridMap)->Arg(32)->Arg(128)->Arg(512);

void BM_BuildFromLabels(benchmark::State& state) {
  const LabelImage labels = rings(static_cast<std::int32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_from_labels(labels));
}
BENCHMARK(BM_BuildFromLabels)->Arg(32)->Arg(128);

void BM_ReconstructLevel(benchmark::State& state) {
  const Pyramid pyr = build_from_labels(rings(static_cast<std::int32_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(pyr.reconstruct_level(pyr.top_level()));
}
BENCHMARK(BM_ReconstructLevel)->Arg(32)->Arg(128);

void BM_InsideDirect(benchmark::State& state) {
  const Pyramid pyr = build_from_labels(rings(static_cast<std::int32_t>(state.range(0))));
  const LevelView view(pyr, pyr.top_level());
  for (auto _ : state) {
    for (Dart v : view.vertices()) benchmark::DoNotOptimize(inside_direct(view, v));
  }
}
BENCHMARK(BM_InsideDirect)->Arg(32)->Arg(128);

void BM_SegmentImage(benchmark::State& state) {
  const Image img = noise(static_cast<std::int32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(segment_image(img, 40));
}
BENCHMARK(BM_SegmentImage)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
