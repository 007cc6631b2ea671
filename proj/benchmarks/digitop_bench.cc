// Copyright 2026 The digitop Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "digitop/io.h"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "digitop/grid_image.h"
#include "digitop/limiting.h"
#include "digitop/map_search.h"
#include "digitop/metrics.h"
#include "digitop/subset_mask.h"

namespace digitop {
namespace {

void BM_CycleSelfMaps(benchmark::State& state) {
  const CycleImage cycle = BuildCycle(static_cast<int>(state.range(0)));
  std::int64_t count = 0;
  for (auto _ : state) {
    count = 0;
    EnumerateContinuousSelfMaps(cycle.image, {}, [&](std::span<const int>) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
  state.counters["maps"] = static_cast<double>(count);
}
BENCHMARK(BM_CycleSelfMaps)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BoxCornerLimiting(benchmark::State& state) {
  const DigitalImage box = BuildBox({{0, 3}, {0, 2}}, 2);
  const int m = static_cast<int>(state.range(0));
  SearchLimits limits;
  limits.threads = static_cast<int>(state.range(1));
  std::int64_t nodes = 0;
  for (auto _ : state) {
    const LimitingVerdict v = IsLimiting({box, Corners(box), m, m}, limits);
    nodes = v.nodes_explored;
    benchmark::DoNotOptimize(v.verdict);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_BoxCornerLimiting)
    ->ArgsProduct({{1, 2, 3}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_MetricOfContinuity(benchmark::State& state) {
  const int v = static_cast<int>(state.range(0));
  const CycleImage cycle = BuildCycle(v);
  std::vector<int> arc;
  for (int i = 0; i + 1 < v; ++i) arc.push_back(i);
  const SubsetMask all = SubsetMask::All(v);
  const SubsetMask part = SubsetMask::FromIndices(v, arc);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MetricOfContinuity(cycle.image, all, part));
  }
}
BENCHMARK(BM_MetricOfContinuity)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Hausdorff(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const DigitalImage box = BuildBox({{0, side}, {0, side}}, 1);
  const SubsetMask corners = Corners(box);
  const SubsetMask boundary = Boundary(box);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Hausdorff(box, corners, boundary));
  }
}
BENCHMARK(BM_Hausdorff)->Arg(4)->Arg(8);

}  // namespace
}  // namespace digitop

BENCHMARK_MAIN();
