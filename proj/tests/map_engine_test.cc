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

#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "digitop/error.h"
#include "digitop/grid_image.h"
#include "digitop/map_search.h"
#include "digitop/map_table.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace digitop {
namespace {

using testing::Table;

std::vector<DigitalImage> AllConnectedUpTo(int n) {
  std::vector<DigitalImage> out;
  for (int k = 1; k <= n; ++k) {
    for (DigitalImage& g : testing::ConnectedGraphs(k)) out.push_back(g);
  }
  return out;
}

std::set<Table> EngineSelfMaps(const DigitalImage& image,
                               const SearchLimits& limits = {}) {
  std::set<Table> out;
  EnumerateContinuousSelfMaps(image, limits, [&](std::span<const int> t) {
    out.emplace(t.begin(), t.end());
    return true;
  });
  return out;
}

TEST(MapTableTest, ValidatesTables) {
  const DigitalImage line = BuildBox({{0, 2}}, 1);
  EXPECT_THROW(MapTable(line, {0, 1}), Error);
  EXPECT_THROW(MapTable(line, {0, 1, 3}), Error);
  const MapTable id = MapTable::Identity(line);
  EXPECT_TRUE(id.IsSelfMap());
  EXPECT_EQ(Displacement(id), 0);
  EXPECT_EQ(Displacement(MapTable::Constant(line, 0)), 2);
}

TEST(MapTableTest, ContinuityCriterionOnSmallLine) {
  const DigitalImage line = BuildBox({{0, 2}}, 1);
  EXPECT_TRUE(IsContinuous(MapTable(line, {0, 0, 1})));
  EXPECT_TRUE(IsContinuous(MapTable(line, {2, 1, 0})));
  EXPECT_FALSE(IsContinuous(MapTable(line, {0, 2, 2})));
}

TEST(MapTableTest, ComposeChecksDomains) {
  const DigitalImage a = BuildBox({{0, 2}}, 1);
  const DigitalImage b = BuildBox({{0, 3}}, 1);
  const MapTable f(a, b, {0, 1, 2});
  const MapTable g(b, a, {0, 1, 2, 2});
  EXPECT_EQ(Compose(g, f), MapTable::Identity(a));
  try {
    Compose(f, f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomainMismatch);
  }
}

TEST(MapTableTest, FixedPointsImageAndRetraction) {
  const DigitalImage line = BuildBox({{0, 3}}, 1);
  const MapTable f(line, {1, 1, 2, 2});
  EXPECT_THAT(FixedPoints(f).Indices(), ::testing::ElementsAre(1, 2));
  EXPECT_THAT(ImageOf(f).Indices(), ::testing::ElementsAre(1, 2));
  EXPECT_TRUE(IsRetraction(f));
  EXPECT_FALSE(IsRetraction(MapTable(line, {1, 0, 2, 2})));
  EXPECT_TRUE(IsNMap(f, 1));
  EXPECT_FALSE(IsNMap(f, 0));
  EXPECT_EQ(DisplacementOn(f, SubsetMask::FromIndices(4, {1, 2})), 0);
  EXPECT_EQ(DisplacementOn(f, SubsetMask(4)), 0);
  EXPECT_TRUE(IsNMapOn(f, SubsetMask::FromIndices(4, {0}), 1));
}

TEST(ContinuityTest, EdgeCriterionAgreesWithConnectednessDefinition) {
  std::vector<DigitalImage> images = AllConnectedUpTo(4);
  for (const auto& [name, image] : testing::SmallFixtures()) {
    if (image.size() <= 6) images.push_back(image);
  }
  images.push_back(BuildBox({{0, 2}, {0, 1}}, 2));
  images.push_back(BuildFromPoints(2, 2, {{{0, 0}}, {{1, 1}}, {{2, 0}},
                                          {{2, 1}}, {{0, 1}}}));
  for (const DigitalImage& image : images) {
    testing::FilterAllSelfMaps(image, [&](const Table& f) {
      EXPECT_EQ(IsContinuous(MapTable(image, f)),
                testing::ContinuousByConnectedness(image, f));
      return false;
    });
  }
}

TEST(ContinuityTest, ConnectednessDefinitionOnSevenPoints) {
  const DigitalImage spider =
      BuildExplicit(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 6);
  int continuous = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    Table f(7);
    for (int& y : f) y = pick(rng);
    const bool expected = testing::ContinuousByConnectedness(spider, f);
    continuous += expected;
    ASSERT_EQ(IsContinuous(MapTable(spider, f)), expected);
  }
  for (const Table& f : testing::BruteContinuousSelfMaps(BuildCycle(7).image)) {
    ASSERT_TRUE(testing::ContinuousByConnectedness(BuildCycle(7).image, f));
  }
  EXPECT_GT(continuous, 0);
}

TEST(EnumerationTest, MatchesUnprunedFilterOnAllSmallGraphs) {
  for (const DigitalImage& image : AllConnectedUpTo(4)) {
    const auto brute = testing::BruteContinuousSelfMaps(image);
    const std::set<Table> expected(brute.begin(), brute.end());
    EXPECT_EQ(EngineSelfMaps(image), expected);
  }
}

TEST(EnumerationTest, MatchesUnprunedFilterOnFixtures) {
  for (const auto& [name, image] : testing::SmallFixtures()) {
    if (image.size() > 7) continue;
    const auto brute = testing::BruteContinuousSelfMaps(image);
    const std::set<Table> expected(brute.begin(), brute.end());
    EXPECT_EQ(EngineSelfMaps(image), expected) << name;
  }
}

TEST(EnumerationTest, CountsAreFrozen) {
  EXPECT_EQ(EngineSelfMaps(BuildCycle(4).image).size(), 84u);
  EXPECT_EQ(EngineSelfMaps(BuildCycle(8).image).size(), 8872u);
  EXPECT_EQ(EngineSelfMaps(BuildBox({{0, 2}, {0, 2}}, 1)).size(), 63997u);
}

TEST(EnumerationTest, MapsBetweenDifferentImages) {
  const DigitalImage from = BuildBox({{0, 2}}, 1);
  const DigitalImage to = BuildCycle(4).image;
  const auto maps = CollectContinuousMaps(from, to, {}, {});
  std::set<Table> expected;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        if (to.AdjacentOrEqual(a, b) && to.AdjacentOrEqual(b, c)) {
          expected.insert({a, b, c});
        }
      }
    }
  }
  EXPECT_EQ(std::set<Table>(maps.begin(), maps.end()), expected);
}

TEST(EnumerationTest, RespectsAllowedSets) {
  const DigitalImage line = BuildBox({{0, 3}}, 1);
  MapConstraints constraints;
  for (int x = 0; x < 4; ++x) constraints.allowed.push_back(NStar(line, x, 0));
  const auto maps = CollectContinuousMaps(line, line, constraints, {});
  ASSERT_EQ(maps.size(), 1u);
  EXPECT_EQ(maps[0], (Table{0, 1, 2, 3}));
}

TEST(EnumerationTest, EnforcesVertexAndMapBudgets) {
  const DigitalImage big = BuildBox({{0, 4}, {0, 4}}, 1);
  SearchLimits limits;
  limits.max_vertices = 16;
  EXPECT_THROW(ContinuousSelfMaps(big, limits), Error);
  limits.max_vertices = 25;
  limits.max_nodes = 1000;
  try {
    CollectContinuousMaps(big, big, {}, limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(EnumerationTest, StopsWhenVisitorDeclines) {
  int seen = 0;
  const SearchStats stats = EnumerateContinuousSelfMaps(
      BuildCycle(6).image, {}, [&](std::span<const int>) {
        return ++seen < 5;
      });
  EXPECT_EQ(seen, 5);
  EXPECT_EQ(stats.status, SearchStatus::kStopped);
}

TEST(CounterexampleTest, MatchesBruteForceOnSmallImages) {
  for (const DigitalImage& image : AllConnectedUpTo(4)) {
    const int n = image.size();
    for (int bits = 0; bits < (1 << n); ++bits) {
      SubsetMask a(n);
      for (int x = 0; x < n; ++x) a.set(x, bits >> x & 1);
      for (int m = 0; m <= 1; ++m) {
        for (int k = 0; k <= 2; ++k) {
          std::set<Table> engine;
          ForEachCounterexample(image, a, m, k, {}, [&](std::span<const int> t) {
            engine.emplace(t.begin(), t.end());
            return true;
          });
          ASSERT_EQ(engine, testing::BruteCounterexamples(image, a, m, k));
        }
      }
    }
  }
}

TEST(CounterexampleTest, FirstWitnessIsStableAndValid) {
  const DigitalImage box = BuildBox({{0, 2}, {0, 2}}, 2);
  const SubsetMask corners = Corners(box);
  const CounterexampleResult first = SearchCounterexample(box, corners, 1, 1);
  ASSERT_EQ(first.status, SearchStatus::kStopped);
  ASSERT_TRUE(first.witness.has_value());
  EXPECT_TRUE(IsContinuous(*first.witness));
  EXPECT_TRUE(IsNMapOn(*first.witness, corners, 1));
  EXPECT_FALSE(IsNMap(*first.witness, 1));
  const CounterexampleResult again = SearchCounterexample(box, corners, 1, 1);
  EXPECT_EQ(again.witness, first.witness);
  EXPECT_EQ(again.nodes, first.nodes);
}

TEST(CounterexampleTest, ReportsBudgetExhaustion) {
  const DigitalImage box = BuildBox({{0, 2}, {0, 2}}, 2);
  SearchLimits limits;
  limits.max_nodes = 3;
  const CounterexampleResult r =
      SearchCounterexample(box, SubsetMask(9), 0, 3, limits);
  EXPECT_EQ(r.status, SearchStatus::kBudgetExceeded);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_EQ(r.nodes, 4);
}

TEST(ParallelTest, ResultsDoNotDependOnThreadCount) {
  const DigitalImage box = BuildBox({{0, 2}, {0, 2}}, 2);
  const CycleImage c9 = BuildCycle(9);
  for (int threads : {2, 3, 5}) {
    SearchLimits serial;
    SearchLimits parallel;
    parallel.threads = threads;
    for (int m = 0; m <= 1; ++m) {
      const auto s = SearchCounterexample(box, Corners(box), m, 1, serial);
      const auto p = SearchCounterexample(box, Corners(box), m, 1, parallel);
      EXPECT_EQ(s.status, p.status);
      EXPECT_EQ(s.witness, p.witness);
      EXPECT_EQ(s.nodes, p.nodes);
    }
    const auto sc = SearchCounterexample(c9.image, SubsetMask::FromIndices(
                                                       9, {0, 3, 6}),
                                         1, 1, serial);
    const auto pc = SearchCounterexample(c9.image, SubsetMask::FromIndices(
                                                       9, {0, 3, 6}),
                                         1, 1, parallel);
    EXPECT_EQ(sc.witness, pc.witness);
    EXPECT_EQ(sc.nodes, pc.nodes);
    EXPECT_EQ(CollectContinuousMaps(box, box, {}, serial),
              CollectContinuousMaps(box, box, {}, parallel));
    serial.max_nodes = parallel.max_nodes = 500;
    const auto sb = SearchCounterexample(box, SubsetMask(9), 0, 3, serial);
    const auto pb = SearchCounterexample(box, SubsetMask(9), 0, 3, parallel);
    EXPECT_EQ(sb.status, pb.status);
    EXPECT_EQ(sb.nodes, pb.nodes);
  }
}

TEST(PropertyTest, CompositionIsContinuousAndDisplacementAdds) {
  std::mt19937 rng(42);
  for (const auto& [name, image] : testing::SmallFixtures()) {
    if (image.size() > 8) continue;
    const std::vector<MapTable> maps = ContinuousSelfMaps(image);
    std::uniform_int_distribution<size_t> pick(0, maps.size() - 1);
    for (int trial = 0; trial < 400; ++trial) {
      const MapTable& f1 = maps[pick(rng)];
      const MapTable& f2 = maps[pick(rng)];
      const MapTable g = Compose(f2, f1);
      ASSERT_TRUE(IsContinuous(g)) << name;
      EXPECT_LE(Displacement(g), Displacement(f1) + Displacement(f2)) << name;
    }
  }
}

TEST(PropertyTest, UniqueShortestPathsBetweenFixedPointsAreFixed) {
  for (const auto& [name, image] : testing::SmallFixtures()) {
    if (image.size() > 8) continue;
    std::map<std::pair<int, int>, std::optional<std::vector<int>>> paths;
    for (int x = 0; x < image.size(); ++x) {
      for (int y = x + 1; y < image.size(); ++y) {
        paths[{x, y}] = UniqueShortestPath(image, x, y);
      }
    }
    EnumerateContinuousSelfMaps(image, {}, [&](std::span<const int> f) {
      for (const auto& [ends, path] : paths) {
        if (!path || f[ends.first] != ends.first ||
            f[ends.second] != ends.second) {
          continue;
        }
        for (int p : *path) {
          if (f[p] != p) {
            ADD_FAILURE() << name << ": path vertex " << p << " moved";
            return false;
          }
        }
      }
      return true;
    });
  }
}

TEST(BfsOrderTest, StartsFromRootsAndCoversTheImage) {
  const DigitalImage line = BuildBox({{0, 4}}, 1);
  const std::vector<int> roots{2};
  EXPECT_THAT(BfsOrder(line, roots), ::testing::ElementsAre(2, 1, 3, 0, 4));
  const std::vector<int> none;
  EXPECT_THAT(BfsOrder(line, none), ::testing::ElementsAre(0, 1, 2, 3, 4));
}

}  // namespace
}  // namespace digitop
