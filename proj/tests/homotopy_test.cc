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

#include "digitop/homotopy.h"

#include <map>
#include <vector>

#include "digitop/cycle_maps.h"
#include "digitop/error.h"
#include "digitop/map_search.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace digitop {
namespace {

TEST(HomotopyTest, StepRequiresPointwiseAdjacency) {
  const DigitalImage line = BuildBox({{0, 2}}, 1);
  EXPECT_TRUE(IsHomotopyStep(MapTable(line, {0, 1, 2}),
                             MapTable(line, {1, 1, 2})));
  EXPECT_FALSE(IsHomotopyStep(MapTable(line, {0, 1, 2}),
                              MapTable(line, {2, 1, 2})));
}

TEST(HomotopyTest, IntervalsAreContractible) {
  const DigitalImage line = BuildBox({{0, 3}}, 1);
  EXPECT_TRUE(IsHomotopic(MapTable::Identity(line),
                          MapTable::Constant(line, 2)));
  EXPECT_EQ(HomotopyClass(MapTable::Identity(line)).size(),
            ContinuousSelfMaps(line).size());
  EXPECT_FALSE(IsRigid(line));
}

TEST(HomotopyTest, CyclesRotateIntoThemselves) {
  for (int v = 4; v <= 8; ++v) {
    const CycleImage cycle = BuildCycle(v);
    EXPECT_FALSE(IsRigid(cycle.image)) << v;
    EXPECT_TRUE(IsHomotopic(MapTable::Identity(cycle.image),
                            Rotation(cycle, 1)))
        << v;
  }
  const CycleImage c6 = BuildCycle(6);
  EXPECT_FALSE(IsHomotopic(MapTable::Identity(c6.image),
                           MapTable::Constant(c6.image, 0)));
  EXPECT_FALSE(IsHomotopic(MapTable::Identity(c6.image), Flip(c6)));
}

DigitalImage RigidGraph() {
  return BuildExplicit(8, {{0, 3}, {0, 4}, {1, 2}, {1, 5}, {2, 4}, {2, 6},
                           {3, 6}, {5, 7}, {6, 7}});
}

TEST(HomotopyTest, FindsRigidGraph) {
  const DigitalImage rigid = RigidGraph();
  EXPECT_TRUE(IsRigid(rigid));
  EXPECT_TRUE(OnlyIdentityIsOneMap(rigid));
  const auto one_maps = testing::FilterAllSelfMaps(
      rigid, [&](const testing::Table& f) {
        for (int x = 0; x < rigid.size(); ++x) {
          if (!rigid.AdjacentOrEqual(x, f[x])) return false;
        }
        return testing::ContinuousByEdges(rigid, f);
      });
  ASSERT_EQ(one_maps.size(), 1u);
  EXPECT_EQ(MapTable(rigid, one_maps[0]), MapTable::Identity(rigid));
}

TEST(HomotopyTest, RigidityImpliesOnlyIdentityOneMap) {
  for (int n = 1; n <= 4; ++n) {
    for (const DigitalImage& g : testing::ConnectedGraphs(n)) {
      if (IsRigid(g)) {
        EXPECT_TRUE(OnlyIdentityIsOneMap(g));
      }
    }
  }
}

TEST(HomotopyTest, OneMapsOfSquareAreNotOnlyIdentity) {
  const DigitalImage square = BuildBox({{0, 1}, {0, 1}}, 1);
  EXPECT_FALSE(OnlyIdentityIsOneMap(square));
}

TEST(HomotopyTest, ReachabilityIsAnEquivalenceRelation) {
  for (const DigitalImage& image :
       {BuildBox({{0, 2}}, 1), BuildCycle(4).image, BuildCycle(5).image,
        BuildExplicit(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})}) {
    const std::vector<MapTable> maps = ContinuousSelfMaps(image);
    std::map<std::vector<int>, int> klass;
    int next = 0;
    for (const MapTable& f : maps) {
      const std::vector<int> key(f.table().begin(), f.table().end());
      if (klass.count(key)) continue;
      for (const MapTable& g : HomotopyClass(f)) {
        const std::vector<int> member(g.table().begin(), g.table().end());
        ASSERT_EQ(klass.count(member), 0u);
        klass[member] = next;
      }
      ++next;
    }
    ASSERT_EQ(klass.size(), maps.size());
    for (size_t i = 0; i < maps.size(); i += 7) {
      for (size_t j = 0; j < maps.size(); j += 5) {
        const auto ki = klass[{maps[i].table().begin(), maps[i].table().end()}];
        const auto kj = klass[{maps[j].table().begin(), maps[j].table().end()}];
        EXPECT_EQ(IsHomotopic(maps[i], maps[j]), ki == kj);
        EXPECT_EQ(IsHomotopic(maps[j], maps[i]), ki == kj);
      }
      EXPECT_TRUE(IsHomotopic(maps[i], maps[i]));
    }
  }
}

TEST(HomotopyTest, EnforcesMapBudget) {
  const DigitalImage box = BuildBox({{0, 2}, {0, 2}}, 1);
  SearchLimits limits;
  limits.max_maps = 10;
  try {
    HomotopyClass(MapTable::Identity(box), limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

}  // namespace
}  // namespace digitop
