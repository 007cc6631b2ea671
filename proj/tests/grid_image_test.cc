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

#include "digitop/grid_image.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "digitop/error.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace digitop {
namespace {

using ::testing::ElementsAre;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(BuildBoxTest, OrdersPointsLexicographically) {
  const DigitalImage box = BuildBox({{0, 1}, {0, 2}}, 1);
  ASSERT_EQ(box.size(), 6);
  EXPECT_EQ(box.Label(0), "(0,0)");
  EXPECT_EQ(box.Label(1), "(0,1)");
  EXPECT_EQ(box.Label(3), "(1,0)");
  EXPECT_EQ(box.IndexOf({{1, 2}}), 5);
  EXPECT_EQ(box.IndexOf({{2, 2}}), std::nullopt);
}

TEST(BuildBoxTest, C1AndC2DifferOnDiagonals) {
  const DigitalImage c1 = BuildBox({{0, 2}, {0, 2}}, 1);
  const DigitalImage c2 = BuildBox({{0, 2}, {0, 2}}, 2);
  EXPECT_EQ(c1.edge_count(), 12);
  EXPECT_EQ(c2.edge_count(), 20);
  const int origin = *c1.IndexOf({{0, 0}});
  const int diagonal = *c1.IndexOf({{1, 1}});
  EXPECT_FALSE(c1.Adjacent(origin, diagonal));
  EXPECT_TRUE(c2.Adjacent(origin, diagonal));
  EXPECT_EQ(c2.degree(diagonal), 8);
}

TEST(BuildBoxTest, RejectsBadAdjacencyAndOversizedImages) {
  EXPECT_EQ(CodeOf([] { BuildBox({{0, 2}}, 2); }), ErrorCode::kBadAdjacency);
  EXPECT_EQ(CodeOf([] { BuildBox({{0, 2}}, 0); }), ErrorCode::kBadAdjacency);
  EXPECT_EQ(CodeOf([] { BuildBox({{0, 99}, {0, 99}}, 1, {.max_points = 100}); }),
            ErrorCode::kBudgetExceeded);
}

TEST(BuildFromPointsTest, RejectsDuplicatesAndMixedDimensions) {
  EXPECT_EQ(CodeOf([] { BuildFromPoints(2, 1, {{{0, 0}}, {{0, 0}}}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { BuildFromPoints(2, 1, {{{0, 0}}, {{0}}}); }),
            ErrorCode::kInvalidArgument);
}

TEST(BuildFromPointsTest, EdgesMatchPairwiseDefinitionOnRandomImages) {
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 300; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 3);
    const int u = 1 + static_cast<int>(rng() % dim);
    std::set<Point> chosen;
    const int capacity = dim == 1 ? 4 : dim == 2 ? 16 : 64;
    const int want = 1 + static_cast<int>(rng() % std::min(20, capacity));
    while (static_cast<int>(chosen.size()) < want) {
      Point p;
      for (int k = 0; k < dim; ++k) {
        p.coords.push_back(static_cast<int>(rng() % 4));
      }
      chosen.insert(p);
    }
    std::vector<Point> points(chosen.begin(), chosen.end());
    const DigitalImage image = BuildFromPoints(dim, u, points);
    ASSERT_EQ(testing::EdgeSet(image), testing::DirectCuEdges(points, u))
        << "dim " << dim << " u " << u << " trial " << trial;
  }
}

TEST(BuildCycleTest, AbstractCycleIsTwoRegularWithHalfDiameter) {
  for (int v = 4; v <= 20; ++v) {
    const CycleImage cycle = BuildCycle(v);
    ASSERT_EQ(cycle.image.size(), v);
    for (int x = 0; x < v; ++x) {
      EXPECT_EQ(cycle.image.degree(x), 2);
      EXPECT_TRUE(cycle.image.Adjacent(x, (x + 1) % v));
    }
    EXPECT_TRUE(cycle.image.connected());
    EXPECT_EQ(Diameter(cycle.image), v / 2);
  }
  EXPECT_EQ(CodeOf([] { BuildCycle(3); }), ErrorCode::kBadCycleLength);
}

TEST(BuildCycleTest, GridCycleFollowsTheRectangleBoundary) {
  for (int v : {4, 8, 10, 12}) {
    const CycleImage cycle = BuildGridCycle(v);
    ASSERT_EQ(cycle.indexing.length(), v);
    for (int i = 0; i < v; ++i) {
      EXPECT_TRUE(cycle.image.Adjacent(cycle.indexing.order[i],
                                       cycle.indexing.order[(i + 1) % v]));
    }
    EXPECT_EQ(cycle.image.edge_count(), v);
  }
  EXPECT_EQ(CodeOf([] { BuildGridCycle(6); }), ErrorCode::kBadCycleLength);
  EXPECT_EQ(CodeOf([] { BuildGridCycle(9); }), ErrorCode::kBadCycleLength);
}

TEST(BuildExplicitTest, RejectsLoopsAndOutOfRangeEdges) {
  EXPECT_EQ(CodeOf([] { BuildExplicit(3, {{0, 0}}); }), ErrorCode::kBadEdge);
  EXPECT_EQ(CodeOf([] { BuildExplicit(3, {{0, 3}}); }), ErrorCode::kBadEdge);
  const DigitalImage path = BuildExplicit(3, {{0, 1}, {2, 1}, {1, 0}});
  EXPECT_EQ(path.edge_count(), 2);
  EXPECT_EQ(path.Label(2), "2");
  EXPECT_EQ(CodeOf([&] { path.point(0); }), ErrorCode::kNotEmbedded);
}

TEST(BuildProductTest, NormalProductOfIntervalsIsTheCuBox) {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const std::vector<DigitalImage> factors{BuildBox({{0, a}}, 1),
                                              BuildBox({{0, b}}, 1)};
      for (int u = 1; u <= 2; ++u) {
        const DigitalImage product = BuildProduct(factors, u);
        const DigitalImage box = BuildBox({{0, a}, {0, b}}, u);
        EXPECT_EQ(testing::EdgeSet(product), testing::EdgeSet(box));
        ASSERT_NE(product.product(), nullptr);
        EXPECT_EQ(product.adjacency().ToString(),
                  "NP_" + std::to_string(u) + "(c1,c1)");
      }
    }
  }
  const std::vector<DigitalImage> three{BuildBox({{0, 1}}, 1),
                                        BuildBox({{0, 2}}, 1),
                                        BuildBox({{0, 1}}, 1)};
  EXPECT_EQ(testing::EdgeSet(BuildProduct(three, 3)),
            testing::EdgeSet(BuildBox({{0, 1}, {0, 2}, {0, 1}}, 3)));
}

TEST(BuildProductTest, ProjectsSubsetsOntoFactors) {
  const std::vector<DigitalImage> factors{BuildCycle(5).image,
                                          BuildBox({{0, 2}}, 1)};
  const DigitalImage product = BuildProduct(factors, 1);
  ASSERT_EQ(product.size(), 15);
  EXPECT_FALSE(product.embedded());
  const SubsetMask a = SubsetMask::FromIndices(15, {0, 4, 14});
  EXPECT_THAT(ProjectToFactor(product, a, 0).Indices(), ElementsAre(0, 1, 4));
  EXPECT_THAT(ProjectToFactor(product, a, 1).Indices(), ElementsAre(0, 1, 2));
  EXPECT_EQ(CodeOf([] {
              const DigitalImage box = BuildBox({{0, 1}}, 1);
              ProjectToFactor(box, SubsetMask(2), 0);
            }),
            ErrorCode::kNotAProduct);
}

TEST(MetricTest, MatchesFloydWarshallAndSatisfiesAxioms) {
  for (const auto& [name, image] : testing::SmallFixtures()) {
    const auto d = testing::FloydWarshall(image);
    const MetricCache& metric = image.metric();
    for (int x = 0; x < image.size(); ++x) {
      for (int y = 0; y < image.size(); ++y) {
        ASSERT_EQ(metric(x, y), d[x][y]) << name;
        EXPECT_EQ(metric(x, y) == 1, image.Adjacent(x, y)) << name;
        for (int z = 0; z < image.size(); ++z) {
          EXPECT_LE(metric(x, z), metric(x, y) + metric(y, z)) << name;
        }
      }
    }
  }
}

TEST(MetricTest, MarksCrossComponentPairsInfinite) {
  const DigitalImage two = BuildFromPoints(1, 1, {{{0}}, {{1}}, {{5}}});
  EXPECT_FALSE(two.connected());
  EXPECT_EQ(two.metric().component_count(), 2);
  EXPECT_FALSE(two.metric().finite(0, 2));
  EXPECT_EQ(two.metric()(0, 2), MetricCache::kInfinity);
  EXPECT_EQ(CodeOf([&] { Diameter(two); }), ErrorCode::kDisconnected);
}

TEST(MetricTest, InducedDistancesDominateAmbientDistances) {
  for (const auto& [name, image] : testing::SmallFixtures()) {
    if (image.size() > 8) continue;
    const std::uint32_t full = (1u << image.size()) - 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
      if (!testing::SubsetConnected(image, s)) continue;
      SubsetMask mask(image.size());
      for (int x = 0; x < image.size(); ++x) mask.set(x, s >> x & 1);
      const Subimage sub = InducedSubimage(image, mask);
      for (int i = 0; i < sub.image.size(); ++i) {
        for (int j = 0; j < sub.image.size(); ++j) {
          ASSERT_GE(sub.image.metric()(i, j),
                    image.metric()(sub.to_ambient[i], sub.to_ambient[j]))
              << name;
        }
      }
    }
  }
}

TEST(BoundaryTest, BoxBoundaryIsTheOuterRing) {
  const DigitalImage box = BuildBox({{0, 3}, {0, 2}}, 2);
  const SubsetMask bd = Boundary(box);
  EXPECT_EQ(bd.count(), 10);
  EXPECT_FALSE(bd.test(*box.IndexOf({{1, 1}})));
  EXPECT_FALSE(bd.test(*box.IndexOf({{2, 1}})));
  EXPECT_EQ(Corners(box).count(), 4);
  EXPECT_EQ(CodeOf([] { Boundary(BuildCycle(5).image); }),
            ErrorCode::kNotEmbedded);
}

TEST(NStarTest, CollectsTheClosedBall) {
  const DigitalImage line = BuildBox({{0, 6}}, 1);
  EXPECT_THAT(NStar(line, 3, 0).Indices(), ElementsAre(3));
  EXPECT_THAT(NStar(line, 3, 2).Indices(), ElementsAre(1, 2, 3, 4, 5));
  EXPECT_THAT(NStar(line, 0, 1).Indices(), ElementsAre(0, 1));
}

TEST(ShortestPathTest, ReportsUniquenessOnly) {
  const DigitalImage square = BuildBox({{0, 1}, {0, 1}}, 1);
  EXPECT_EQ(UniqueShortestPath(square, 0, 3), std::nullopt);
  const auto path = UniqueShortestPath(square, 0, 1);
  ASSERT_TRUE(path.has_value());
  EXPECT_THAT(*path, ElementsAre(0, 1));
  const CycleImage c7 = BuildCycle(7);
  EXPECT_THAT(*UniqueShortestPath(c7.image, 0, 3), ElementsAre(0, 1, 2, 3));
}

TEST(CoverTest, KCoverAndDomination) {
  const DigitalImage line = BuildBox({{0, 6}}, 1);
  const SubsetMask ends = SubsetMask::FromIndices(7, {0, 6});
  EXPECT_FALSE(IsKCover(line, ends, 2));
  EXPECT_TRUE(IsKCover(line, ends, 3));
  EXPECT_TRUE(IsDominating(line, SubsetMask::FromIndices(7, {1, 4, 6})));
  EXPECT_FALSE(IsDominating(line, SubsetMask::FromIndices(7, {1, 5})));
}

TEST(TreeTest, LeavesAndRecognition) {
  const DigitalImage star = BuildExplicit(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_TRUE(IsTree(star));
  EXPECT_THAT(Leaves(star).Indices(), ElementsAre(1, 2, 3));
  EXPECT_FALSE(IsTree(BuildCycle(4).image));
}

TEST(TreeTest, OracleGeneratesKnownCounts) {
  const std::vector<int> expected{1, 1, 1, 2, 3, 6, 11, 23};
  for (int n = 1; n <= 8; ++n) {
    const auto trees = testing::NonIsomorphicTrees(n);
    EXPECT_EQ(static_cast<int>(trees.size()), expected[n - 1]) << n;
    for (const DigitalImage& t : trees) EXPECT_TRUE(IsTree(t));
  }
}

TEST(DiameterTest, SubsetDiameterUsesTheAmbientMetric) {
  const CycleImage c8 = BuildCycle(8);
  const SubsetMask arc = SubsetMask::FromIndices(8, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(SubsetDiameter(c8.image, arc), 4);
  const Subimage sub = InducedSubimage(c8.image, arc);
  EXPECT_EQ(Diameter(sub.image), 5);
}

}  // namespace
}  // namespace digitop
