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

#include "digitop/metrics.h"

#include <algorithm>
#include <limits>
#include <string>

#include "digitop/error.h"

namespace digitop {
namespace {

void CheckPair(const DigitalImage& ambient, const SubsetMask& y0,
               const SubsetMask& y1) {
  if (y0.universe_size() != ambient.size() ||
      y1.universe_size() != ambient.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "subsets do not belong to the ambient image");
  }
  if (y0.empty() || y1.empty()) {
    throw Error(ErrorCode::kEmptySubset, "hyperspace metrics need nonempty sets");
  }
  if (!ambient.connected()) {
    throw Error(ErrorCode::kDisconnected,
                "hyperspace metrics need a connected ambient image");
  }
}

}  // namespace

int DirectedHausdorff(const DigitalImage& ambient, const SubsetMask& from,
                      const SubsetMask& to) {
  CheckPair(ambient, from, to);
  const MetricCache& d = ambient.metric();
  const auto targets = to.Indices();
  int worst = 0;
  for (int x : from.Indices()) {
    int nearest = std::numeric_limits<int>::max();
    for (int y : targets) nearest = std::min<int>(nearest, d(x, y));
    worst = std::max(worst, nearest);
  }
  return worst;
}

int Hausdorff(const DigitalImage& ambient, const SubsetMask& y0,
              const SubsetMask& y1) {
  return std::max(DirectedHausdorff(ambient, y0, y1),
                  DirectedHausdorff(ambient, y1, y0));
}

int MinContinuousDisplacement(const DigitalImage& ambient,
                              const SubsetMask& from, const SubsetMask& to,
                              const SearchLimits& limits) {
  CheckPair(ambient, from, to);
  const Subimage source = InducedSubimage(ambient, from);
  const Subimage target = InducedSubimage(ambient, to);
  if (source.image.size() > limits.max_vertices) {
    throw Error(ErrorCode::kBudgetExceeded,
                "subset exceeds the map enumeration budget");
  }
  const MetricCache& d = ambient.metric();
  int upper = 0;
  for (int x : source.to_ambient) {
    for (int y : target.to_ambient) upper = std::max<int>(upper, d(x, y));
  }
  // Any map moves some point at least the directed Hausdorff distance;
  // constant maps achieve the upper bound.
  for (int t = DirectedHausdorff(ambient, from, to); t <= upper; ++t) {
    MapConstraints constraints;
    for (int x : source.to_ambient) {
      SubsetMask near(target.image.size());
      for (int j = 0; j < target.image.size(); ++j) {
        if (d(x, target.to_ambient[j]) <= t) near.set(j);
      }
      constraints.allowed.push_back(std::move(near));
    }
    const FirstMapResult found =
        FindFirstContinuousMap(source.image, target.image, constraints, limits);
    if (found.stats.status == SearchStatus::kBudgetExceeded) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "metric of continuity undecided at t = " + std::to_string(t));
    }
    if (found.table) return t;
  }
  return upper;
}

int MetricOfContinuity(const DigitalImage& ambient, const SubsetMask& y0,
                       const SubsetMask& y1, const SearchLimits& limits) {
  return std::max(MinContinuousDisplacement(ambient, y0, y1, limits),
                  MinContinuousDisplacement(ambient, y1, y0, limits));
}

DiameterComparison CompareDiameters(const DigitalImage& image,
                                    const MapTable& f, int m) {
  if (!f.IsSelfMap() || !(f.domain() == image)) {
    throw Error(ErrorCode::kDomainMismatch, "map is not a self-map of image");
  }
  if (!image.connected() || image.size() == 0) {
    throw Error(ErrorCode::kDisconnected,
                "diameter comparison needs a connected image");
  }
  if (!IsContinuous(f) || Displacement(f) > m) {
    throw Error(ErrorCode::kNotAnMMap,
                "map is not a continuous " + std::to_string(m) + "-map");
  }
  const SubsetMask fx = ImageOf(f);
  DiameterComparison out;
  out.m = m;
  out.image_diameter = Diameter(image);
  out.ambient_diameter = SubsetDiameter(image, fx);
  out.induced_diameter = Diameter(InducedSubimage(image, fx).image);
  return out;
}

}  // namespace digitop
