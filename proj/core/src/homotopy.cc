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

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "digitop/error.h"

namespace digitop {
namespace {

void RequireContinuousSelfMap(const MapTable& f) {
  if (!f.IsSelfMap()) {
    throw Error(ErrorCode::kDomainMismatch, "homotopy needs self-maps");
  }
  if (!IsContinuous(f)) {
    throw Error(ErrorCode::kInvalidArgument,
                "homotopy is defined between continuous maps");
  }
}

// Continuous maps one homotopy step from table, in search order.
std::vector<std::vector<int>> Steps(const DigitalImage& image,
                                    std::span<const int> table,
                                    const SearchLimits& limits) {
  MapConstraints constraints;
  constraints.allowed.reserve(image.size());
  for (int x = 0; x < image.size(); ++x) {
    SubsetMask near(image.size());
    near.set(table[x]);
    for (int y : image.neighbors(table[x])) near.set(y);
    constraints.allowed.push_back(std::move(near));
  }
  SearchLimits sequential = limits;
  sequential.threads = 1;
  return CollectContinuousMaps(image, image, constraints, sequential);
}

// BFS over the homotopy class of start. Stops early when stop() returns true
// for a newly discovered map.
template <typename Stop>
std::vector<std::vector<int>> Explore(const MapTable& start,
                                      const SearchLimits& limits, Stop stop) {
  const DigitalImage& image = start.domain();
  std::set<std::vector<int>> visited;
  std::vector<std::vector<int>> discovered;
  std::deque<std::vector<int>> queue;
  std::vector<int> first(start.table().begin(), start.table().end());
  visited.insert(first);
  discovered.push_back(first);
  if (stop(first)) return discovered;
  queue.push_back(std::move(first));
  while (!queue.empty()) {
    const std::vector<int> current = std::move(queue.front());
    queue.pop_front();
    for (auto& next : Steps(image, current, limits)) {
      if (!visited.insert(next).second) continue;
      if (static_cast<std::int64_t>(visited.size()) > limits.max_maps) {
        throw Error(ErrorCode::kBudgetExceeded,
                    "homotopy search visited more than " +
                        std::to_string(limits.max_maps) + " maps");
      }
      discovered.push_back(next);
      if (stop(next)) return discovered;
      queue.push_back(std::move(next));
    }
  }
  return discovered;
}

}  // namespace

bool IsHomotopyStep(const MapTable& f, const MapTable& g) {
  if (!(f.codomain() == g.codomain()) || f.size() != g.size()) return false;
  for (int x = 0; x < f.size(); ++x) {
    if (!f.codomain().AdjacentOrEqual(f(x), g(x))) return false;
  }
  return true;
}

bool IsHomotopic(const MapTable& f, const MapTable& g,
                 const SearchLimits& limits) {
  RequireContinuousSelfMap(f);
  RequireContinuousSelfMap(g);
  if (!(f.domain() == g.domain())) {
    throw Error(ErrorCode::kDomainMismatch,
                "maps act on different images");
  }
  const std::vector<int> target(g.table().begin(), g.table().end());
  bool reached = false;
  Explore(f, limits, [&](const std::vector<int>& t) {
    reached = reached || t == target;
    return reached;
  });
  return reached;
}

std::vector<MapTable> HomotopyClass(const MapTable& f,
                                    const SearchLimits& limits) {
  RequireContinuousSelfMap(f);
  std::vector<MapTable> out;
  for (auto& t : Explore(f, limits, [](const std::vector<int>&) {
         return false;
       })) {
    out.emplace_back(f.domain(), std::move(t));
  }
  return out;
}

bool IsRigid(const DigitalImage& image, const SearchLimits& limits) {
  if (image.size() > limits.max_vertices) {
    throw Error(ErrorCode::kBudgetExceeded,
                "image exceeds the map enumeration budget");
  }
  const MapTable id = MapTable::Identity(image);
  // The class of id is {id} iff id has no homotopy step to another map.
  const auto found = Explore(id, limits, [&](const std::vector<int>& t) {
    return t.size() > 0 && !std::equal(t.begin(), t.end(), id.table().begin());
  });
  return found.size() == 1;
}

bool OnlyIdentityIsOneMap(const DigitalImage& image,
                          const SearchLimits& limits) {
  if (image.size() > limits.max_vertices) {
    throw Error(ErrorCode::kBudgetExceeded,
                "image exceeds the map enumeration budget");
  }
  if (!image.connected()) {
    throw Error(ErrorCode::kDisconnected, "1-maps need a connected image");
  }
  MapConstraints constraints;
  for (int x = 0; x < image.size(); ++x) {
    constraints.allowed.push_back(NStar(image, x, 1));
  }
  bool other = false;
  const SearchStats stats = ForEachContinuousMap(
      image, image, constraints, limits, [&](std::span<const int> t) {
        for (int x = 0; x < image.size(); ++x) {
          if (t[x] != x) {
            other = true;
            return false;
          }
        }
        return true;
      });
  if (stats.status == SearchStatus::kBudgetExceeded) {
    throw Error(ErrorCode::kBudgetExceeded, "1-map search exceeded budget");
  }
  return !other;
}

}  // namespace digitop
