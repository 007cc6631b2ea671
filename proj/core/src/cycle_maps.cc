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

#include "digitop/cycle_maps.h"

#include <string>

#include "digitop/error.h"

namespace digitop {

std::string CycleMapClass::ToString() const {
  switch (kind) {
    case Kind::kNonSurjective:
      return "NonSurjective";
    case Kind::kRotation:
      return "Rotation(" + std::to_string(d) + ")";
    case Kind::kFlipRotation:
      return "FlipRotation(" + std::to_string(d) + ")";
  }
  return "?";
}

void ValidateCycle(const CycleImage& cycle) {
  const int v = cycle.indexing.length();
  const DigitalImage& image = cycle.image;
  if (v < 4 || image.size() != v || image.edge_count() != v) {
    throw Error(ErrorCode::kNotACycle,
                "image is not a simple closed curve of at least 4 points");
  }
  std::vector<char> seen(v, 0);
  for (int x : cycle.indexing.order) {
    if (x < 0 || x >= v || seen[x]) {
      throw Error(ErrorCode::kNotACycle,
                  "circular indexing is not a permutation of the vertices");
    }
    seen[x] = 1;
  }
  for (int i = 0; i < v; ++i) {
    if (!image.Adjacent(cycle.indexing.order[i],
                        cycle.indexing.order[(i + 1) % v])) {
      throw Error(ErrorCode::kNotACycle,
                  "c_" + std::to_string(i) + " and its successor are not "
                  "adjacent");
    }
  }
}

MapTable Rotation(const CycleImage& cycle, int d) {
  ValidateCycle(cycle);
  const int v = cycle.indexing.length();
  if (d < 0 || d >= v) {
    throw Error(ErrorCode::kInvalidArgument,
                "rotation amount must lie in [0, v)");
  }
  const auto& order = cycle.indexing.order;
  std::vector<int> table(v);
  for (int i = 0; i < v; ++i) table[order[i]] = order[(i + d) % v];
  return MapTable(cycle.image, std::move(table));
}

MapTable Flip(const CycleImage& cycle) {
  ValidateCycle(cycle);
  const int v = cycle.indexing.length();
  const auto& order = cycle.indexing.order;
  std::vector<int> table(v);
  for (int i = 0; i < v; ++i) table[order[i]] = order[(v - i) % v];
  return MapTable(cycle.image, std::move(table));
}

CycleMapClass ClassifyCycleMap(const CycleImage& cycle, const MapTable& f) {
  ValidateCycle(cycle);
  if (!(f.domain() == cycle.image) || !f.IsSelfMap()) {
    throw Error(ErrorCode::kDomainMismatch, "map does not act on the cycle");
  }
  const int v = cycle.indexing.length();
  const auto& order = cycle.indexing.order;
  const auto position = cycle.indexing.Positions(v);
  // g[i] = index of f(c_i).
  std::vector<int> g(v);
  for (int i = 0; i < v; ++i) g[i] = position[f(order[i])];

  if (ImageOf(f).count() < v) return {CycleMapClass::Kind::kNonSurjective, 0};

  const int shift = g[0];
  bool rotation = true;
  for (int i = 0; i < v && rotation; ++i) rotation = g[i] == (i + shift) % v;
  if (rotation) return {CycleMapClass::Kind::kRotation, shift};

  // flip o r_d sends c_i to c_{-(i+d) mod v}.
  const int d = (v - g[0]) % v;
  bool flipped = true;
  for (int i = 0; i < v && flipped; ++i) {
    flipped = g[i] == ((v - (i + d) % v) % v);
  }
  if (flipped) return {CycleMapClass::Kind::kFlipRotation, d};

  throw Error(ErrorCode::kUnclassifiable,
              "surjective map is neither a rotation nor a flipped rotation");
}

}  // namespace digitop
