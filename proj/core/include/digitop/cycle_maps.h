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

#ifndef DIGITOP_CYCLE_MAPS_H_
#define DIGITOP_CYCLE_MAPS_H_

#include <string>

#include "digitop/grid_image.h"
#include "digitop/map_table.h"

namespace digitop {

struct CycleMapClass {
  enum class Kind { kNonSurjective, kRotation, kFlipRotation };

  Kind kind = Kind::kNonSurjective;
  // Rotation amount for kRotation (f = r_d) and kFlipRotation
  // (f = flip o r_d); 0 otherwise.
  int d = 0;

  std::string ToString() const;
  friend bool operator==(const CycleMapClass&, const CycleMapClass&) = default;
};

// Throws NotACycle unless the indexing is a circular ordering of the image.
void ValidateCycle(const CycleImage& cycle);

// r_d(c_i) = c_{(i+d) mod v}, 0 <= d < v.
MapTable Rotation(const CycleImage& cycle, int d);
// c_i -> c_{(v-i) mod v}.
MapTable Flip(const CycleImage& cycle);

// Every continuous self-map of a cycle is nonsurjective, a rotation, or a
// flip composed with a rotation. Throws Unclassifiable otherwise.
CycleMapClass ClassifyCycleMap(const CycleImage& cycle, const MapTable& f);

}  // namespace digitop

#endif  // DIGITOP_CYCLE_MAPS_H_
