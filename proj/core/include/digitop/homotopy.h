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

#ifndef DIGITOP_HOMOTOPY_H_
#define DIGITOP_HOMOTOPY_H_

#include <vector>

#include "digitop/grid_image.h"
#include "digitop/map_search.h"
#include "digitop/map_table.h"

namespace digitop {

// Two continuous self-maps are one homotopy step apart when
// f(x) and g(x) are equal or adjacent for every x. Homotopy is reachability
// through such steps; only reachability is reported, not homotopy length.
bool IsHomotopyStep(const MapTable& f, const MapTable& g);

// Whether g is reachable from f. Visited maps count against
// limits.max_maps; exceeding it throws BudgetExceeded.
bool IsHomotopic(const MapTable& f, const MapTable& g,
                 const SearchLimits& limits = {});

// The homotopy class of f, in BFS discovery order.
std::vector<MapTable> HomotopyClass(const MapTable& f,
                                    const SearchLimits& limits = {});

// The homotopy class of the identity is {id}.
bool IsRigid(const DigitalImage& image, const SearchLimits& limits = {});

// No continuous 1-map other than the identity exists.
bool OnlyIdentityIsOneMap(const DigitalImage& image,
                          const SearchLimits& limits = {});

}  // namespace digitop

#endif  // DIGITOP_HOMOTOPY_H_
