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

#ifndef DIGITOP_METRICS_H_
#define DIGITOP_METRICS_H_

#include "digitop/grid_image.h"
#include "digitop/map_search.h"
#include "digitop/map_table.h"
#include "digitop/subset_mask.h"

namespace digitop {

// max over x in from of the distance to the nearest member of to.
int DirectedHausdorff(const DigitalImage& ambient, const SubsetMask& from,
                      const SubsetMask& to);

// Hausdorff distance between nonempty subsets of a connected image under
// its shortest-path metric.
int Hausdorff(const DigitalImage& ambient, const SubsetMask& y0,
              const SubsetMask& y1);

// Least t admitting a continuous map from -> to (induced adjacency on both)
// that moves no point more than t in the ambient metric.
int MinContinuousDisplacement(const DigitalImage& ambient,
                              const SubsetMask& from, const SubsetMask& to,
                              const SearchLimits& limits = {});

// The digital metric of continuity: the larger of the two one-way minima.
int MetricOfContinuity(const DigitalImage& ambient, const SubsetMask& y0,
                       const SubsetMask& y1, const SearchLimits& limits = {});

struct DiameterComparison {
  int image_diameter = 0;        // diam(X)
  int ambient_diameter = 0;      // diam of f(X) under d_X
  int induced_diameter = 0;      // diam of f(X) under its own metric
  int m = 0;

  bool ambient_holds() const { return ambient_diameter >= image_diameter - 2 * m; }
  bool induced_holds() const { return induced_diameter >= image_diameter - 2 * m; }
  bool holds() const { return ambient_holds() && induced_holds(); }
};

// Both diameter conventions for diam(f(X)) >= diam(X) - 2m. Throws
// NotAnMMap unless f is a continuous m-map of a connected image.
DiameterComparison CompareDiameters(const DigitalImage& image,
                                    const MapTable& f, int m);
inline bool CheckDiameterBound(const DigitalImage& image, const MapTable& f,
                               int m) {
  return CompareDiameters(image, f, m).holds();
}

}  // namespace digitop

#endif  // DIGITOP_METRICS_H_
