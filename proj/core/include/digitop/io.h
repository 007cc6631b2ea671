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

// Text formats: JSON image specs, subset files, map files, and DOT export.
//
// Image spec forms:
//   {"constructor":"box","intervals":[[0,2],[0,2]],"adjacency":"c1"}
//   {"constructor":"cycle","v":8}            (optional "realization":"grid")
//   {"dim":2,"adjacency":"c2","points":[[0,0],[0,1]]}
//   {"constructor":"explicit","n":5,"edges":[[0,1],[1,2]]}
//   {"constructor":"product","u":2,"factors":[<image spec>, ...]}
// Subset forms: {"points":[[0,0],...]}, {"indices":[0,3]}, or
//   {"named":"corners"|"boundary"|"leaves"|"all"|"none"}.
// Map forms: {"table":[i0,i1,...]} or {"table":[[p_in,p_out],...]} where
//   each p is a coordinate array (grid images) or a vertex index.
//
// Malformed input throws Error(kInvalidArgument) naming the field.

#ifndef DIGITOP_IO_H_
#define DIGITOP_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "digitop/grid_image.h"
#include "digitop/map_table.h"
#include "digitop/subset_mask.h"

namespace digitop {

struct LoadedImage {
  DigitalImage image;
  // Present for cycle specs.
  std::optional<CycleIndexing> cycle;
};

LoadedImage ParseImageSpec(std::string_view json_text,
                           const BuildLimits& limits = {});
SubsetMask ParseSubset(std::string_view json_text, const DigitalImage& image);
MapTable ParseMap(std::string_view json_text, const DigitalImage& image);

// Reads a whole file; throws Error(kInvalidArgument) when unreadable.
std::string ReadTextFile(const std::string& path);

// Undirected DOT graph. Vertices are labeled "(x,y,...)" for grid images and
// by index otherwise; every vertex is declared before the edges.
std::string ExportDot(const DigitalImage& image);

struct DotGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;  // indices into vertices
};

// Reads the subset of DOT that ExportDot writes.
DotGraph ParseDot(std::string_view dot_text);

}  // namespace digitop

#endif  // DIGITOP_IO_H_
