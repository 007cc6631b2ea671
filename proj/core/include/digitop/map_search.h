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

// Backtracking enumeration of continuous maps between finite images.
//
// Vertices are assigned in a breadth-first order. A partial assignment is
// kept only when d_Y(f(x), f(y)) <= d_X(x, y) for every assigned pair:
// continuous maps never increase path-metric distance, and conversely any
// total assignment passing the test on adjacent pairs is continuous, so the
// pruning is exact. Candidates for a vertex are drawn from N*(f(p)) where p
// is its earliest-assigned neighbor.

#ifndef DIGITOP_MAP_SEARCH_H_
#define DIGITOP_MAP_SEARCH_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "digitop/grid_image.h"
#include "digitop/map_table.h"
#include "digitop/subset_mask.h"

namespace digitop {

struct SearchLimits {
  // Largest domain accepted by the enumerators.
  int max_vertices = 16;
  // Search-tree nodes (accepted partial assignments) before giving up.
  std::int64_t max_nodes = 200'000'000;
  // Maps visited by homotopy reachability before giving up.
  std::int64_t max_maps = 1'000'000;
  // Workers over top-level branches; results do not depend on this.
  int threads = 1;
};

enum class SearchStatus {
  kExhausted,       // every branch explored
  kStopped,         // the visitor asked to stop (e.g. a witness was found)
  kBudgetExceeded,  // max_nodes hit first
};

struct SearchStats {
  SearchStatus status = SearchStatus::kExhausted;
  std::int64_t nodes = 0;
};

struct MapConstraints {
  // Assignment order over domain vertices; empty means BfsOrder(domain, {}).
  std::vector<int> order;
  // Per domain vertex, the codomain vertices it may map to. Empty vector, or
  // an empty mask for a vertex, means unrestricted.
  std::vector<SubsetMask> allowed;
  // Self-maps only: report only maps moving some vertex farther than this.
  std::optional<int> require_displacement_above;
};

// Multi-source BFS from roots (in ascending order), restarting from the
// smallest unvisited vertex for each further component.
std::vector<int> BfsOrder(const DigitalImage& image, std::span<const int> roots);

// Visits each continuous map satisfying the constraints, in search order.
// The visitor returns false to stop. Single-threaded.
SearchStats ForEachContinuousMap(
    const DigitalImage& domain, const DigitalImage& codomain,
    const MapConstraints& constraints, const SearchLimits& limits,
    const std::function<bool(std::span<const int>)>& visit);

struct FirstMapResult {
  std::optional<std::vector<int>> table;
  SearchStats stats;
};

// The first map in search order, splitting top-level branches over
// limits.threads workers. The result, including stats, equals the
// single-threaded one.
FirstMapResult FindFirstContinuousMap(const DigitalImage& domain,
                                      const DigitalImage& codomain,
                                      const MapConstraints& constraints,
                                      const SearchLimits& limits);

// All matching maps in search order; throws BudgetExceeded on node budget.
std::vector<std::vector<int>> CollectContinuousMaps(
    const DigitalImage& domain, const DigitalImage& codomain,
    const MapConstraints& constraints, const SearchLimits& limits);

// C(X, kappa). Throws BudgetExceeded when |X| > limits.max_vertices or the
// node budget runs out.
SearchStats EnumerateContinuousSelfMaps(
    const DigitalImage& image, const SearchLimits& limits,
    const std::function<bool(std::span<const int>)>& visit);
std::vector<MapTable> ContinuousSelfMaps(const DigitalImage& image,
                                         const SearchLimits& limits = {});

struct CounterexampleResult {
  // kStopped: witness found. kExhausted: none exists. kBudgetExceeded:
  // undecided.
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<MapTable> witness;
  std::int64_t nodes = 0;
};

// A continuous self-map f with f|_A an m-map that is not an n-map, taking
// the first in search order (BFS from A, candidates ascending).
CounterexampleResult SearchCounterexample(const DigitalImage& image,
                                          const SubsetMask& a, int m, int n,
                                          const SearchLimits& limits = {});

// Every such counterexample, in the same order.
SearchStats ForEachCounterexample(
    const DigitalImage& image, const SubsetMask& a, int m, int n,
    const SearchLimits& limits,
    const std::function<bool(std::span<const int>)>& visit);

}  // namespace digitop

#endif  // DIGITOP_MAP_SEARCH_H_
