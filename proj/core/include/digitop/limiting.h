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

// Freezing sets, s-cold sets and (m,n)-limiting sets.
//
// (X, kappa) is (A, m, n)-limited when every continuous self-map whose
// restriction to A moves no point farther than m moves no point of X
// farther than n. Freezing sets are the (0,0) case and s-cold sets the
// (0,s) case. Every answer is a certificate: a failing query carries a
// witness map, a holding one the size of the exhausted search.

#ifndef DIGITOP_LIMITING_H_
#define DIGITOP_LIMITING_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "digitop/cycle_maps.h"
#include "digitop/grid_image.h"
#include "digitop/map_search.h"
#include "digitop/map_table.h"
#include "digitop/subset_mask.h"

namespace digitop {

struct LimitingQuery {
  DigitalImage image;
  SubsetMask a;
  int m = 0;
  int n = 0;
};

enum class Verdict { kHolds, kFails, kUnknown };

std::string_view VerdictName(Verdict verdict);

struct LimitingVerdict {
  Verdict verdict = Verdict::kUnknown;
  // For a failed limiting query: continuous, an m-map on A, not an n-map.
  std::optional<MapTable> witness;
  // For a failed minimality query on a limiting set: a member whose removal
  // leaves a limiting set.
  std::optional<int> removable;
  std::int64_t nodes_explored = 0;

  bool holds() const { return verdict == Verdict::kHolds; }
};

LimitingVerdict IsLimiting(const LimitingQuery& query,
                           const SearchLimits& limits = {});

// Same as IsLimiting with (m, n) = (0, 0).
LimitingVerdict IsFreezing(const DigitalImage& image, const SubsetMask& a,
                           const SearchLimits& limits = {});
// Same as IsLimiting with (m, n) = (0, s).
LimitingVerdict IsSCold(const DigitalImage& image, const SubsetMask& a, int s,
                        const SearchLimits& limits = {});

// Limiting, and no member can be dropped. Limitedness is upward monotone
// in A, so checking single deletions is enough.
LimitingVerdict IsMinimalLimiting(const LimitingQuery& query,
                                  const SearchLimits& limits = {});

struct MinimalSetSearch {
  // Minimal (m,n)-limiting sets ordered by size, then member indices.
  std::vector<SubsetMask> sets;
  // False when a budget ran out; sets then covers only the sizes finished.
  bool complete = true;
  std::int64_t nodes_explored = 0;
};

MinimalSetSearch FindMinimalLimitingSets(const DigitalImage& image, int m,
                                         int n, int size_cap,
                                         const SearchLimits& limits = {});

// Least n for which (A, m, n) holds. Throws BudgetExceeded when a step is
// undecided.
int LimitingProfile(const DigitalImage& image, const SubsetMask& a, int m,
                    const SearchLimits& limits = {});

// D(v) = (v-2)/4 - 1 when 4 divides v-2, floor((v-2)/4) otherwise.
int CycleDisplacementThreshold(int v);

// For c_i, c_j, c_k splitting C_v into three arcs that are each the unique
// shorter arc between their endpoints: the largest integer m with
// m <= D(v) and m <= length/2 for each arc. Throws NotAValidTriple.
int CycleTripleBound(const CycleImage& cycle, int i, int j, int k);

// An m-map on a k-cover is an (m + 2k)-map.
int InduceBound(int m, int k);
// Limitedness transferred from an epsilon-retract at Hausdorff distance h.
int RetractBound(int n, int h, int epsilon);

// For a 2D box under c_2: A lies on the boundary and no two c_1-adjacent
// boundary points are both missing from A. Such A is 1-cold.
bool CheckC2BoundaryColdHypothesis(const DigitalImage& image,
                                   const SubsetMask& a);

// Verdict of (X_i, p_i(A), m, n) for each factor of a product image. When
// verify_product is set, the product query is decided first and
// InvalidArgument is thrown unless it holds.
std::vector<LimitingVerdict> FactorLimitedness(const DigitalImage& product,
                                               const SubsetMask& a, int m,
                                               int n,
                                               const SearchLimits& limits = {},
                                               bool verify_product = false);

}  // namespace digitop

#endif  // DIGITOP_LIMITING_H_
