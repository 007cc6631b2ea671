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

#include "digitop/limiting.h"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "digitop/error.h"

namespace digitop {

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kFails:
      return "fails";
    case Verdict::kUnknown:
      return "unknown";
  }
  return "?";
}

LimitingVerdict IsLimiting(const LimitingQuery& query,
                           const SearchLimits& limits) {
  CounterexampleResult search =
      SearchCounterexample(query.image, query.a, query.m, query.n, limits);
  LimitingVerdict verdict;
  verdict.nodes_explored = search.nodes;
  switch (search.status) {
    case SearchStatus::kExhausted:
      verdict.verdict = Verdict::kHolds;
      break;
    case SearchStatus::kStopped:
      verdict.verdict = Verdict::kFails;
      verdict.witness = std::move(search.witness);
      break;
    case SearchStatus::kBudgetExceeded:
      verdict.verdict = Verdict::kUnknown;
      break;
  }
  return verdict;
}

LimitingVerdict IsFreezing(const DigitalImage& image, const SubsetMask& a,
                           const SearchLimits& limits) {
  return IsLimiting({image, a, 0, 0}, limits);
}

LimitingVerdict IsSCold(const DigitalImage& image, const SubsetMask& a, int s,
                        const SearchLimits& limits) {
  return IsLimiting({image, a, 0, s}, limits);
}

LimitingVerdict IsMinimalLimiting(const LimitingQuery& query,
                                  const SearchLimits& limits) {
  LimitingVerdict verdict = IsLimiting(query, limits);
  if (!verdict.holds()) return verdict;
  for (int member : query.a.Indices()) {
    LimitingVerdict smaller =
        IsLimiting({query.image, query.a.Without(member), query.m, query.n},
                   limits);
    verdict.nodes_explored += smaller.nodes_explored;
    if (smaller.verdict == Verdict::kUnknown) {
      verdict.verdict = Verdict::kUnknown;
      return verdict;
    }
    if (smaller.holds()) {
      verdict.verdict = Verdict::kFails;
      verdict.removable = member;
      return verdict;
    }
  }
  return verdict;
}

MinimalSetSearch FindMinimalLimitingSets(const DigitalImage& image, int m,
                                         int n, int size_cap,
                                         const SearchLimits& limits) {
  MinimalSetSearch result;
  const int size = image.size();
  size_cap = std::min(size_cap, size);
  // Smallest first: a limiting set containing no smaller minimal set has no
  // limiting proper subset, since each such subset would contain one.
  for (int k = 0; k <= size_cap; ++k) {
    std::vector<int> members(k);
    for (int i = 0; i < k; ++i) members[i] = i;
    while (true) {
      const SubsetMask a = SubsetMask::FromIndices(size, members);
      const bool dominated =
          std::any_of(result.sets.begin(), result.sets.end(),
                      [&](const SubsetMask& s) { return s.IsSubsetOf(a); });
      if (!dominated) {
        const LimitingVerdict verdict = IsLimiting({image, a, m, n}, limits);
        result.nodes_explored += verdict.nodes_explored;
        if (verdict.verdict == Verdict::kUnknown) {
          result.complete = false;
          return result;
        }
        if (verdict.holds()) result.sets.push_back(a);
      }
      // Next k-combination in lexicographic order.
      int i = k - 1;
      while (i >= 0 && members[i] == size - k + i) --i;
      if (i < 0) break;
      ++members[i];
      for (int j = i + 1; j < k; ++j) members[j] = members[j - 1] + 1;
    }
  }
  return result;
}

int LimitingProfile(const DigitalImage& image, const SubsetMask& a, int m,
                    const SearchLimits& limits) {
  const int diameter = Diameter(image);
  for (int n = 0; n <= diameter; ++n) {
    const LimitingVerdict verdict = IsLimiting({image, a, m, n}, limits);
    if (verdict.verdict == Verdict::kUnknown) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "limiting profile undecided at n = " + std::to_string(n));
    }
    if (verdict.holds()) return n;
  }
  // No continuous self-map moves a point farther than the diameter.
  return diameter;
}

int CycleDisplacementThreshold(int v) {
  if (v < 4) {
    throw Error(ErrorCode::kBadCycleLength,
                "D(v) needs v >= 4, got " + std::to_string(v));
  }
  if ((v - 2) % 4 == 0) return (v - 2) / 4 - 1;
  return (v - 2) / 4;
}

int CycleTripleBound(const CycleImage& cycle, int i, int j, int k) {
  ValidateCycle(cycle);
  const int v = cycle.indexing.length();
  std::vector<int> p{i, j, k};
  for (int x : p) {
    if (x < 0 || x >= v) {
      throw Error(ErrorCode::kNotAValidTriple,
                  "cycle index " + std::to_string(x) + " out of range");
    }
  }
  std::sort(p.begin(), p.end());
  if (p[0] == p[1] || p[1] == p[2]) {
    throw Error(ErrorCode::kNotAValidTriple, "triple points must be distinct");
  }
  const int arcs[3] = {p[1] - p[0], p[2] - p[1], v - p[2] + p[0]};
  int bound = CycleDisplacementThreshold(v);
  for (int arc : arcs) {
    // The arc between consecutive points is the unique shorter one iff it
    // is shorter than the complementary arc.
    if (2 * arc >= v) {
      throw Error(ErrorCode::kNotAValidTriple,
                  "the shorter arcs between the points do not cover the "
                  "cycle");
    }
    bound = std::min(bound, arc / 2);
  }
  return bound;
}

int InduceBound(int m, int k) {
  if (m < 0 || k < 0) {
    throw Error(ErrorCode::kInvalidArgument, "bounds take nonnegative inputs");
  }
  return m + 2 * k;
}

int RetractBound(int n, int h, int epsilon) {
  if (n < 0 || h < 0 || epsilon < 0) {
    throw Error(ErrorCode::kInvalidArgument, "bounds take nonnegative inputs");
  }
  return n + 2 * h + epsilon;
}

bool CheckC2BoundaryColdHypothesis(const DigitalImage& image,
                                   const SubsetMask& a) {
  if (!image.embedded()) {
    throw Error(ErrorCode::kNotEmbedded,
                "the boundary hypothesis needs a grid image");
  }
  if (image.dimension() != 2 ||
      image.adjacency() != AdjacencyKind::Cu(2) || !BoxExtents(image)) {
    throw Error(ErrorCode::kNotEmbedded,
                "the boundary hypothesis applies to 2D boxes under c_2");
  }
  if (a.universe_size() != image.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "subset does not belong to the image");
  }
  const SubsetMask boundary = Boundary(image);
  if (!a.IsSubsetOf(boundary)) return false;
  const auto members = boundary.Indices();
  for (int x : members) {
    for (int y : members) {
      if (y <= x || a.test(x) || a.test(y)) continue;
      const auto& p = image.point(x).coords;
      const auto& q = image.point(y).coords;
      if (std::abs(p[0] - q[0]) + std::abs(p[1] - q[1]) == 1) return false;
    }
  }
  return true;
}

std::vector<LimitingVerdict> FactorLimitedness(const DigitalImage& product,
                                               const SubsetMask& a, int m,
                                               int n,
                                               const SearchLimits& limits,
                                               bool verify_product) {
  const ProductStructure* structure = product.product();
  if (structure == nullptr) {
    throw Error(ErrorCode::kNotAProduct, "image was not built as a product");
  }
  if (verify_product) {
    const LimitingVerdict whole = IsLimiting({product, a, m, n}, limits);
    if (!whole.holds()) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("product query is ") +
                      std::string(VerdictName(whole.verdict)) +
                      ", not limited");
    }
  }
  std::vector<LimitingVerdict> verdicts;
  for (std::size_t i = 0; i < structure->factors.size(); ++i) {
    const SubsetMask projected =
        ProjectToFactor(product, a, static_cast<int>(i));
    verdicts.push_back(
        IsLimiting({structure->factors[i], projected, m, n}, limits));
  }
  return verdicts;
}

}  // namespace digitop
