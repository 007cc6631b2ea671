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

#ifndef DIGITOP_MAP_TABLE_H_
#define DIGITOP_MAP_TABLE_H_

#include <span>
#include <vector>

#include "digitop/grid_image.h"
#include "digitop/subset_mask.h"

namespace digitop {

// A total function between two images, stored as an index array:
// table()[x] is the codomain index of the image of domain vertex x.
class MapTable {
 public:
  MapTable(DigitalImage domain, DigitalImage codomain, std::vector<int> table);
  // Self-map of image.
  MapTable(const DigitalImage& image, std::vector<int> table)
      : MapTable(image, image, std::move(table)) {}

  static MapTable Identity(const DigitalImage& image);
  static MapTable Constant(const DigitalImage& image, int target);

  const DigitalImage& domain() const { return domain_; }
  const DigitalImage& codomain() const { return codomain_; }
  std::span<const int> table() const { return table_; }
  int size() const { return static_cast<int>(table_.size()); }
  int operator()(int x) const { return table_[x]; }

  bool IsSelfMap() const { return domain_ == codomain_; }

  friend bool operator==(const MapTable& a, const MapTable& b) {
    return a.table_ == b.table_ && a.domain_ == b.domain_ &&
           a.codomain_ == b.codomain_;
  }

 private:
  DigitalImage domain_;
  DigitalImage codomain_;
  std::vector<int> table_;
};

// Backtracking state: a table with unassigned entries.
struct PartialMap {
  static constexpr int kUnassigned = -1;

  std::vector<int> table;
  int assigned = 0;

  explicit PartialMap(int domain_size) : table(domain_size, kUnassigned) {}
  bool complete() const { return assigned == static_cast<int>(table.size()); }
};

// Adjacent vertices go to equal or adjacent vertices.
bool IsContinuous(const MapTable& f);

// g after f. Throws DomainMismatch unless codomain(f) == domain(g).
MapTable Compose(const MapTable& g, const MapTable& f);

SubsetMask FixedPoints(const MapTable& f);

// f(X) as a subset of the codomain.
SubsetMask ImageOf(const MapTable& f);

// max over x of d(x, f(x)) for a self-map of a connected image.
int Displacement(const MapTable& f);
// Largest displacement over the members of a; 0 when a is empty.
int DisplacementOn(const MapTable& f, const SubsetMask& a);

bool IsNMap(const MapTable& f, int n);
// f|_A is an n-map. The empty restriction is an n-map for every n.
bool IsNMapOn(const MapTable& f, const SubsetMask& a, int n);

// Continuous and the identity on its own image.
bool IsRetraction(const MapTable& f);

}  // namespace digitop

#endif  // DIGITOP_MAP_TABLE_H_
