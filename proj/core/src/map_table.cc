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

#include "digitop/map_table.h"

#include <algorithm>
#include <string>

#include "digitop/error.h"

namespace digitop {
namespace {

void RequireSelfMap(const MapTable& f, const char* what) {
  if (!f.IsSelfMap()) {
    throw Error(ErrorCode::kDomainMismatch,
                std::string(what) + " needs a self-map");
  }
}

void RequireConnected(const DigitalImage& image) {
  if (!image.connected()) {
    throw Error(ErrorCode::kDisconnected,
                "displacement needs a connected image");
  }
}

}  // namespace

MapTable::MapTable(DigitalImage domain, DigitalImage codomain,
                   std::vector<int> table)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      table_(std::move(table)) {
  if (static_cast<int>(table_.size()) != domain_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "map table has " + std::to_string(table_.size()) +
                    " entries for a domain of " +
                    std::to_string(domain_.size()) + " vertices");
  }
  for (int y : table_) {
    if (y < 0 || y >= codomain_.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "map value " + std::to_string(y) + " outside the codomain");
    }
  }
}

MapTable MapTable::Identity(const DigitalImage& image) {
  std::vector<int> table(image.size());
  for (int x = 0; x < image.size(); ++x) table[x] = x;
  return MapTable(image, std::move(table));
}

MapTable MapTable::Constant(const DigitalImage& image, int target) {
  return MapTable(image, std::vector<int>(image.size(), target));
}

bool IsContinuous(const MapTable& f) {
  const DigitalImage& domain = f.domain();
  const DigitalImage& codomain = f.codomain();
  for (int x = 0; x < domain.size(); ++x) {
    for (int y : domain.neighbors(x)) {
      if (y > x && !codomain.AdjacentOrEqual(f(x), f(y))) return false;
    }
  }
  return true;
}

MapTable Compose(const MapTable& g, const MapTable& f) {
  if (!(f.codomain() == g.domain())) {
    throw Error(ErrorCode::kDomainMismatch,
                "codomain of the inner map differs from the domain of the "
                "outer map");
  }
  std::vector<int> table(f.size());
  for (int x = 0; x < f.size(); ++x) table[x] = g(f(x));
  return MapTable(f.domain(), g.codomain(), std::move(table));
}

SubsetMask FixedPoints(const MapTable& f) {
  RequireSelfMap(f, "fixed points");
  SubsetMask fixed(f.size());
  for (int x = 0; x < f.size(); ++x) {
    if (f(x) == x) fixed.set(x);
  }
  return fixed;
}

SubsetMask ImageOf(const MapTable& f) {
  SubsetMask image(f.codomain().size());
  for (int y : f.table()) image.set(y);
  return image;
}

int Displacement(const MapTable& f) {
  return DisplacementOn(f, SubsetMask::All(f.size()));
}

int DisplacementOn(const MapTable& f, const SubsetMask& a) {
  RequireSelfMap(f, "displacement");
  RequireConnected(f.domain());
  if (a.universe_size() != f.size()) {
    throw Error(ErrorCode::kInvalidArgument, "subset size mismatch");
  }
  const MetricCache& d = f.domain().metric();
  int worst = 0;
  for (int x : a.Indices()) worst = std::max<int>(worst, d(x, f(x)));
  return worst;
}

bool IsNMap(const MapTable& f, int n) { return Displacement(f) <= n; }

bool IsNMapOn(const MapTable& f, const SubsetMask& a, int n) {
  return DisplacementOn(f, a) <= n;
}

bool IsRetraction(const MapTable& f) {
  RequireSelfMap(f, "retraction");
  if (!IsContinuous(f)) return false;
  for (int x = 0; x < f.size(); ++x) {
    if (f(f(x)) != f(x)) return false;
  }
  return true;
}

}  // namespace digitop
