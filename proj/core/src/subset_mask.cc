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

#include "digitop/subset_mask.h"

#include <algorithm>

namespace digitop {

SubsetMask SubsetMask::All(int universe_size) {
  SubsetMask mask(universe_size);
  mask.bits_.assign(universe_size, true);
  return mask;
}

SubsetMask SubsetMask::FromIndices(int universe_size,
                                   std::span<const int> indices) {
  SubsetMask mask(universe_size);
  for (int i : indices) mask.bits_.at(i) = true;
  return mask;
}

int SubsetMask::count() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<int> SubsetMask::Indices() const {
  std::vector<int> out;
  for (int i = 0; i < universe_size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

bool SubsetMask::IsSubsetOf(const SubsetMask& other) const {
  for (int i = 0; i < universe_size(); ++i) {
    if (bits_[i] && !other.test(i)) return false;
  }
  return true;
}

SubsetMask SubsetMask::Without(int i) const {
  SubsetMask copy = *this;
  copy.reset(i);
  return copy;
}

std::strong_ordering operator<=>(const SubsetMask& a, const SubsetMask& b) {
  if (auto c = a.count() <=> b.count(); c != 0) return c;
  const auto ia = a.Indices();
  const auto ib = b.Indices();
  return std::lexicographical_compare_three_way(ia.begin(), ia.end(),
                                                ib.begin(), ib.end());
}

}  // namespace digitop
