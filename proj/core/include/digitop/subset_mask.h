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

#ifndef DIGITOP_SUBSET_MASK_H_
#define DIGITOP_SUBSET_MASK_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace digitop {

// A subset of the vertices of one image, as a bitmask over the image's
// canonical vertex order.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(int universe_size) : bits_(universe_size, false) {}

  static SubsetMask All(int universe_size);
  static SubsetMask FromIndices(int universe_size, std::span<const int> indices);
  static SubsetMask FromIndices(int universe_size,
                                std::initializer_list<int> indices) {
    return FromIndices(universe_size,
                       std::span<const int>(indices.begin(), indices.size()));
  }

  int universe_size() const { return static_cast<int>(bits_.size()); }
  bool test(int i) const { return bits_[i]; }
  void set(int i, bool value = true) { bits_[i] = value; }
  void reset(int i) { bits_[i] = false; }

  int count() const;
  bool empty() const { return count() == 0; }
  std::vector<int> Indices() const;

  bool IsSubsetOf(const SubsetMask& other) const;
  SubsetMask Without(int i) const;

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
  // Orders by cardinality, then lexicographically by member indices.
  friend std::strong_ordering operator<=>(const SubsetMask& a,
                                          const SubsetMask& b);

 private:
  std::vector<bool> bits_;
};

}  // namespace digitop

#endif  // DIGITOP_SUBSET_MASK_H_
