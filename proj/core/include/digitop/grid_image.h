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

// Finite digital images: a vertex set (grid points of Z^n or abstract ids)
// together with a symmetric, irreflexive adjacency relation.
//
// Vertices are stored in canonical order: lexicographic on coordinates for
// grid images, insertion order for explicit graphs. Every SubsetMask and
// MapTable refers to vertices by their index in that order.

#ifndef DIGITOP_GRID_IMAGE_H_
#define DIGITOP_GRID_IMAGE_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "digitop/subset_mask.h"

namespace digitop {

inline constexpr int kMaxDimension = 8;
inline constexpr int kMaxCoordinate = 1 << 30;

struct Point {
  std::vector<int> coords;

  int dimension() const { return static_cast<int>(coords.size()); }
  // "(x,y,...)".
  std::string ToString() const;

  friend auto operator<=>(const Point&, const Point&) = default;
};

struct AdjacencyKind {
  enum class Type { kCu, kNpu, kExplicit };

  Type type = Type::kExplicit;
  int u = 0;
  std::vector<AdjacencyKind> factors;  // only for kNpu

  static AdjacencyKind Cu(int u) { return {Type::kCu, u, {}}; }
  static AdjacencyKind Npu(int u, std::vector<AdjacencyKind> factors) {
    return {Type::kNpu, u, std::move(factors)};
  }
  static AdjacencyKind Explicit() { return {}; }

  // "c2", "NP_2(c1,c1)", "explicit".
  std::string ToString() const;

  friend bool operator==(const AdjacencyKind&, const AdjacencyKind&) = default;
};

struct BuildLimits {
  int max_points = 4096;
};

struct Interval {
  int lo = 0;
  int hi = 0;
};

class DigitalImage;

// All-pairs shortest-path distances of one image. Distances between
// different components are kInfinity.
class MetricCache {
 public:
  static constexpr std::uint16_t kInfinity = 0xFFFF;

  explicit MetricCache(const DigitalImage& image);

  int size() const { return size_; }
  std::uint16_t operator()(int x, int y) const {
    return dist_[static_cast<std::size_t>(x) * size_ + y];
  }
  bool finite(int x, int y) const { return (*this)(x, y) != kInfinity; }

  bool connected() const { return component_count_ <= 1; }
  int component(int x) const { return component_[x]; }
  int component_count() const { return component_count_; }

 private:
  int size_ = 0;
  int component_count_ = 0;
  std::vector<std::uint16_t> dist_;
  std::vector<int> component_;
};

struct ProductStructure;

// Immutable handle; copies share the underlying graph and lazily built
// metric, and are safe to use from several threads.
class DigitalImage {
 public:
  // The empty image.
  DigitalImage();

  int size() const;
  // Zero for explicit (non-embedded) images.
  int dimension() const;
  // True when vertices are grid points of Z^dimension().
  bool embedded() const;
  const AdjacencyKind& adjacency() const;

  const Point& point(int x) const;
  std::span<const Point> points() const;
  std::optional<int> IndexOf(const Point& p) const;

  // Sorted neighbor indices of x.
  std::span<const int> neighbors(int x) const;
  int degree(int x) const { return static_cast<int>(neighbors(x).size()); }
  bool Adjacent(int x, int y) const;
  bool AdjacentOrEqual(int x, int y) const { return x == y || Adjacent(x, y); }
  std::int64_t edge_count() const;
  // Each edge once, as (x, y) with x < y, in lexicographic order.
  std::vector<std::pair<int, int>> Edges() const;

  // "(x,y,...)" for grid images, the index otherwise.
  std::string Label(int x) const;

  const MetricCache& metric() const;
  bool connected() const { return metric().connected(); }

  // Non-null only for images produced by BuildProduct.
  const ProductStructure* product() const;

  // Structural equality: same vertices, order, and edges.
  friend bool operator==(const DigitalImage& a, const DigitalImage& b);

  struct Impl;

 private:
  explicit DigitalImage(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  friend DigitalImage MakeImage(std::shared_ptr<Impl> impl);

  std::shared_ptr<const Impl> impl_;
};

// Records how an image was assembled by BuildProduct.
struct ProductStructure {
  int u = 0;
  std::vector<DigitalImage> factors;
  // tuples[x][i] is the index in factors[i] of the i-th coordinate of x.
  std::vector<std::vector<int>> tuples;
};

// A circular indexing c_0..c_{v-1} of a simple closed curve:
// order[i] is the vertex index of c_i.
struct CycleIndexing {
  std::vector<int> order;

  int length() const { return static_cast<int>(order.size()); }
  // Inverse of order.
  std::vector<int> Positions(int image_size) const;
};

struct CycleImage {
  DigitalImage image;
  CycleIndexing indexing;
};

struct Subimage {
  DigitalImage image;
  // to_ambient[i] is the ambient index of vertex i of the subimage.
  std::vector<int> to_ambient;
};

// The integer box prod [lo_i, hi_i] under c_u.
DigitalImage BuildBox(std::span<const Interval> intervals, int u,
                      const BuildLimits& limits = {});
DigitalImage BuildBox(std::initializer_list<Interval> intervals, int u,
                      const BuildLimits& limits = {});

// Arbitrary finite point set of Z^dim under c_u. Points are sorted into
// canonical order; duplicates are rejected.
DigitalImage BuildFromPoints(int dim, int u, std::vector<Point> points,
                             const BuildLimits& limits = {});

// Abstract v-cycle, v >= 4, with c_i = vertex i.
CycleImage BuildCycle(int v);

// Even cycle realized as the boundary of a c_1 rectangle. v = 4 or v >= 8.
CycleImage BuildGridCycle(int v);

DigitalImage BuildExplicit(int vertex_count,
                           std::span<const std::pair<int, int>> edges);
DigitalImage BuildExplicit(int vertex_count,
                           std::initializer_list<std::pair<int, int>> edges);

// Generalized normal product NP_u of the factors.
DigitalImage BuildProduct(std::span<const DigitalImage> factors, int u,
                          const BuildLimits& limits = {});

// The subgraph induced on mask, with vertices in ambient order.
Subimage InducedSubimage(const DigitalImage& image, const SubsetMask& mask);

// Points c_1-adjacent to a point of Z^n outside the image.
SubsetMask Boundary(const DigitalImage& image);

// Points of a grid box whose every coordinate is extremal.
SubsetMask Corners(const DigitalImage& image);

// Interval extents of each coordinate, when the image is a full grid box.
std::optional<std::vector<Interval>> BoxExtents(const DigitalImage& image);

MetricCache ComputeMetric(const DigitalImage& image);

// Largest distance in a connected, nonempty image.
int Diameter(const DigitalImage& image);

// Diameter of a subset measured in the ambient metric (0 for singletons).
int SubsetDiameter(const DigitalImage& image, const SubsetMask& subset);

// N*(x, m): vertices within distance m of x.
SubsetMask NStar(const DigitalImage& image, int x, int m);

// The shortest path from x to y if it is the only one.
std::optional<std::vector<int>> UniqueShortestPath(const DigitalImage& image,
                                                   int x, int y);

bool IsKCover(const DigitalImage& image, const SubsetMask& subset, int k);
inline bool IsDominating(const DigitalImage& image, const SubsetMask& subset) {
  return IsKCover(image, subset, 1);
}
// Degree-one vertices.
SubsetMask Leaves(const DigitalImage& image);
bool IsTree(const DigitalImage& image);

// p_i(A) as a subset of factor i of a product image.
SubsetMask ProjectToFactor(const DigitalImage& product_image,
                           const SubsetMask& subset, int factor);

}  // namespace digitop

#endif  // DIGITOP_GRID_IMAGE_H_
