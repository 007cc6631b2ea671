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

#include "digitop/grid_image.h"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <mutex>
#include <string>

#include "digitop/error.h"

namespace digitop {

struct DigitalImage::Impl {
  int dimension = 0;
  bool embedded = false;
  AdjacencyKind adjacency;
  std::vector<Point> points;  // sorted when embedded
  std::vector<std::vector<int>> adjacency_lists;
  std::int64_t edge_count = 0;
  std::optional<ProductStructure> product;

  mutable std::once_flag metric_once;
  mutable std::unique_ptr<MetricCache> metric;
};

DigitalImage MakeImage(std::shared_ptr<DigitalImage::Impl> impl) {
  impl->edge_count = 0;
  for (auto& list : impl->adjacency_lists) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    impl->edge_count += static_cast<std::int64_t>(list.size());
  }
  impl->edge_count /= 2;
  return DigitalImage(std::move(impl));
}

namespace {

std::string CommaJoin(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

void CheckBudget(std::int64_t count, const BuildLimits& limits) {
  if (count > limits.max_points) {
    throw Error(ErrorCode::kBudgetExceeded,
                "image would have " + std::to_string(count) +
                    " points; construction budget is " +
                    std::to_string(limits.max_points));
  }
}

void CheckIndex(const DigitalImage& image, int x) {
  if (x < 0 || x >= image.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex index " + std::to_string(x) + " out of range [0," +
                    std::to_string(image.size()) + ")");
  }
}

void CheckMask(const DigitalImage& image, const SubsetMask& mask) {
  if (mask.universe_size() != image.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "subset mask has " + std::to_string(mask.universe_size()) +
                    " bits but the image has " +
                    std::to_string(image.size()) + " vertices");
  }
}

// Offsets in {-1,0,1}^dim with between 1 and u nonzero entries.
std::vector<std::vector<int>> CuOffsets(int dim, int u) {
  std::vector<std::vector<int>> offsets;
  std::vector<int> current(dim, -1);
  while (true) {
    int nonzero = 0;
    for (int c : current) nonzero += (c != 0);
    if (nonzero >= 1 && nonzero <= u) offsets.push_back(current);
    int i = dim - 1;
    while (i >= 0 && current[i] == 1) {
      current[i] = -1;
      --i;
    }
    if (i < 0) break;
    ++current[i];
  }
  return offsets;
}

std::optional<int> FindPoint(const std::vector<Point>& sorted, const Point& p) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
  if (it == sorted.end() || *it != p) return std::nullopt;
  return static_cast<int>(it - sorted.begin());
}

// Fills c_u adjacency lists over sorted points.
void ConnectCu(DigitalImage::Impl& impl) {
  const int n = static_cast<int>(impl.points.size());
  impl.adjacency_lists.assign(n, {});
  const auto offsets = CuOffsets(impl.dimension, impl.adjacency.u);
  Point probe;
  for (int x = 0; x < n; ++x) {
    for (const auto& offset : offsets) {
      probe.coords = impl.points[x].coords;
      for (int i = 0; i < impl.dimension; ++i) probe.coords[i] += offset[i];
      if (auto y = FindPoint(impl.points, probe); y && *y > x) {
        impl.adjacency_lists[x].push_back(*y);
        impl.adjacency_lists[*y].push_back(x);
      }
    }
  }
}

}  // namespace

std::string Point::ToString() const { return "(" + CommaJoin(coords) + ")"; }

std::string AdjacencyKind::ToString() const {
  switch (type) {
    case Type::kCu:
      return "c" + std::to_string(u);
    case Type::kNpu: {
      std::string out = "NP_" + std::to_string(u) + "(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += ',';
        out += factors[i].ToString();
      }
      return out + ")";
    }
    case Type::kExplicit:
      return "explicit";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// MetricCache

MetricCache::MetricCache(const DigitalImage& image)
    : size_(image.size()),
      dist_(static_cast<std::size_t>(image.size()) * image.size(), kInfinity),
      component_(image.size(), -1) {
  std::vector<int> queue(size_);
  for (int source = 0; source < size_; ++source) {
    std::uint16_t* row = &dist_[static_cast<std::size_t>(source) * size_];
    if (component_[source] < 0) {
      component_[source] = component_count_++;
    }
    int head = 0;
    int tail = 0;
    queue[tail++] = source;
    row[source] = 0;
    while (head < tail) {
      const int x = queue[head++];
      // Saturate one below the sentinel.
      const std::uint16_t next =
          row[x] >= kInfinity - 1 ? kInfinity - 1 : row[x] + 1;
      for (int y : image.neighbors(x)) {
        if (row[y] != kInfinity) continue;
        row[y] = next;
        component_[y] = component_[source];
        queue[tail++] = y;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// DigitalImage

DigitalImage::DigitalImage() : impl_(std::make_shared<Impl>()) {}

int DigitalImage::size() const {
  return static_cast<int>(impl_->adjacency_lists.size());
}
int DigitalImage::dimension() const { return impl_->dimension; }
bool DigitalImage::embedded() const { return impl_->embedded; }
const AdjacencyKind& DigitalImage::adjacency() const {
  return impl_->adjacency;
}

const Point& DigitalImage::point(int x) const {
  if (!impl_->embedded) {
    throw Error(ErrorCode::kNotEmbedded,
                "explicit image has no grid coordinates");
  }
  return impl_->points.at(x);
}

std::span<const Point> DigitalImage::points() const { return impl_->points; }

std::optional<int> DigitalImage::IndexOf(const Point& p) const {
  if (!impl_->embedded) return std::nullopt;
  return FindPoint(impl_->points, p);
}

std::span<const int> DigitalImage::neighbors(int x) const {
  return impl_->adjacency_lists[x];
}

bool DigitalImage::Adjacent(int x, int y) const {
  const auto& list = impl_->adjacency_lists[x];
  return std::binary_search(list.begin(), list.end(), y);
}

std::int64_t DigitalImage::edge_count() const { return impl_->edge_count; }

std::vector<std::pair<int, int>> DigitalImage::Edges() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(impl_->edge_count);
  for (int x = 0; x < size(); ++x) {
    for (int y : neighbors(x)) {
      if (x < y) edges.emplace_back(x, y);
    }
  }
  return edges;
}

std::string DigitalImage::Label(int x) const {
  if (impl_->embedded) return impl_->points[x].ToString();
  return std::to_string(x);
}

const MetricCache& DigitalImage::metric() const {
  std::call_once(impl_->metric_once, [this] {
    impl_->metric = std::make_unique<MetricCache>(*this);
  });
  return *impl_->metric;
}

const ProductStructure* DigitalImage::product() const {
  return impl_->product ? &*impl_->product : nullptr;
}

bool operator==(const DigitalImage& a, const DigitalImage& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->embedded == b.impl_->embedded &&
         a.impl_->points == b.impl_->points &&
         a.impl_->adjacency_lists == b.impl_->adjacency_lists;
}

std::vector<int> CycleIndexing::Positions(int image_size) const {
  std::vector<int> positions(image_size, -1);
  for (int i = 0; i < length(); ++i) positions[order[i]] = i;
  return positions;
}

// ---------------------------------------------------------------------------
// Constructors

DigitalImage BuildFromPoints(int dim, int u, std::vector<Point> points,
                             const BuildLimits& limits) {
  if (dim < 1 || dim > kMaxDimension) {
    throw Error(ErrorCode::kInvalidArgument,
                "dimension " + std::to_string(dim) + " outside [1," +
                    std::to_string(kMaxDimension) + "]");
  }
  if (u < 1 || u > dim) {
    throw Error(ErrorCode::kBadAdjacency,
                "c_" + std::to_string(u) + " is undefined in dimension " +
                    std::to_string(dim));
  }
  CheckBudget(static_cast<std::int64_t>(points.size()), limits);
  for (const Point& p : points) {
    if (p.dimension() != dim) {
      throw Error(ErrorCode::kInvalidArgument,
                  "point " + p.ToString() + " does not have dimension " +
                      std::to_string(dim));
    }
    for (int c : p.coords) {
      if (std::abs(static_cast<long long>(c)) > kMaxCoordinate) {
        throw Error(ErrorCode::kInvalidArgument,
                    "coordinate out of range in " + p.ToString());
      }
    }
  }
  std::sort(points.begin(), points.end());
  if (auto dup = std::adjacent_find(points.begin(), points.end());
      dup != points.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "duplicate point " + dup->ToString());
  }
  auto impl = std::make_shared<DigitalImage::Impl>();
  impl->dimension = dim;
  impl->embedded = true;
  impl->adjacency = AdjacencyKind::Cu(u);
  impl->points = std::move(points);
  ConnectCu(*impl);
  return MakeImage(std::move(impl));
}

DigitalImage BuildBox(std::span<const Interval> intervals, int u,
                      const BuildLimits& limits) {
  const int dim = static_cast<int>(intervals.size());
  if (dim < 1 || dim > kMaxDimension) {
    throw Error(ErrorCode::kInvalidArgument,
                "box needs between 1 and " + std::to_string(kMaxDimension) +
                    " intervals");
  }
  if (u < 1 || u > dim) {
    throw Error(ErrorCode::kBadAdjacency,
                "c_" + std::to_string(u) + " is undefined in dimension " +
                    std::to_string(dim));
  }
  std::int64_t count = 1;
  for (const Interval& iv : intervals) {
    if (iv.lo > iv.hi) {
      throw Error(ErrorCode::kInvalidArgument,
                  "interval [" + std::to_string(iv.lo) + "," +
                      std::to_string(iv.hi) + "] is empty");
    }
    if (std::abs(static_cast<long long>(iv.lo)) > kMaxCoordinate ||
        std::abs(static_cast<long long>(iv.hi)) > kMaxCoordinate) {
      throw Error(ErrorCode::kInvalidArgument, "interval bound out of range");
    }
    count *= static_cast<std::int64_t>(iv.hi) - iv.lo + 1;
    CheckBudget(count, limits);
  }
  std::vector<Point> points;
  points.reserve(count);
  Point current;
  for (const Interval& iv : intervals) current.coords.push_back(iv.lo);
  while (true) {
    points.push_back(current);
    int i = dim - 1;
    while (i >= 0 && current.coords[i] == intervals[i].hi) {
      current.coords[i] = intervals[i].lo;
      --i;
    }
    if (i < 0) break;
    ++current.coords[i];
  }
  return BuildFromPoints(dim, u, std::move(points), limits);
}

DigitalImage BuildBox(std::initializer_list<Interval> intervals, int u,
                      const BuildLimits& limits) {
  return BuildBox(std::span<const Interval>(intervals.begin(), intervals.size()),
                  u, limits);
}

DigitalImage BuildExplicit(int vertex_count,
                           std::span<const std::pair<int, int>> edges) {
  if (vertex_count < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  }
  auto impl = std::make_shared<DigitalImage::Impl>();
  impl->adjacency = AdjacencyKind::Explicit();
  impl->adjacency_lists.assign(vertex_count, {});
  for (const auto& [x, y] : edges) {
    if (x < 0 || y < 0 || x >= vertex_count || y >= vertex_count) {
      throw Error(ErrorCode::kBadEdge,
                  "edge (" + std::to_string(x) + "," + std::to_string(y) +
                      ") out of range");
    }
    if (x == y) {
      throw Error(ErrorCode::kBadEdge,
                  "self-loop at vertex " + std::to_string(x));
    }
    impl->adjacency_lists[x].push_back(y);
    impl->adjacency_lists[y].push_back(x);
  }
  return MakeImage(std::move(impl));
}

DigitalImage BuildExplicit(int vertex_count,
                           std::initializer_list<std::pair<int, int>> edges) {
  return BuildExplicit(vertex_count, std::span<const std::pair<int, int>>(
                                         edges.begin(), edges.size()));
}

CycleImage BuildCycle(int v) {
  if (v < 4) {
    throw Error(ErrorCode::kBadCycleLength,
                "cycle length " + std::to_string(v) + " is below 4");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < v; ++i) edges.emplace_back(i, (i + 1) % v);
  CycleIndexing indexing;
  for (int i = 0; i < v; ++i) indexing.order.push_back(i);
  return {BuildExplicit(v, edges), std::move(indexing)};
}

CycleImage BuildGridCycle(int v) {
  if (v != 4 && (v < 8 || v % 2 != 0)) {
    throw Error(ErrorCode::kBadCycleLength,
                "no c_1 rectangle boundary has " + std::to_string(v) +
                    " points");
  }
  const int width = v == 4 ? 1 : 2;
  const int height = v == 4 ? 1 : v / 2 - 2;
  // Walk the rectangle counterclockwise from the origin.
  std::vector<Point> walk;
  for (int x = 0; x < width; ++x) walk.push_back({{x, 0}});
  for (int y = 0; y < height; ++y) walk.push_back({{width, y}});
  for (int x = width; x > 0; --x) walk.push_back({{x, height}});
  for (int y = height; y > 0; --y) walk.push_back({{0, y}});
  DigitalImage image = BuildFromPoints(2, 1, walk);
  CycleIndexing indexing;
  for (const Point& p : walk) indexing.order.push_back(*image.IndexOf(p));
  return {std::move(image), std::move(indexing)};
}

DigitalImage BuildProduct(std::span<const DigitalImage> factors, int u,
                          const BuildLimits& limits) {
  const int k = static_cast<int>(factors.size());
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "product needs a factor");
  }
  if (u < 1 || u > k) {
    throw Error(ErrorCode::kBadAdjacency,
                "NP_" + std::to_string(u) + " is undefined for " +
                    std::to_string(k) + " factors");
  }
  std::int64_t count = 1;
  bool embedded = true;
  int dimension = 0;
  for (const DigitalImage& f : factors) {
    count *= f.size();
    CheckBudget(count, limits);
    embedded = embedded && f.embedded();
    dimension += f.dimension();
  }
  if (embedded && dimension > kMaxDimension) {
    throw Error(ErrorCode::kInvalidArgument,
                "product dimension exceeds " + std::to_string(kMaxDimension));
  }

  auto impl = std::make_shared<DigitalImage::Impl>();
  std::vector<AdjacencyKind> kinds;
  for (const DigitalImage& f : factors) kinds.push_back(f.adjacency());
  impl->adjacency = AdjacencyKind::Npu(u, std::move(kinds));
  impl->embedded = embedded;
  impl->dimension = embedded ? dimension : 0;

  ProductStructure structure;
  structure.u = u;
  structure.factors.assign(factors.begin(), factors.end());

  // Mixed-radix enumeration, last factor fastest: lexicographic on tuples.
  std::vector<std::int64_t> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * factors[i + 1].size();
  if (count > 0) {
    std::vector<int> tuple(k, 0);
    while (true) {
      structure.tuples.push_back(tuple);
      if (embedded) {
        Point p;
        for (int i = 0; i < k; ++i) {
          const auto& c = factors[i].point(tuple[i]).coords;
          p.coords.insert(p.coords.end(), c.begin(), c.end());
        }
        impl->points.push_back(std::move(p));
      }
      int i = k - 1;
      while (i >= 0 && tuple[i] == factors[i].size() - 1) {
        tuple[i] = 0;
        --i;
      }
      if (i < 0) break;
      ++tuple[i];
    }
  }

  impl->adjacency_lists.assign(count, {});
  for (std::int64_t x = 0; x < count; ++x) {
    const auto& tuple = structure.tuples[x];
    // Depth-first over "stay or step" choices per coordinate.
    struct Frame {
      int factor;
      std::int64_t index;
      int moves;
    };
    std::vector<Frame> stack{{0, 0, 0}};
    while (!stack.empty()) {
      Frame frame = stack.back();
      stack.pop_back();
      if (frame.factor == k) {
        if (frame.moves >= 1 && frame.moves <= u && frame.index > x) {
          impl->adjacency_lists[x].push_back(static_cast<int>(frame.index));
          impl->adjacency_lists[frame.index].push_back(static_cast<int>(x));
        }
        continue;
      }
      const int i = frame.factor;
      stack.push_back(
          {i + 1, frame.index + tuple[i] * stride[i], frame.moves});
      if (frame.moves < u) {
        for (int y : factors[i].neighbors(tuple[i])) {
          stack.push_back({i + 1, frame.index + y * stride[i], frame.moves + 1});
        }
      }
    }
  }
  impl->product = std::move(structure);
  return MakeImage(std::move(impl));
}

Subimage InducedSubimage(const DigitalImage& image, const SubsetMask& mask) {
  CheckMask(image, mask);
  Subimage sub;
  sub.to_ambient = mask.Indices();
  std::vector<int> to_sub(image.size(), -1);
  for (std::size_t i = 0; i < sub.to_ambient.size(); ++i) {
    to_sub[sub.to_ambient[i]] = static_cast<int>(i);
  }
  auto impl = std::make_shared<DigitalImage::Impl>();
  impl->dimension = image.dimension();
  impl->embedded = image.embedded();
  impl->adjacency = image.adjacency();
  impl->adjacency_lists.assign(sub.to_ambient.size(), {});
  for (std::size_t i = 0; i < sub.to_ambient.size(); ++i) {
    const int x = sub.to_ambient[i];
    if (image.embedded()) impl->points.push_back(image.point(x));
    for (int y : image.neighbors(x)) {
      if (to_sub[y] >= 0) impl->adjacency_lists[i].push_back(to_sub[y]);
    }
  }
  sub.image = MakeImage(std::move(impl));
  return sub;
}

// ---------------------------------------------------------------------------
// Queries

SubsetMask Boundary(const DigitalImage& image) {
  if (!image.embedded()) {
    throw Error(ErrorCode::kNotEmbedded,
                "boundary requires a grid-embedded image");
  }
  SubsetMask boundary(image.size());
  Point probe;
  for (int x = 0; x < image.size(); ++x) {
    for (int axis = 0; axis < image.dimension() && !boundary.test(x); ++axis) {
      for (int step : {-1, 1}) {
        probe = image.point(x);
        probe.coords[axis] += step;
        if (!image.IndexOf(probe)) {
          boundary.set(x);
          break;
        }
      }
    }
  }
  return boundary;
}

std::optional<std::vector<Interval>> BoxExtents(const DigitalImage& image) {
  if (!image.embedded()) {
    throw Error(ErrorCode::kNotEmbedded, "box extents need grid coordinates");
  }
  if (image.size() == 0) return std::nullopt;
  std::vector<Interval> extents;
  for (int axis = 0; axis < image.dimension(); ++axis) {
    Interval iv{std::numeric_limits<int>::max(),
                std::numeric_limits<int>::min()};
    for (const Point& p : image.points()) {
      iv.lo = std::min(iv.lo, p.coords[axis]);
      iv.hi = std::max(iv.hi, p.coords[axis]);
    }
    extents.push_back(iv);
  }
  std::int64_t volume = 1;
  for (const Interval& iv : extents) {
    volume *= static_cast<std::int64_t>(iv.hi) - iv.lo + 1;
  }
  if (volume != image.size()) return std::nullopt;
  return extents;
}

SubsetMask Corners(const DigitalImage& image) {
  auto extents = BoxExtents(image);
  if (!extents) {
    throw Error(ErrorCode::kInvalidArgument, "image is not a grid box");
  }
  SubsetMask corners(image.size());
  for (int x = 0; x < image.size(); ++x) {
    const auto& coords = image.point(x).coords;
    bool extremal = true;
    for (int axis = 0; axis < image.dimension(); ++axis) {
      const Interval& iv = (*extents)[axis];
      extremal = extremal && (coords[axis] == iv.lo || coords[axis] == iv.hi);
    }
    if (extremal) corners.set(x);
  }
  return corners;
}

MetricCache ComputeMetric(const DigitalImage& image) {
  return MetricCache(image);
}

int Diameter(const DigitalImage& image) {
  if (image.size() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "diameter of the empty image");
  }
  const MetricCache& d = image.metric();
  if (!d.connected()) {
    throw Error(ErrorCode::kDisconnected, "diameter of a disconnected image");
  }
  int diameter = 0;
  for (int x = 0; x < image.size(); ++x) {
    for (int y = x + 1; y < image.size(); ++y) {
      diameter = std::max<int>(diameter, d(x, y));
    }
  }
  return diameter;
}

int SubsetDiameter(const DigitalImage& image, const SubsetMask& subset) {
  CheckMask(image, subset);
  const auto members = subset.Indices();
  if (members.empty()) {
    throw Error(ErrorCode::kEmptySubset, "diameter of an empty subset");
  }
  const MetricCache& d = image.metric();
  int diameter = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!d.finite(members[i], members[j])) {
        throw Error(ErrorCode::kDisconnected,
                    "subset spans several components");
      }
      diameter = std::max<int>(diameter, d(members[i], members[j]));
    }
  }
  return diameter;
}

SubsetMask NStar(const DigitalImage& image, int x, int m) {
  CheckIndex(image, x);
  SubsetMask ball(image.size());
  const MetricCache& d = image.metric();
  for (int y = 0; y < image.size(); ++y) {
    if (d.finite(x, y) && d(x, y) <= m) ball.set(y);
  }
  return ball;
}

std::optional<std::vector<int>> UniqueShortestPath(const DigitalImage& image,
                                                   int x, int y) {
  CheckIndex(image, x);
  CheckIndex(image, y);
  const MetricCache& d = image.metric();
  if (!d.finite(x, y)) {
    throw Error(ErrorCode::kDisconnected,
                "vertices " + image.Label(x) + " and " + image.Label(y) +
                    " lie in different components");
  }
  // Number of shortest paths from x, saturated at 2.
  std::vector<int> paths(image.size(), 0);
  std::vector<int> by_distance;
  for (int z = 0; z < image.size(); ++z) {
    if (d.finite(x, z) && d(x, z) <= d(x, y)) by_distance.push_back(z);
  }
  std::stable_sort(by_distance.begin(), by_distance.end(),
                   [&](int a, int b) { return d(x, a) < d(x, b); });
  paths[x] = 1;
  for (int z : by_distance) {
    if (z == x) continue;
    int total = 0;
    for (int w : image.neighbors(z)) {
      if (d.finite(x, w) && d(x, w) + 1 == d(x, z)) total += paths[w];
    }
    paths[z] = std::min(total, 2);
  }
  if (paths[y] != 1) return std::nullopt;
  std::vector<int> path{y};
  int current = y;
  while (current != x) {
    for (int w : image.neighbors(current)) {
      if (d(x, w) + 1 == d(x, current) && paths[w] > 0) {
        current = w;
        break;
      }
    }
    path.push_back(current);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool IsKCover(const DigitalImage& image, const SubsetMask& subset, int k) {
  CheckMask(image, subset);
  const MetricCache& d = image.metric();
  const auto members = subset.Indices();
  for (int x = 0; x < image.size(); ++x) {
    bool covered = false;
    for (int a : members) {
      if (d.finite(x, a) && d(x, a) <= k) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

SubsetMask Leaves(const DigitalImage& image) {
  SubsetMask leaves(image.size());
  for (int x = 0; x < image.size(); ++x) {
    if (image.degree(x) == 1) leaves.set(x);
  }
  return leaves;
}

bool IsTree(const DigitalImage& image) {
  return image.size() > 0 && image.connected() &&
         image.edge_count() == image.size() - 1;
}

SubsetMask ProjectToFactor(const DigitalImage& product_image,
                           const SubsetMask& subset, int factor) {
  const ProductStructure* structure = product_image.product();
  if (structure == nullptr) {
    throw Error(ErrorCode::kNotAProduct, "image was not built as a product");
  }
  CheckMask(product_image, subset);
  if (factor < 0 || factor >= static_cast<int>(structure->factors.size())) {
    throw Error(ErrorCode::kInvalidArgument,
                "factor " + std::to_string(factor) + " out of range");
  }
  SubsetMask projection(structure->factors[factor].size());
  for (int x : subset.Indices()) projection.set(structure->tuples[x][factor]);
  return projection;
}

}  // namespace digitop
