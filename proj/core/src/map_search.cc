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

#include "digitop/map_search.h"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <string>
#include <thread>

#include "digitop/error.h"

namespace digitop {
namespace {

constexpr int kUnassigned = PartialMap::kUnassigned;

// Precomputed search plan shared by all branches.
struct Plan {
  const DigitalImage* domain;
  const DigitalImage* codomain;
  std::vector<int> order;
  std::vector<int> anchor;  // by position; -1 for component roots
  // allowed[x][y] != 0 when x may map to y; empty inner vector = all.
  std::vector<std::vector<char>> allowed;
  // Largest d(x, y) over allowed y, for the displacement bound.
  std::vector<int> allowed_radius;
  std::optional<int> displacement_above;
  // reach[(x * n + c) * span + r]: largest d(x, y) over y with d(c, y) <= r.
  std::vector<int> reach;
  int reach_span = 0;
  std::vector<int> root_candidates;
};

Plan MakePlan(const DigitalImage& domain, const DigitalImage& codomain,
              const MapConstraints& constraints) {
  const int n = domain.size();
  Plan plan;
  plan.domain = &domain;
  plan.codomain = &codomain;
  plan.order = constraints.order.empty() ? BfsOrder(domain, {})
                                         : constraints.order;
  if (static_cast<int>(plan.order.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "assignment order must list every domain vertex");
  }
  std::vector<int> position(n, -1);
  for (int k = 0; k < n; ++k) {
    const int x = plan.order[k];
    if (x < 0 || x >= n || position[x] >= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "assignment order is not a permutation");
    }
    position[x] = k;
  }
  plan.anchor.assign(n, -1);
  for (int k = 0; k < n; ++k) {
    int best = -1;
    for (int y : domain.neighbors(plan.order[k])) {
      if (position[y] < k && (best < 0 || position[y] < position[best])) {
        best = y;
      }
    }
    plan.anchor[k] = best;
  }

  plan.allowed.assign(n, {});
  plan.allowed_radius.assign(n, std::numeric_limits<int>::max());
  if (!constraints.allowed.empty()) {
    if (static_cast<int>(constraints.allowed.size()) != n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "allowed-set list must have one entry per domain vertex");
    }
    for (int x = 0; x < n; ++x) {
      const SubsetMask& mask = constraints.allowed[x];
      if (mask.universe_size() == 0) continue;
      if (mask.universe_size() != codomain.size()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "allowed set does not match the codomain");
      }
      plan.allowed[x].assign(codomain.size(), 0);
      for (int y : mask.Indices()) plan.allowed[x][y] = 1;
    }
  }

  plan.displacement_above = constraints.require_displacement_above;
  if (plan.displacement_above) {
    if (!(domain == codomain)) {
      throw Error(ErrorCode::kDomainMismatch,
                  "displacement constraints need a self-map");
    }
    const MetricCache& d = domain.metric();
    for (int x = 0; x < n; ++x) {
      int radius = 0;
      for (int y = 0; y < n; ++y) {
        if (!plan.allowed[x].empty() && !plan.allowed[x][y]) continue;
        radius = d.finite(x, y) ? std::max<int>(radius, d(x, y))
                                : std::numeric_limits<int>::max();
      }
      plan.allowed_radius[x] = radius;
    }
    int span = 1;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (d.finite(x, y)) span = std::max(span, d(x, y) + 1);
      }
    }
    plan.reach_span = span;
    plan.reach.assign(static_cast<std::size_t>(n) * n * span,
                      std::numeric_limits<int>::max());
    for (int x = 0; x < n; ++x) {
      for (int c = 0; c < n; ++c) {
        int* row = &plan.reach[(static_cast<std::size_t>(x) * n + c) * span];
        if (!d.finite(x, c)) continue;
        std::fill(row, row + span, 0);
        for (int y = 0; y < n; ++y) {
          if (!d.finite(c, y)) continue;
          row[d(c, y)] = std::max<int>(row[d(c, y)], d(x, y));
        }
        for (int r = 1; r < span; ++r) row[r] = std::max(row[r], row[r - 1]);
      }
    }
  }

  if (n > 0) {
    const int root = plan.order[0];
    for (int y = 0; y < codomain.size(); ++y) {
      if (plan.allowed[root].empty() || plan.allowed[root][y]) {
        plan.root_candidates.push_back(y);
      }
    }
  }
  return plan;
}

class BranchSearch {
 public:
  using Visitor = std::function<bool(std::span<const int>)>;

  BranchSearch(const Plan& plan, std::int64_t node_cap, const Visitor& visit)
      : plan_(plan),
        dx_(plan.domain->metric()),
        dy_(plan.codomain->metric()),
        n_(plan.domain->size()),
        node_cap_(node_cap),
        visit_(visit),
        table_(n_, kUnassigned),
        displacement_(n_, 0),
        candidates_(n_) {}

  // Explores the subtree where order[0] maps to root. Returns false when
  // the search must stop (visitor or budget).
  bool RunBranch(int root) {
    if (n_ == 0) return Complete();
    return TryAssign(0, root);
  }

  // Empty domain: exactly one (empty) map.
  bool RunEmpty() { return Complete(); }

  std::int64_t nodes() const { return nodes_; }
  bool budget_hit() const { return budget_hit_; }

 private:
  bool Complete() {
    if (plan_.displacement_above) {
      int worst = 0;
      for (int x = 0; x < n_; ++x) worst = std::max(worst, displacement_[x]);
      if (worst <= *plan_.displacement_above) return true;
    }
    return visit_(table_);
  }

  bool Consistent(int k, int x, int y) const {
    if (!plan_.allowed[x].empty() && !plan_.allowed[x][y]) return false;
    for (int j = 0; j < k; ++j) {
      const int q = plan_.order[j];
      if (!dx_.finite(x, q)) continue;
      if (dy_(y, table_[q]) > dx_(x, q)) return false;
    }
    return true;
  }

  // True when no completion can move a vertex farther than the threshold.
  bool CannotExceedDisplacement(int k) const {
    const int limit = *plan_.displacement_above;
    for (int j = 0; j <= k; ++j) {
      if (displacement_[plan_.order[j]] > limit) return false;
    }
    for (int j = k + 1; j < n_; ++j) {
      const int x = plan_.order[j];
      // f(x) lies within d(x, p) of f(p).
      int bound = plan_.allowed_radius[x];
      for (int i = 0; i <= k && bound > limit; ++i) {
        const int p = plan_.order[i];
        if (!dx_.finite(x, p)) continue;
        const std::size_t cell =
            (static_cast<std::size_t>(x) * n_ + table_[p]) * plan_.reach_span +
            dx_(x, p);
        bound = std::min(bound, plan_.reach[cell]);
      }
      if (bound > limit) return false;
    }
    return true;
  }

  bool TryAssign(int k, int y) {
    const int x = plan_.order[k];
    if (!Consistent(k, x, y)) return true;
    if (++nodes_ > node_cap_) {
      budget_hit_ = true;
      return false;
    }
    table_[x] = y;
    if (plan_.displacement_above) {
      displacement_[x] = dx_(x, y);
    }
    bool keep_going = true;
    if (plan_.displacement_above && CannotExceedDisplacement(k)) {
      // Pruned.
    } else if (k + 1 == n_) {
      keep_going = Complete();
    } else {
      keep_going = Descend(k + 1);
    }
    table_[x] = kUnassigned;
    displacement_[x] = 0;
    return keep_going;
  }

  bool Descend(int k) {
    std::vector<int>& candidates = candidates_[k];
    candidates.clear();
    const int anchor = plan_.anchor[k];
    if (anchor < 0) {
      for (int y = 0; y < plan_.codomain->size(); ++y) candidates.push_back(y);
    } else {
      const int center = table_[anchor];
      const auto around = plan_.codomain->neighbors(center);
      auto it = std::lower_bound(around.begin(), around.end(), center);
      candidates.assign(around.begin(), it);
      candidates.push_back(center);
      candidates.insert(candidates.end(), it, around.end());
    }
    for (int y : candidates) {
      if (!TryAssign(k, y)) return false;
    }
    return true;
  }

  const Plan& plan_;
  const MetricCache& dx_;
  const MetricCache& dy_;
  const int n_;
  const std::int64_t node_cap_;
  const Visitor& visit_;
  std::vector<int> table_;
  std::vector<int> displacement_;
  std::vector<std::vector<int>> candidates_;
  std::int64_t nodes_ = 0;
  bool budget_hit_ = false;
};

void CheckVertexBudget(const DigitalImage& domain, const SearchLimits& limits) {
  if (domain.size() > limits.max_vertices) {
    throw Error(ErrorCode::kBudgetExceeded,
                "image has " + std::to_string(domain.size()) +
                    " vertices; map enumeration budget is " +
                    std::to_string(limits.max_vertices));
  }
}

// Per-branch outcome of a parallel run.
struct BranchOutcome {
  std::int64_t nodes = 0;
  bool budget_hit = false;
  bool found = false;
  std::vector<std::vector<int>> tables;
};

// Runs every top-level branch on a worker pool. When first_only, a branch
// stops at its first map.
std::vector<BranchOutcome> RunBranchesInParallel(const Plan& plan,
                                                 const SearchLimits& limits,
                                                 bool first_only) {
  const int branches = static_cast<int>(plan.root_candidates.size());
  std::vector<BranchOutcome> outcomes(branches);
  std::atomic<int> next{0};
  auto worker = [&] {
    while (true) {
      const int b = next.fetch_add(1);
      if (b >= branches) return;
      BranchOutcome& out = outcomes[b];
      BranchSearch::Visitor visit = [&](std::span<const int> table) {
        out.found = true;
        out.tables.emplace_back(table.begin(), table.end());
        return !first_only;
      };
      BranchSearch search(plan, limits.max_nodes, visit);
      search.RunBranch(plan.root_candidates[b]);
      out.nodes = search.nodes();
      out.budget_hit = search.budget_hit();
    }
  };
  const int workers = std::max(1, std::min(limits.threads, branches));
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return outcomes;
}

}  // namespace

std::vector<int> BfsOrder(const DigitalImage& image,
                          std::span<const int> roots) {
  const int n = image.size();
  std::vector<char> seen(n, 0);
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> sorted_roots(roots.begin(), roots.end());
  std::sort(sorted_roots.begin(), sorted_roots.end());
  std::deque<int> queue;
  for (int r : sorted_roots) {
    if (r < 0 || r >= n) {
      throw Error(ErrorCode::kInvalidArgument, "BFS root out of range");
    }
    if (!seen[r]) {
      seen[r] = 1;
      queue.push_back(r);
    }
  }
  int next_unseen = 0;
  while (static_cast<int>(order.size()) < n) {
    if (queue.empty()) {
      while (seen[next_unseen]) ++next_unseen;
      seen[next_unseen] = 1;
      queue.push_back(next_unseen);
    }
    const int x = queue.front();
    queue.pop_front();
    order.push_back(x);
    for (int y : image.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return order;
}

SearchStats ForEachContinuousMap(
    const DigitalImage& domain, const DigitalImage& codomain,
    const MapConstraints& constraints, const SearchLimits& limits,
    const std::function<bool(std::span<const int>)>& visit) {
  const Plan plan = MakePlan(domain, codomain, constraints);
  SearchStats stats;
  if (domain.size() == 0) {
    BranchSearch search(plan, limits.max_nodes, visit);
    if (!search.RunEmpty()) stats.status = SearchStatus::kStopped;
    return stats;
  }
  for (int root : plan.root_candidates) {
    BranchSearch search(plan, limits.max_nodes - stats.nodes, visit);
    const bool keep_going = search.RunBranch(root);
    stats.nodes += search.nodes();
    if (search.budget_hit()) {
      stats.nodes = limits.max_nodes + 1;
      stats.status = SearchStatus::kBudgetExceeded;
      return stats;
    }
    if (!keep_going) {
      stats.status = SearchStatus::kStopped;
      return stats;
    }
  }
  return stats;
}

FirstMapResult FindFirstContinuousMap(const DigitalImage& domain,
                                      const DigitalImage& codomain,
                                      const MapConstraints& constraints,
                                      const SearchLimits& limits) {
  FirstMapResult result;
  if (limits.threads <= 1 || domain.size() == 0) {
    result.stats = ForEachContinuousMap(
        domain, codomain, constraints, limits, [&](std::span<const int> t) {
          result.table.emplace(t.begin(), t.end());
          return false;
        });
    return result;
  }
  const Plan plan = MakePlan(domain, codomain, constraints);
  const auto outcomes = RunBranchesInParallel(plan, limits, /*first_only=*/true);
  // Replay in branch order so the outcome matches a sequential run.
  for (const BranchOutcome& out : outcomes) {
    result.stats.nodes += out.nodes;
    if (out.budget_hit || result.stats.nodes > limits.max_nodes) {
      result.stats.nodes = limits.max_nodes + 1;
      result.stats.status = SearchStatus::kBudgetExceeded;
      return result;
    }
    if (out.found) {
      result.table = out.tables.front();
      result.stats.status = SearchStatus::kStopped;
      return result;
    }
  }
  return result;
}

std::vector<std::vector<int>> CollectContinuousMaps(
    const DigitalImage& domain, const DigitalImage& codomain,
    const MapConstraints& constraints, const SearchLimits& limits) {
  std::vector<std::vector<int>> maps;
  auto fail = [&] {
    throw Error(ErrorCode::kBudgetExceeded,
                "node budget of " + std::to_string(limits.max_nodes) +
                    " exhausted while collecting maps");
  };
  if (limits.threads <= 1 || domain.size() == 0) {
    const SearchStats stats = ForEachContinuousMap(
        domain, codomain, constraints, limits, [&](std::span<const int> t) {
          maps.emplace_back(t.begin(), t.end());
          return true;
        });
    if (stats.status == SearchStatus::kBudgetExceeded) fail();
    return maps;
  }
  const Plan plan = MakePlan(domain, codomain, constraints);
  auto outcomes = RunBranchesInParallel(plan, limits, /*first_only=*/false);
  std::int64_t nodes = 0;
  for (BranchOutcome& out : outcomes) {
    nodes += out.nodes;
    if (out.budget_hit || nodes > limits.max_nodes) fail();
    for (auto& t : out.tables) maps.push_back(std::move(t));
  }
  return maps;
}

SearchStats EnumerateContinuousSelfMaps(
    const DigitalImage& image, const SearchLimits& limits,
    const std::function<bool(std::span<const int>)>& visit) {
  CheckVertexBudget(image, limits);
  const SearchStats stats =
      ForEachContinuousMap(image, image, MapConstraints{}, limits, visit);
  if (stats.status == SearchStatus::kBudgetExceeded) {
    throw Error(ErrorCode::kBudgetExceeded,
                "node budget of " + std::to_string(limits.max_nodes) +
                    " exhausted while enumerating self-maps");
  }
  return stats;
}

std::vector<MapTable> ContinuousSelfMaps(const DigitalImage& image,
                                         const SearchLimits& limits) {
  CheckVertexBudget(image, limits);
  std::vector<MapTable> maps;
  for (auto& t : CollectContinuousMaps(image, image, MapConstraints{}, limits)) {
    maps.emplace_back(image, std::move(t));
  }
  return maps;
}

namespace {

MapConstraints CounterexampleConstraints(const DigitalImage& image,
                                         const SubsetMask& a, int m, int n) {
  if (!image.connected()) {
    throw Error(ErrorCode::kDisconnected,
                "limiting queries need a connected image");
  }
  if (a.universe_size() != image.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "subset does not belong to the image");
  }
  if (m < 0 || n < 0) {
    throw Error(ErrorCode::kInvalidArgument, "m and n must be nonnegative");
  }
  MapConstraints constraints;
  const auto members = a.Indices();
  constraints.order = BfsOrder(image, members);
  constraints.allowed.assign(image.size(), SubsetMask());
  for (int x : members) constraints.allowed[x] = NStar(image, x, m);
  constraints.require_displacement_above = n;
  return constraints;
}

}  // namespace

CounterexampleResult SearchCounterexample(const DigitalImage& image,
                                          const SubsetMask& a, int m, int n,
                                          const SearchLimits& limits) {
  CheckVertexBudget(image, limits);
  const MapConstraints constraints = CounterexampleConstraints(image, a, m, n);
  FirstMapResult first =
      FindFirstContinuousMap(image, image, constraints, limits);
  CounterexampleResult result;
  result.status = first.stats.status;
  result.nodes = first.stats.nodes;
  if (first.table) result.witness.emplace(image, std::move(*first.table));
  return result;
}

SearchStats ForEachCounterexample(
    const DigitalImage& image, const SubsetMask& a, int m, int n,
    const SearchLimits& limits,
    const std::function<bool(std::span<const int>)>& visit) {
  CheckVertexBudget(image, limits);
  return ForEachContinuousMap(image, image,
                              CounterexampleConstraints(image, a, m, n),
                              limits, visit);
}

}  // namespace digitop
