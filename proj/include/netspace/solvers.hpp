#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "netspace/errors.hpp"
#include "netspace/graphspace.hpp"
#include "netspace/loss.hpp"
#include "netspace/ltprocess.hpp"

namespace netspace {

inline constexpr double kUnlimitedBudget = std::numeric_limits<double>::infinity();

/// Largest labeled-node count the exhaustive oracle will enumerate.
inline constexpr std::size_t kOracleGuard = 20;

/// A realized graph together with a seed set that realizes the labels on it.
struct Solution {
  RealizedGraph graph;
  SeedSet seeds;
  double loss_total = 0.0;

  std::size_t k() const { return seeds.size(); }

  bool operator==(const Solution &) const = default;
};

enum class InfeasibleReason { NoSolutionAtBudget, NoLabeledSeedPossible };

inline std::string_view to_string(InfeasibleReason r) {
  switch (r) {
  case InfeasibleReason::NoSolutionAtBudget:
    return "NO_SOLUTION_AT_BUDGET";
  case InfeasibleReason::NoLabeledSeedPossible:
    return "NO_LABELED_SEED_POSSIBLE";
  }
  return "UNKNOWN";
}

struct Infeasible {
  InfeasibleReason reason;
  bool operator==(const Infeasible &) const = default;
};

/// Either a Solution or an Infeasible verdict from a completed search.
class SolveOutcome {
public:
  SolveOutcome(Solution s) : value_(std::move(s)) {}
  SolveOutcome(Infeasible i) : value_(i) {}

  bool feasible() const { return std::holds_alternative<Solution>(value_); }
  const Solution &solution() const { return std::get<Solution>(value_); }
  InfeasibleReason reason() const { return std::get<Infeasible>(value_).reason; }

  bool operator==(const SolveOutcome &) const = default;

private:
  std::variant<Solution, Infeasible> value_;
};

inline Solution make_solution(const GraphSpace &space, RealizedGraph graph, SeedSet seeds) {
  const double loss = graph_loss(space, graph).total;
  return Solution{std::move(graph), std::move(seeds), loss};
}

namespace detail {

using Adjacency = std::vector<std::vector<std::pair<NodeId, double>>>;

inline void check_budget(double lambda) {
  if (std::isnan(lambda) || lambda < 0.0)
    throw InputError("budget lambda must be nonnegative");
}

inline bool is_labeled_set(const std::vector<int> &round_of, const GraphSpace &space) {
  for (NodeId v = 0; v < space.size(); ++v)
    if ((round_of[v] >= 0) != space.labeled(v))
      return false;
  return true;
}

/// Connected components of labeled nodes over positive labeled-labeled
/// edges, each sorted, ordered by smallest member.
inline std::vector<std::vector<NodeId>> labeled_components(const RealizedGraph &graph, const GraphSpace &space) {
  const std::size_t n = space.size();
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), NodeId{0});
  auto find = [&](NodeId x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &[pair, w] : graph.weights()) {
    if (!space.labeled(pair.lo) || !space.labeled(pair.hi))
      continue;
    const NodeId a = find(pair.lo), b = find(pair.hi);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<NodeId>> comps;
  std::vector<int> slot(n, -1);
  for (NodeId v = 0; v < n; ++v) {
    if (!space.labeled(v))
      continue;
    const NodeId r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(slot[r])].push_back(v);
  }
  return comps;
}

} // namespace detail

/// Per-component greedy seed selection on a fixed graph: inside each
/// component, keep adding the node whose addition activates the most
/// component nodes (ties to the lowest id) until the component is covered.
/// The result is the union over components.
inline SeedSet greedy_component_seeds(const RealizedGraph &graph, const GraphSpace &space) {
  const auto adj = adjacency(graph);
  const auto thresholds = space.thresholds();
  SeedSet all;
  for (const auto &comp : detail::labeled_components(graph, space)) {
    SeedSet chosen;
    std::size_t covered = 0;
    std::vector<int> round_of(space.size(), -1);
    while (covered < comp.size()) {
      std::size_t best_cover = 0;
      NodeId best = comp.front();
      std::vector<int> best_rounds;
      for (NodeId cand : comp) {
        if (round_of[cand] >= 0)
          continue;
        SeedSet trial = chosen;
        trial.insert(cand);
        auto r = detail::lt_rounds(adj, thresholds, trial);
        const auto cover = static_cast<std::size_t>(
            std::count_if(comp.begin(), comp.end(), [&](NodeId v) { return r[v] >= 0; }));
        if (cover > best_cover) {
          best_cover = cover;
          best = cand;
          best_rounds = std::move(r);
        }
      }
      chosen.insert(best);
      covered = best_cover;
      round_of = std::move(best_rounds);
    }
    for (NodeId s : chosen)
      all.insert(s);
  }
  return all;
}

/// Greedy seed selection on a fixed graph, checked for realization. The
/// labels are realizable on a fixed graph iff the labeled set is closed under
/// the process, so a failure here means no seed set works on this graph.
inline SolveOutcome greedy_min_seeds(const RealizedGraph &graph, const GraphSpace &space) {
  auto seeds = greedy_component_seeds(graph, space);
  if (!realizes(graph, space, seeds))
    return Infeasible{InfeasibleReason::NoLabeledSeedPossible};
  return make_solution(space, graph, std::move(seeds));
}

/// Seeds every labeled node and cuts every pair touching an unlabeled node.
inline Solution solve_trivial(const GraphSpace &space) {
  RealizedGraph g(space.size());
  for (const auto &[pair, dist] : space.distributions())
    if (space.labeled(pair.lo) && space.labeled(pair.hi))
      g.set(pair, dist.mode());
  return make_solution(space, std::move(g), SeedSet(space.labeled_nodes()));
}

/// k = 1 star: the lowest labeled node c is the only seed and gets a
/// weight-1 edge to every other labeled node; all other pairs are 0.
inline SolveOutcome solve_unconstrained(const GraphSpace &space) {
  const auto labeled = space.labeled_nodes();
  RealizedGraph g(space.size());
  if (labeled.empty())
    return make_solution(space, std::move(g), SeedSet{});
  const NodeId center = labeled.front();
  for (NodeId j : labeled)
    if (j != center)
      g.set(NodePair::of(center, j), 1.0);
  return make_solution(space, std::move(g), SeedSet{center});
}

/// Binary restriction: pairs touching an unlabeled node are 0; each
/// labeled-labeled pair takes whichever of {0,1} has the lower edge loss
/// (ties to 0).
inline RealizedGraph binarized_graph(const GraphSpace &space) {
  RealizedGraph g(space.size());
  for (const auto &[pair, dist] : space.distributions()) {
    if (!space.labeled(pair.lo) || !space.labeled(pair.hi))
      continue;
    if (edge_loss(dist, 1.0) < edge_loss(dist, 0.0))
      g.set(pair, 1.0);
  }
  return g;
}

/// Budgeted solver: binarize, seed each labeled component greedily, then if
/// over budget revert the costliest edges toward lower-loss values while the
/// labels stay realizable (reseeding greedily after every accepted revert).
inline SolveOutcome solve_budgeted(const GraphSpace &space, double lambda) {
  detail::check_budget(lambda);
  if (std::isinf(lambda))
    return solve_unconstrained(space);

  RealizedGraph graph = binarized_graph(space);
  auto outcome = greedy_min_seeds(graph, space);
  if (!outcome.feasible())
    return Infeasible{InfeasibleReason::NoSolutionAtBudget};
  Solution current = outcome.solution();
  if (current.loss_total <= lambda)
    return current;

  bool changed = true;
  while (changed) {
    changed = false;
    const auto report = graph_loss(space, current.graph);
    std::vector<std::pair<NodePair, double>> costly(report.per_edge.begin(), report.per_edge.end());
    std::stable_sort(costly.begin(), costly.end(), [](const auto &a, const auto &b) { return a.second > b.second; });

    for (const auto &[pair, cost] : costly) {
      const auto &dist = space.dist(pair);
      std::vector<double> targets(dist.support().begin(), dist.support().end());
      targets.push_back(0.0);
      targets.push_back(1.0);
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      std::erase_if(targets, [&](double w) { return !(edge_loss(dist, w) < cost); });
      std::stable_sort(targets.begin(), targets.end(),
                       [&](double a, double b) { return edge_loss(dist, a) < edge_loss(dist, b); });

      for (double w : targets) {
        RealizedGraph trial = current.graph;
        trial.set(pair, w);
        auto reseeded = greedy_min_seeds(trial, space);
        if (!reseeded.feasible())
          continue;
        current = reseeded.solution();
        changed = true;
        if (current.loss_total <= lambda)
          return current;
        break;
      }
    }
  }
  return Infeasible{InfeasibleReason::NoSolutionAtBudget};
}

namespace detail {

/// Exhaustive search over labeled subsets of size <= max_size, by size then
/// lexicographically. Returns the first realizing set.
inline std::optional<SeedSet> enumerate_min_seeds(const RealizedGraph &graph, const GraphSpace &space,
                                                  std::size_t max_size) {
  const auto labeled = space.labeled_nodes();
  if (labeled.size() > kOracleGuard)
    throw GuardExceeded("exhaustive seed search supports at most " + std::to_string(kOracleGuard) +
                        " labeled nodes, instance has " + std::to_string(labeled.size()));
  if (graph.size() != space.size())
    throw InputError("graph has " + std::to_string(graph.size()) + " nodes but the space has " +
                     std::to_string(space.size()));
  const auto adj = adjacency(graph);
  const std::size_t m = labeled.size();
  for (std::size_t size = 0; size <= std::min(m, max_size); ++size) {
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      std::vector<NodeId> members;
      members.reserve(size);
      for (auto i : idx)
        members.push_back(labeled[i]);
      SeedSet seeds(std::move(members));
      if (is_labeled_set(lt_rounds(adj, space.thresholds(), seeds), space))
        return seeds;
      // advance to the next combination in lexicographic order
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == m - size + pos - 1)
        --pos;
      if (pos == 0)
        break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < size; ++j)
        idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

} // namespace detail

/// Exact minimum-k seed set on a fixed graph by exhaustive enumeration.
inline SolveOutcome brute_force_min_seeds(const RealizedGraph &graph, const GraphSpace &space) {
  auto seeds = detail::enumerate_min_seeds(graph, space, std::numeric_limits<std::size_t>::max());
  if (!seeds)
    return Infeasible{InfeasibleReason::NoLabeledSeedPossible};
  return make_solution(space, graph, std::move(*seeds));
}

/// Hill climbing over single labeled-labeled edge moves. A move sets one
/// pair to a support value or to 0/1 and is accepted only when it keeps the
/// loss within lambda and admits a strictly smaller seed set. max_iters
/// bounds the number of moves evaluated.
inline Solution local_search_improve(const GraphSpace &space, const Solution &start, double lambda,
                                     std::size_t max_iters) {
  detail::check_budget(lambda);
  const double start_loss = graph_loss(space, start.graph).total;
  if (start_loss > lambda)
    throw ContractViolation("start solution loss " + std::to_string(start_loss) + " exceeds budget " +
                            std::to_string(lambda));
  if (!realizes(start.graph, space, start.seeds))
    throw ContractViolation("start solution does not realize the labels");

  const auto labeled = space.labeled_nodes();
  const bool exact = labeled.size() <= kOracleGuard;
  Solution best = start;
  best.loss_total = start_loss;
  std::size_t iters = 0;

  bool improved = true;
  while (improved && best.k() > 0) {
    improved = false;
    const auto report = graph_loss(space, best.graph);
    for (std::size_t a = 0; a < labeled.size() && !improved; ++a) {
      for (std::size_t b = a + 1; b < labeled.size() && !improved; ++b) {
        const auto pair = NodePair::of(labeled[a], labeled[b]);
        const auto &dist = space.dist(pair);
        const double old_w = best.graph.weight(pair);
        const auto old_it = report.per_edge.find(pair);
        const double old_loss = old_it == report.per_edge.end() ? 0.0 : old_it->second;

        std::vector<double> values(dist.support().begin(), dist.support().end());
        values.push_back(0.0);
        values.push_back(1.0);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());

        for (double w : values) {
          if (w == old_w)
            continue;
          if (iters >= max_iters)
            return best;
          ++iters;
          if (best.loss_total - old_loss + edge_loss(dist, w) > lambda)
            continue;
          RealizedGraph trial = best.graph;
          trial.set(pair, w);
          std::optional<SeedSet> seeds;
          if (exact) {
            seeds = detail::enumerate_min_seeds(trial, space, best.k() - 1);
          } else {
            auto g = greedy_min_seeds(trial, space);
            if (g.feasible() && g.solution().k() < best.k())
              seeds = g.solution().seeds;
          }
          if (!seeds)
            continue;
          Solution next = make_solution(space, std::move(trial), std::move(*seeds));
          if (next.loss_total > lambda)
            continue;
          best = std::move(next);
          improved = true;
          break;
        }
      }
    }
  }
  return best;
}

} // namespace netspace
