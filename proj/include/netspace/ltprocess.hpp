#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "netspace/errors.hpp"
#include "netspace/graphspace.hpp"

namespace netspace {

/// Sorted set of distinct seed nodes.
class SeedSet {
public:
  SeedSet() = default;

  explicit SeedSet(std::vector<NodeId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw InputError("seed set contains duplicate nodes");
  }

  SeedSet(std::initializer_list<NodeId> members) : SeedSet(std::vector<NodeId>(members)) {}

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(NodeId v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  std::span<const NodeId> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  void insert(NodeId v) {
    const auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v)
      members_.insert(it, v);
  }

  bool operator==(const SeedSet &) const = default;

private:
  std::vector<NodeId> members_;
};

/// Newly activated nodes per round (round 0 holds the seeds) and the final
/// active set. Every node list is ascending.
struct CascadeTrace {
  std::vector<std::vector<NodeId>> rounds;
  std::vector<NodeId> final_active;

  bool operator==(const CascadeTrace &) const = default;
};

namespace detail {

inline void check_seeds(const SeedSet &seeds, std::size_t n) {
  for (NodeId s : seeds)
    if (s >= n)
      throw InputError("seed " + std::to_string(s) + " is outside [0, " + std::to_string(n) + ")");
}

/// Synchronous LT closure on prebuilt adjacency; returns the activation
/// round of each node, or -1 for nodes that never activate.
inline std::vector<int> lt_rounds(const std::vector<std::vector<std::pair<NodeId, double>>> &adj,
                                  std::span<const double> thresholds, const SeedSet &seeds,
                                  int *round_count = nullptr) {
  const std::size_t n = adj.size();
  std::vector<int> round_of(n, -1);
  for (NodeId s : seeds)
    round_of[s] = 0;
  int round = 0;
  std::vector<NodeId> fresh;
  while (true) {
    fresh.clear();
    for (NodeId v = 0; v < n; ++v) {
      if (round_of[v] >= 0)
        continue;
      double sum = 0.0;
      for (const auto &[u, w] : adj[v])
        if (round_of[u] >= 0)
          sum += w;
      if (sum > 0.0 && sum >= thresholds[v])
        fresh.push_back(v);
    }
    if (fresh.empty())
      break;
    ++round;
    for (NodeId v : fresh)
      round_of[v] = round;
  }
  if (round_count)
    *round_count = round + 1;
  return round_of;
}

} // namespace detail

/// Runs the synchronous Linear Threshold process to its fixed point. An
/// inactive node activates when the weight to active neighbours is positive
/// and at least its threshold. Active nodes stay active.
inline CascadeTrace lt_run(const RealizedGraph &graph, std::span<const double> thresholds,
                           const SeedSet &seeds) {
  const std::size_t n = graph.size();
  if (thresholds.size() != n)
    throw InputError("expected " + std::to_string(n) + " thresholds, got " + std::to_string(thresholds.size()));
  for (double a : thresholds)
    check_unit_interval(a, "threshold");
  detail::check_seeds(seeds, n);

  int count = 0;
  const auto round_of = detail::lt_rounds(adjacency(graph), thresholds, seeds, &count);
  CascadeTrace trace;
  trace.rounds.resize(static_cast<std::size_t>(count));
  for (NodeId v = 0; v < n; ++v) {
    if (round_of[v] < 0)
      continue;
    trace.rounds[static_cast<std::size_t>(round_of[v])].push_back(v);
    trace.final_active.push_back(v);
  }
  return trace;
}

namespace detail {

inline void check_seeds_labeled(const GraphSpace &space, const SeedSet &seeds) {
  check_seeds(seeds, space.size());
  for (NodeId s : seeds)
    if (!space.labeled(s))
      throw ContractViolation("seed " + std::to_string(s) + " carries label 0 and can never yield the observed labels");
}

} // namespace detail

/// True iff the cascade from seeds ends with exactly the label-1 nodes active.
inline bool realizes(const RealizedGraph &graph, const GraphSpace &space, const SeedSet &seeds) {
  if (graph.size() != space.size())
    throw InputError("graph has " + std::to_string(graph.size()) + " nodes but the space has " +
                     std::to_string(space.size()));
  detail::check_seeds_labeled(space, seeds);
  const auto trace = lt_run(graph, space.thresholds(), seeds);
  return trace.final_active == space.labeled_nodes();
}

} // namespace netspace
