#pragma once

// Shared generators and independent oracles for the test suites. Nothing in
// here calls into the code paths it is used to check.

#include <cstdint>
#include <vector>

#include "netspace/netspace.hpp"

namespace netspace::testing {

inline constexpr double kGrid[] = {0.0, 0.25, 0.5, 0.75, 1.0};

inline double grid_value(Rng &rng) { return kGrid[rng.below(5)]; }

/// Random distribution over a subset of the quarter grid.
inline EdgeDistribution random_dist(Rng &rng) {
  std::vector<double> support, probs;
  double total = 0.0;
  for (double w : kGrid) {
    if (rng.bernoulli(0.5)) {
      support.push_back(w);
      probs.push_back(static_cast<double>(1 + rng.below(4)));
      total += probs.back();
    }
  }
  if (support.empty()) {
    support.push_back(grid_value(rng));
    probs.push_back(1.0);
    total = 1.0;
  }
  for (auto &p : probs)
    p /= total;
  return EdgeDistribution(std::move(support), std::move(probs));
}

inline GraphSpace random_space(Rng &rng, std::size_t n, double density = 0.5, double label_p = 0.5) {
  std::vector<double> thresholds(n);
  std::vector<std::uint8_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    thresholds[i] = grid_value(rng);
    labels[i] = rng.bernoulli(label_p) ? 1 : 0;
  }
  GraphSpace::DistMap dists;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (rng.bernoulli(density))
        dists.emplace(NodePair{i, j}, random_dist(rng));
  return GraphSpace(std::move(thresholds), std::move(labels), std::move(dists));
}

/// Weights on the quarter grid, so they may or may not be on a pair's support.
inline RealizedGraph random_graph(Rng &rng, std::size_t n, double density = 0.5) {
  RealizedGraph g(n);
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (rng.bernoulli(density))
        g.set(NodePair{i, j}, grid_value(rng));
  return g;
}

inline SeedSet random_seeds(Rng &rng, std::size_t n, double p = 0.3) {
  std::vector<NodeId> s;
  for (NodeId v = 0; v < n; ++v)
    if (rng.bernoulli(p))
      s.push_back(v);
  return SeedSet(std::move(s));
}

/// Double-loop re-summation of the Independent Edge Loss, reading the raw
/// support and probability arrays directly.
inline double oracle_graph_loss(const GraphSpace &space, const RealizedGraph &graph) {
  double total = 0.0;
  const auto &dists = space.distributions();
  const auto &weights = graph.weights();
  for (NodeId i = 0; i < space.size(); ++i) {
    for (NodeId j = i + 1; j < space.size(); ++j) {
      const NodePair p{i, j};
      const auto wit = weights.find(p);
      const double w = wit == weights.end() ? 0.0 : wit->second;
      std::vector<double> support{0.0}, probs{1.0};
      if (const auto dit = dists.find(p); dit != dists.end()) {
        support.assign(dit->second.support().begin(), dit->second.support().end());
        probs.assign(dit->second.probs().begin(), dit->second.probs().end());
      }
      double top = 0.0, at_w = 0.0;
      for (std::size_t s = 0; s < support.size(); ++s) {
        if (probs[s] > top)
          top = probs[s];
        if (support[s] == w)
          at_w = probs[s];
      }
      total += top - at_w;
    }
  }
  return total;
}

/// The 4-node star: unlabeled center 0, labeled periphery, unit point-mass
/// spokes.
inline GraphSpace star_counterexample(double threshold = 0.5) {
  GraphSpace::DistMap d;
  for (NodeId j = 1; j <= 3; ++j)
    d.emplace(NodePair{0, j}, EdgeDistribution::point(1.0));
  return GraphSpace::with_global_threshold(threshold, {0, 1, 1, 1}, std::move(d));
}

} // namespace netspace::testing
