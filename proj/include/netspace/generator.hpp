#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "netspace/errors.hpp"
#include "netspace/graphspace.hpp"
#include "netspace/ltprocess.hpp"
#include "netspace/random.hpp"

namespace netspace {

enum class LabelRule { RandomP, PlantedCascade };

inline LabelRule parse_label_rule(std::string_view s) {
  if (s == "random_p")
    return LabelRule::RandomP;
  if (s == "planted_cascade")
    return LabelRule::PlantedCascade;
  throw InputError("unknown label rule \"" + std::string(s) + "\" (expected random_p or planted_cascade)");
}

struct GeneratorParams {
  std::size_t n = 8;
  double edge_density = 0.5;
  std::size_t support_size = 2;
  LabelRule label_rule = LabelRule::RandomP;
  double label_p = 0.5; // RandomP only
  std::uint64_t seed = 0;
};

/// A planted instance keeps the graph and seeds its labels were simulated
/// from, which witnesses feasibility.
struct PlantedInstance {
  GraphSpace space;
  RealizedGraph witness;
  SeedSet seeds;
};

namespace gen_detail {

/// Nearest multiple of 1/scale, computed so it prints as a short decimal.
inline double round_to(double x, double scale) { return std::round(x * scale) / scale; }

/// support_size distinct points of an evenly spaced grid on [0,1] with
/// positive integer-ratio probabilities.
inline EdgeDistribution random_distribution(Rng &rng, std::size_t support_size) {
  const std::size_t grid = std::max<std::size_t>(11, support_size);
  std::vector<std::size_t> idx(grid);
  for (std::size_t i = 0; i < grid; ++i)
    idx[i] = i;
  for (std::size_t i = 0; i < support_size; ++i)
    std::swap(idx[i], idx[i + rng.below(grid - i)]);
  idx.resize(support_size);
  std::sort(idx.begin(), idx.end());

  std::vector<double> support, probs;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  for (auto i : idx) {
    support.push_back(static_cast<double>(i) / static_cast<double>(grid - 1));
    counts.push_back(1 + rng.below(9));
    total += counts.back();
  }
  for (auto c : counts)
    probs.push_back(static_cast<double>(c) / static_cast<double>(total));
  return EdgeDistribution(std::move(support), std::move(probs));
}

inline void check(const GeneratorParams &p) {
  if (p.n < 1)
    throw InputError("n must be at least 1");
  if (!(p.edge_density >= 0.0 && p.edge_density <= 1.0))
    throw InputError("edge density must lie in [0,1]");
  if (p.support_size < 1)
    throw InputError("support size must be at least 1");
  if (!(p.label_p >= 0.0 && p.label_p <= 1.0))
    throw InputError("label probability must lie in [0,1]");
}

} // namespace gen_detail

/// Planted-cascade generation: draw distributions and thresholds, sample a
/// graph, seed a few random nodes, and take the cascade's final active set
/// as the labels.
inline PlantedInstance generate_planted(GeneratorParams p) {
  p.label_rule = LabelRule::PlantedCascade;
  gen_detail::check(p);
  Rng rng(p.seed);
  std::vector<double> thresholds(p.n);
  for (auto &a : thresholds)
    a = gen_detail::round_to(rng.unit(), 100.0);
  GraphSpace::DistMap dists;
  for (NodeId i = 0; i < p.n; ++i)
    for (NodeId j = i + 1; j < p.n; ++j)
      if (rng.bernoulli(p.edge_density))
        dists.emplace(NodePair{i, j}, gen_detail::random_distribution(rng, p.support_size));

  GraphSpace unlabeled(thresholds, std::vector<std::uint8_t>(p.n, 0), dists);
  RealizedGraph witness = sample_graph(unlabeled, rng.next());

  const std::size_t seed_count = 1 + rng.below(std::max<std::size_t>(1, p.n / 4));
  std::vector<NodeId> order(p.n);
  for (NodeId i = 0; i < p.n; ++i)
    order[i] = i;
  for (std::size_t i = 0; i < seed_count; ++i)
    std::swap(order[i], order[i + rng.below(p.n - i)]);
  SeedSet seeds(std::vector<NodeId>(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(seed_count)));

  std::vector<std::uint8_t> labels(p.n, 0);
  for (NodeId v : lt_run(witness, thresholds, seeds).final_active)
    labels[v] = 1;
  return PlantedInstance{GraphSpace(std::move(thresholds), std::move(labels), std::move(dists)), std::move(witness),
                         std::move(seeds)};
}

inline GraphSpace generate_instance(const GeneratorParams &p) {
  if (p.label_rule == LabelRule::PlantedCascade)
    return generate_planted(p).space;
  gen_detail::check(p);
  Rng rng(p.seed);
  std::vector<double> thresholds(p.n);
  for (auto &a : thresholds)
    a = gen_detail::round_to(rng.unit(), 100.0);
  GraphSpace::DistMap dists;
  for (NodeId i = 0; i < p.n; ++i)
    for (NodeId j = i + 1; j < p.n; ++j)
      if (rng.bernoulli(p.edge_density))
        dists.emplace(NodePair{i, j}, gen_detail::random_distribution(rng, p.support_size));
  std::vector<std::uint8_t> labels(p.n);
  for (auto &l : labels)
    l = rng.bernoulli(p.label_p) ? 1 : 0;
  return GraphSpace(std::move(thresholds), std::move(labels), std::move(dists));
}

} // namespace netspace
