#pragma once

#include <map>
#include <string>

#include "netspace/errors.hpp"
#include "netspace/graphspace.hpp"

namespace netspace {

/// Independent Edge Loss of one weight: mass at the mode minus mass at w.
/// Off-support weights carry mass 0, so they cost the full modal mass.
inline double edge_loss(const EdgeDistribution &dist, double w) {
  check_unit_interval(w, "edge weight");
  return dist.mode_mass() - dist.mass(w);
}

struct LossReport {
  std::map<NodePair, double> per_edge; // zero-loss pairs omitted
  double total = 0.0;
};

/// Sum of edge losses over all unordered pairs. Only pairs stored in either
/// input can contribute: any other pair is weight 0 under point mass at 0.
inline LossReport graph_loss(const GraphSpace &space, const RealizedGraph &graph) {
  if (graph.size() != space.size())
    throw InputError("graph has " + std::to_string(graph.size()) + " nodes but the space has " +
                     std::to_string(space.size()));
  LossReport report;
  auto add = [&](NodePair p) {
    if (report.per_edge.contains(p))
      return;
    const double l = edge_loss(space.dist(p), graph.weight(p));
    if (l != 0.0)
      report.per_edge.emplace(p, l);
  };
  for (const auto &entry : space.distributions())
    add(entry.first);
  for (const auto &entry : graph.weights())
    add(entry.first);
  for (const auto &entry : report.per_edge)
    report.total += entry.second;
  return report;
}

} // namespace netspace
