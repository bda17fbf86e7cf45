#pragma once

#include <string>

#include "netspace/graphspace.hpp"
#include "netspace/loss.hpp"
#include "netspace/ltprocess.hpp"
#include "netspace/solvers.hpp"

namespace netspace {

struct VerifyReport {
  bool realized = false;
  bool within_budget = false;
  double loss_total = 0.0; // recomputed, not taken from the solution
  std::string detail;

  bool ok() const { return realized && within_budget; }
};

/// Independent re-check of a solution against its space: recomputes the
/// cascade and the graph loss from scratch, ignoring solver bookkeeping.
inline VerifyReport verify_solution(const GraphSpace &space, const Solution &sol, double lambda = kUnlimitedBudget) {
  VerifyReport r;
  if (sol.graph.size() != space.size()) {
    r.detail = "node count mismatch";
    return r;
  }
  for (NodeId s : sol.seeds) {
    if (s >= space.size() || !space.labeled(s)) {
      r.detail = "seed " + std::to_string(s) + " is not a labeled node";
      return r;
    }
  }
  const auto trace = lt_run(sol.graph, space.thresholds(), sol.seeds);
  r.realized = trace.final_active == space.labeled_nodes();
  r.loss_total = graph_loss(space, sol.graph).total;
  r.within_budget = r.loss_total <= lambda;
  if (!r.realized)
    r.detail = "cascade does not reproduce the labels";
  else if (!r.within_budget)
    r.detail = "loss " + std::to_string(r.loss_total) + " exceeds budget " + std::to_string(lambda);
  return r;
}

} // namespace netspace
