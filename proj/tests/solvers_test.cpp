#include <gtest/gtest.h>

#include "netspace/solvers.hpp"
#include "netspace/verify.hpp"
#include "support.hpp"

namespace netspace {
namespace {

GraphSpace two_cliques(EdgeDistribution bridge = EdgeDistribution{}) {
  GraphSpace::DistMap d;
  for (NodeId base : {0u, 3u})
    for (NodeId i = 0; i < 3; ++i)
      for (NodeId j = i + 1; j < 3; ++j)
        d.emplace(NodePair{base + i, base + j}, EdgeDistribution::point(1.0));
  if (!bridge.is_point_mass_at_zero())
    d.emplace(NodePair{2, 3}, bridge);
  return GraphSpace::with_global_threshold(0.5, {1, 1, 1, 1, 1, 1}, std::move(d));
}

void expect_valid(const GraphSpace &space, const Solution &sol, double lambda = kUnlimitedBudget) {
  const auto r = verify_solution(space, sol, lambda);
  EXPECT_TRUE(r.realized) << r.detail;
  EXPECT_TRUE(r.within_budget) << r.detail;
  EXPECT_NEAR(r.loss_total, sol.loss_total, 1e-9);
}

TEST(SolveTrivial, CutsUnlabeledPairs) {
  GraphSpace::DistMap d{{NodePair{0, 1}, EdgeDistribution::point(0.5)},
                        {NodePair{0, 2}, EdgeDistribution::point(1.0)},
                        {NodePair{1, 2}, EdgeDistribution({0.0, 1.0}, {0.25, 0.75})}};
  GraphSpace s({0.5, 0.5, 0.5}, {1, 1, 0}, d);
  const auto sol = solve_trivial(s);
  EXPECT_EQ(sol.k(), 2u);
  EXPECT_EQ(sol.seeds, (SeedSet{0, 1}));
  EXPECT_EQ(sol.graph.weight(NodePair{0, 2}), 0.0);
  EXPECT_EQ(sol.graph.weight(NodePair{1, 2}), 0.0);
  EXPECT_EQ(sol.graph.weight(NodePair{0, 1}), 0.5);
  expect_valid(s, sol);
}

TEST(SolveTrivial, NoLabels) {
  GraphSpace s({0.5, 0.5}, {0, 0}, {{NodePair{0, 1}, EdgeDistribution::point(1.0)}});
  const auto sol = solve_trivial(s);
  EXPECT_EQ(sol.k(), 0u);
  expect_valid(s, sol);
}

TEST(SolveTrivial, AllLabeledPointMassesKeepMle) {
  GraphSpace::DistMap d{{NodePair{0, 1}, EdgeDistribution::point(0.25)},
                        {NodePair{1, 3}, EdgeDistribution::point(1.0)}};
  GraphSpace s({0.1, 0.2, 0.3, 0.4}, {1, 1, 1, 1}, d);
  const auto sol = solve_trivial(s);
  EXPECT_EQ(sol.k(), 4u);
  EXPECT_EQ(sol.graph, mle_graph(s));
  EXPECT_EQ(sol.loss_total, 0.0);
  expect_valid(s, sol);
}

TEST(SolveUnconstrained, StarOnLabeledNodes) {
  auto s = GraphSpace::with_global_threshold(1.0, {1, 1, 1, 0});
  const auto out = solve_unconstrained(s);
  ASSERT_TRUE(out.feasible());
  const auto &sol = out.solution();
  EXPECT_EQ(sol.seeds, (SeedSet{0}));
  EXPECT_EQ(sol.graph.weight(NodePair{0, 1}), 1.0);
  EXPECT_EQ(sol.graph.weight(NodePair{0, 2}), 1.0);
  EXPECT_EQ(sol.graph.weight(NodePair{0, 3}), 0.0);
  EXPECT_EQ(sol.graph.weights().size(), 2u);
  expect_valid(s, sol);
}

TEST(SolveUnconstrained, SingleNode) {
  GraphSpace s({0.5}, {1});
  const auto out = solve_unconstrained(s);
  ASSERT_TRUE(out.feasible());
  EXPECT_EQ(out.solution().seeds, (SeedSet{0}));
  EXPECT_TRUE(out.solution().graph.weights().empty());
}

TEST(SolveUnconstrained, UnlabeledMiddleNodeStaysInactive) {
  GraphSpace s({0.3, 0.9, 0.3}, {1, 0, 1});
  const auto out = solve_unconstrained(s);
  ASSERT_TRUE(out.feasible());
  const auto &sol = out.solution();
  EXPECT_EQ(sol.seeds, (SeedSet{0}));
  EXPECT_EQ(sol.graph.weight(NodePair{0, 2}), 1.0);
  EXPECT_EQ(lt_run(sol.graph, s.thresholds(), sol.seeds).final_active, (std::vector<NodeId>{0, 2}));
}

TEST(SolveBudgeted, InfiniteBudgetMatchesUnconstrained) {
  auto s = GraphSpace::with_global_threshold(0.5, {1, 1, 0});
  const auto out = solve_budgeted(s, kUnlimitedBudget);
  EXPECT_EQ(out, solve_unconstrained(s));
  EXPECT_EQ(out.solution().k(), 1u);
}

TEST(SolveBudgeted, StarCounterexampleInfeasibleAtZero) {
  const auto s = testing::star_counterexample();
  const auto out = solve_budgeted(s, 0.0);
  ASSERT_FALSE(out.feasible());
  EXPECT_EQ(out.reason(), InfeasibleReason::NoSolutionAtBudget);
  EXPECT_FALSE(solve_budgeted(s, 2.999).feasible());
  const auto ok = solve_budgeted(s, 3.0);
  ASSERT_TRUE(ok.feasible());
  expect_valid(s, ok.solution(), 3.0);
}

TEST(SolveBudgeted, OneSeedPerClique) {
  const auto s = two_cliques();
  const auto out = solve_budgeted(s, 10.0);
  ASSERT_TRUE(out.feasible());
  EXPECT_EQ(out.solution().k(), 2u);
  EXPECT_EQ(out.solution().seeds, (SeedSet{0, 3}));
  expect_valid(s, out.solution(), 10.0);

  const auto oracle = brute_force_min_seeds(binarized_graph(s), s);
  ASSERT_TRUE(oracle.feasible());
  EXPECT_EQ(oracle.solution().k(), 2u);
}

TEST(SolveBudgeted, RepairRevertsTowardMode) {
  // Labeled 0,1; unlabeled 2 with a high threshold. The 0-2 edge is
  // binarized to 0 (cost 1) but its mode 0.5 is harmless, so repair restores it.
  GraphSpace::DistMap d{{NodePair{0, 2}, EdgeDistribution::point(0.5)},
                        {NodePair{0, 1}, EdgeDistribution::point(1.0)}};
  GraphSpace s({0.5, 0.5, 0.9}, {1, 1, 0}, d);
  const auto out = solve_budgeted(s, 0.0);
  ASSERT_TRUE(out.feasible());
  EXPECT_EQ(out.solution().loss_total, 0.0);
  EXPECT_EQ(out.solution().graph, mle_graph(s));
  expect_valid(s, out.solution(), 0.0);
}

TEST(SolveBudgeted, NegativeBudgetIsInputError) {
  EXPECT_THROW(solve_budgeted(testing::star_counterexample(), -1.0), InputError);
}

TEST(BruteForce, StarCounterexampleInfeasible) {
  const auto s = testing::star_counterexample();
  const auto out = brute_force_min_seeds(mle_graph(s), s);
  ASSERT_FALSE(out.feasible());
  EXPECT_EQ(out.reason(), InfeasibleReason::NoLabeledSeedPossible);
}

TEST(BruteForce, PathNeedsOneSeed) {
  RealizedGraph g(3);
  g.set(NodePair{0, 1}, 0.5);
  g.set(NodePair{1, 2}, 0.5);
  auto s = GraphSpace::with_global_threshold(0.5, {1, 1, 1});
  const auto out = brute_force_min_seeds(g, s);
  ASSERT_TRUE(out.feasible());
  EXPECT_EQ(out.solution().seeds, (SeedSet{0}));
}

TEST(BruteForce, NoLabels) {
  GraphSpace s({0.5, 0.5}, {0, 0});
  const auto out = brute_force_min_seeds(RealizedGraph(2), s);
  ASSERT_TRUE(out.feasible());
  EXPECT_EQ(out.solution().k(), 0u);
}

TEST(BruteForce, Guard) {
  GraphSpace s(std::vector<double>(21, 0.5), std::vector<std::uint8_t>(21, 1));
  EXPECT_THROW(brute_force_min_seeds(RealizedGraph(21), s), GuardExceeded);
}

TEST(LocalSearch, ZeroItersReturnsStart) {
  const auto s = two_cliques(EdgeDistribution({0.0, 1.0}, {0.5, 0.5}));
  const auto start = solve_budgeted(s, 5.0).solution();
  EXPECT_EQ(local_search_improve(s, start, 5.0, 0), start);
}

TEST(LocalSearch, BridgingMoveMergesComponents) {
  const auto s = two_cliques(EdgeDistribution({0.0, 1.0}, {0.5, 0.5}));
  const auto start = solve_budgeted(s, 0.0).solution();
  ASSERT_EQ(start.k(), 2u);
  // Setting the bridge to 1 costs 0.5 - 0.5 = 0.
  const auto improved = local_search_improve(s, start, 0.0, 1000);
  EXPECT_EQ(improved.k(), 1u);
  EXPECT_EQ(improved.graph.weight(NodePair{2, 3}), 1.0);
  expect_valid(s, improved, 0.0);
  const auto oracle = brute_force_min_seeds(improved.graph, s);
  ASSERT_TRUE(oracle.feasible());
  EXPECT_EQ(oracle.solution().k(), 1u);
}

TEST(LocalSearch, NoFreeMoveAtZeroBudget) {
  const auto s = two_cliques(EdgeDistribution({0.0, 1.0}, {0.6, 0.4}));
  const auto start = greedy_min_seeds(mle_graph(s), s).solution();
  EXPECT_EQ(local_search_improve(s, start, 0.0, 1000), start);
}

TEST(LocalSearch, StartOverBudgetIsContractViolation) {
  const auto s = testing::star_counterexample();
  const auto start = solve_budgeted(s, 3.0).solution();
  EXPECT_THROW(local_search_improve(s, start, 1.0, 10), ContractViolation);
}

// Property checks over random spaces.

TEST(SolverProperties, ConstructiveSolversAlwaysRealize) {
  Rng rng(404);
  for (int t = 0; t < 300; ++t) {
    const auto s = testing::random_space(rng, 1 + rng.below(12));
    const auto labeled = s.labeled_nodes().size();
    const auto trivial = solve_trivial(s);
    EXPECT_EQ(trivial.k(), labeled);
    expect_valid(s, trivial);
    const auto star = solve_unconstrained(s);
    ASSERT_TRUE(star.feasible());
    EXPECT_EQ(star.solution().k(), labeled > 0 ? 1u : 0u);
    expect_valid(s, star.solution());
    EXPECT_EQ(solve_budgeted(s, kUnlimitedBudget).solution().k(), star.solution().k());
  }
}

TEST(SolverProperties, BudgetedRespectsBudget) {
  Rng rng(505);
  for (int t = 0; t < 300; ++t) {
    const auto s = testing::random_space(rng, 1 + rng.below(10));
    const double lambda = static_cast<double>(rng.below(6)) * 0.5;
    const auto out = solve_budgeted(s, lambda);
    if (!out.feasible()) {
      EXPECT_EQ(out.reason(), InfeasibleReason::NoSolutionAtBudget);
      continue;
    }
    EXPECT_LE(out.solution().loss_total, lambda + 1e-9);
    expect_valid(s, out.solution(), lambda + 1e-9);
  }
}

TEST(SolverProperties, OracleDominatesGreedy) {
  Rng rng(606);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(9);
    const auto s = testing::random_space(rng, n);
    const auto g = testing::random_graph(rng, n);
    const auto greedy = greedy_min_seeds(g, s);
    const auto oracle = brute_force_min_seeds(g, s);
    EXPECT_EQ(greedy.feasible(), oracle.feasible());
    if (greedy.feasible() && oracle.feasible()) {
      EXPECT_LE(oracle.solution().k(), greedy.solution().k());
    }
  }
}

TEST(SolverProperties, LocalSearchNeverWorsens) {
  Rng rng(707);
  for (int t = 0; t < 60; ++t) {
    const auto s = testing::random_space(rng, 2 + rng.below(6), 0.7, 0.7);
    const double lambda = 1.0 + static_cast<double>(rng.below(4));
    const auto out = solve_budgeted(s, lambda);
    if (!out.feasible())
      continue;
    const auto improved = local_search_improve(s, out.solution(), lambda, 200);
    EXPECT_LE(improved.k(), out.solution().k());
    expect_valid(s, improved, lambda + 1e-9);
  }
}

} // namespace
} // namespace netspace
