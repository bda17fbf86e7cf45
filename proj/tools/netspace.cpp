// netspace: command-line front end for graph-space instances.
//
//   netspace gen      --n 8 --density 0.5 --support-size 3 --labels planted_cascade --seed 1
//   netspace sample   INSTANCE --seed K
//   netspace simulate INSTANCE GRAPH --seeds 0,3,5
//   netspace loss     INSTANCE GRAPH
//   netspace solve    INSTANCE --mode trivial|star|budgeted|oracle [--lambda X|inf] [--graph G]
//   netspace verify   INSTANCE SOLUTION [--lambda X|inf]
//
// Exit codes: 0 success, 1 infeasible or failed verification, 2 input
// error, 3 search guard exceeded. Data goes to stdout (or -o FILE),
// diagnostics to stderr.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netspace/netspace.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw netspace::InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string &text, const std::string &out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    throw netspace::InputError("cannot write " + out_path);
  out << text;
}

double parse_lambda(const std::string &s) {
  if (s == "inf" || s == "infinity")
    return netspace::kUnlimitedBudget;
  double x = 0.0;
  const auto *end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, x);
  if (ec != std::errc() || ptr != end || std::isnan(x) || x < 0.0)
    throw netspace::InputError("--lambda expects a nonnegative number or inf, got \"" + s + "\"");
  return x;
}

std::vector<netspace::NodeId> parse_id_list(const std::string &s) {
  std::vector<netspace::NodeId> ids;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto comma = s.find(',', pos);
    const auto token = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    netspace::NodeId v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw netspace::InputError("--seeds expects comma-separated node ids, got \"" + s + "\"");
    ids.push_back(v);
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return ids;
}

int report_infeasible(netspace::InfeasibleReason r) {
  std::cerr << "infeasible: " << netspace::to_string(r) << "\n";
  return kExitInfeasible;
}

} // namespace

int main(int argc, char **argv) {
  using namespace netspace;

  CLI::App app{"Graph-space network inference toolkit (linear threshold seed selection)"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("-o,--output", out_path, "Write data to FILE instead of stdout");

  GeneratorParams gen_params;
  std::string label_rule = "random_p";
  auto *gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", gen_params.n, "Node count")->check(CLI::PositiveNumber);
  gen->add_option("--density", gen_params.edge_density, "Probability that a pair gets a distribution")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--support-size", gen_params.support_size, "Support points per distribution")
      ->check(CLI::PositiveNumber);
  gen->add_option("--labels", label_rule, "random_p | planted_cascade");
  gen->add_option("--label-p", gen_params.label_p, "Label probability for random_p")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_params.seed, "Random seed");

  std::string instance_path, graph_path, solution_path;
  std::uint64_t sample_seed = 0;
  auto *sample = app.add_subcommand("sample", "Sample a realized graph from an instance");
  sample->add_option("instance", instance_path)->required();
  sample->add_option("--seed", sample_seed, "Random seed")->required();

  std::string seeds_arg;
  auto *simulate = app.add_subcommand("simulate", "Run the LT process on a realized graph");
  simulate->add_option("instance", instance_path)->required();
  simulate->add_option("graph", graph_path)->required();
  simulate->add_option("--seeds", seeds_arg, "Comma-separated seed ids")->required();

  auto *loss = app.add_subcommand("loss", "Independent Edge Loss of a realized graph");
  loss->add_option("instance", instance_path)->required();
  loss->add_option("graph", graph_path)->required();

  std::string mode = "budgeted";
  std::string lambda_arg = "inf";
  bool with_trace = false;
  std::size_t improve_iters = 0;
  auto *solve = app.add_subcommand("solve", "Find a realized graph and a small seed set");
  solve->add_option("instance", instance_path)->required();
  solve->add_option("--mode", mode, "trivial | star | budgeted | oracle")
      ->check(CLI::IsMember({"trivial", "star", "budgeted", "oracle"}));
  solve->add_option("--lambda", lambda_arg, "Loss budget (number or inf)");
  solve->add_option("--graph", graph_path, "Fixed realized graph for oracle mode (default: MLE graph)");
  solve->add_option("--improve", improve_iters, "Local-search moves after the budgeted solve");
  solve->add_flag("--trace", with_trace, "Include the cascade trace");

  auto *verify = app.add_subcommand("verify", "Re-check realization and budget of a solution");
  verify->add_option("instance", instance_path)->required();
  verify->add_option("solution", solution_path)->required();
  verify->add_option("--lambda", lambda_arg, "Loss budget (number or inf)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  try {
    if (*gen) {
      gen_params.label_rule = parse_label_rule(label_rule);
      emit(write_instance(generate_instance(gen_params)), out_path);
      return kExitOk;
    }

    const GraphSpace space = parse_instance(read_file(instance_path));

    if (*sample) {
      emit(write_graph(sample_graph(space, sample_seed)), out_path);
      return kExitOk;
    }

    auto load_graph = [&] {
      auto g = parse_graph(read_file(graph_path));
      if (g.size() != space.size())
        throw InputError("graph has " + std::to_string(g.size()) + " nodes but the instance has " +
                         std::to_string(space.size()));
      return g;
    };

    if (*simulate) {
      const auto trace = lt_run(load_graph(), space.thresholds(), SeedSet(parse_id_list(seeds_arg)));
      emit(write_trace(trace), out_path);
      return kExitOk;
    }

    if (*loss) {
      emit(write_loss_report(graph_loss(space, load_graph())), out_path);
      return kExitOk;
    }

    const double lambda = parse_lambda(lambda_arg);

    if (*solve) {
      std::optional<SolveOutcome> outcome;
      if (mode == "trivial") {
        outcome = solve_trivial(space);
      } else if (mode == "star") {
        outcome = solve_unconstrained(space);
      } else if (mode == "budgeted") {
        outcome = solve_budgeted(space, lambda);
        if (outcome->feasible() && improve_iters > 0)
          outcome = local_search_improve(space, outcome->solution(), lambda, improve_iters);
      } else {
        const RealizedGraph fixed = graph_path.empty() ? mle_graph(space) : load_graph();
        outcome = brute_force_min_seeds(fixed, space);
      }
      if (!outcome->feasible())
        return report_infeasible(outcome->reason());
      const Solution &sol = outcome->solution();
      if (sol.loss_total > lambda)
        return report_infeasible(InfeasibleReason::NoSolutionAtBudget);
      std::optional<CascadeTrace> trace;
      if (with_trace)
        trace = lt_run(sol.graph, space.thresholds(), sol.seeds);
      emit(write_solution(sol, trace), out_path);
      return kExitOk;
    }

    if (*verify) {
      const auto file = parse_solution(read_file(solution_path), space.size());
      const auto report = verify_solution(space, file.solution, lambda);
      if (!report.ok()) {
        std::cerr << "verification failed: " << report.detail << "\n";
        return kExitInfeasible;
      }
      std::cerr << "ok: k=" << file.solution.k() << " loss=" << report.loss_total << "\n";
      return kExitOk;
    }
  } catch (const GuardExceeded &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ContractViolation &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
