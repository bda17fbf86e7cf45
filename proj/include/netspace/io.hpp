#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "netspace/errors.hpp"
#include "netspace/graphspace.hpp"
#include "netspace/loss.hpp"
#include "netspace/ltprocess.hpp"
#include "netspace/solvers.hpp"

namespace netspace {

inline constexpr std::string_view kFormatVersion = "netspace-1";

/// Rejected file content. The message names the offending field path, or the
/// line and column for syntax errors.
class ParseError : public InputError {
public:
  explicit ParseError(const std::string &what) : InputError(what) {}
};

namespace io_detail {

using json = nlohmann::ordered_json;

[[noreturn]] inline void fail(const std::string &path, const std::string &msg) {
  throw ParseError(path + ": " + msg);
}

inline json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

inline const json &require_object(const json &j, const std::string &path, std::initializer_list<std::string_view> required,
                                  std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object())
    fail(path, "expected an object");
  for (const auto &[key, value] : j.items()) {
    const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                       std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known)
      fail(path, "unknown field \"" + key + "\"");
  }
  for (auto key : required)
    if (!j.contains(std::string(key)))
      fail(path, "missing field \"" + std::string(key) + "\"");
  return j;
}

inline void check_version(const json &j, const std::string &path) {
  const auto &v = j.at("version");
  if (!v.is_string() || v.get<std::string>() != kFormatVersion)
    fail(path + ".version", "expected \"" + std::string(kFormatVersion) + "\"");
}

inline std::uint64_t as_index(const json &j, const std::string &path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    fail(path, "expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

inline double as_number(const json &j, const std::string &path) {
  if (!j.is_number())
    fail(path, "expected a number");
  return j.get<double>();
}

inline double as_unit(const json &j, const std::string &path) {
  const double x = as_number(j, path);
  if (!(x >= 0.0 && x <= 1.0))
    fail(path, "value must lie in [0,1]");
  return x;
}

inline const json &as_array(const json &j, const std::string &path) {
  if (!j.is_array())
    fail(path, "expected an array");
  return j;
}

inline std::string at(const std::string &path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline NodePair read_pair(const json &rec, const std::string &path, std::size_t n) {
  const auto u = as_index(rec.at("u"), path + ".u");
  const auto v = as_index(rec.at("v"), path + ".v");
  if (u >= v)
    fail(path, "edge endpoints must satisfy u < v");
  if (v >= n)
    fail(path + ".v", "node id outside [0, n)");
  return NodePair{static_cast<NodeId>(u), static_cast<NodeId>(v)};
}

inline std::vector<NodeId> read_nodes(const json &j, const std::string &path, std::size_t n) {
  std::vector<NodeId> out;
  const auto &arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto v = as_index(arr[i], at(path, i));
    if (v >= n)
      fail(at(path, i), "node id outside [0, n)");
    out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

inline RealizedGraph read_weighted_edges(const json &j, const std::string &path, std::size_t n) {
  RealizedGraph g(n);
  std::set<NodePair> seen;
  const auto &arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto p = at(path, i);
    require_object(arr[i], p, {"u", "v", "weight"});
    const auto pair = read_pair(arr[i], p, n);
    if (!seen.insert(pair).second)
      fail(p, "duplicate pair " + to_string(pair));
    g.set(pair, as_unit(arr[i].at("weight"), p + ".weight"));
  }
  return g;
}

inline json weighted_edges_json(const RealizedGraph &g) {
  json edges = json::array();
  for (const auto &[pair, w] : g.weights())
    edges.push_back({{"u", pair.lo}, {"v", pair.hi}, {"weight", w}});
  return edges;
}

inline json trace_json(const CascadeTrace &t) { return {{"rounds", t.rounds}, {"final_active", t.final_active}}; }

inline CascadeTrace read_trace(const json &j, const std::string &path, std::size_t n) {
  require_object(j, path, {"rounds", "final_active"});
  CascadeTrace t;
  const auto &rounds = as_array(j.at("rounds"), path + ".rounds");
  for (std::size_t i = 0; i < rounds.size(); ++i)
    t.rounds.push_back(read_nodes(rounds[i], at(path + ".rounds", i), n));
  t.final_active = read_nodes(j.at("final_active"), path + ".final_active", n);
  return t;
}

inline std::string dump(const json &j) { return j.dump(2) + "\n"; }

} // namespace io_detail

// ---------------------------------------------------------------- instance

inline GraphSpace parse_instance(std::string_view text) {
  using namespace io_detail;
  const json j = parse_text(text);
  require_object(j, "instance", {"version", "n", "thresholds", "labels", "edges"});
  check_version(j, "instance");
  const auto n = as_index(j.at("n"), "instance.n");

  const auto &th = as_array(j.at("thresholds"), "instance.thresholds");
  if (th.size() != n)
    fail("instance.thresholds", "expected " + std::to_string(n) + " entries, got " + std::to_string(th.size()));
  std::vector<double> thresholds;
  for (std::size_t i = 0; i < th.size(); ++i)
    thresholds.push_back(as_unit(th[i], at("instance.thresholds", i)));

  const auto &lb = as_array(j.at("labels"), "instance.labels");
  if (lb.size() != n)
    fail("instance.labels", "expected " + std::to_string(n) + " entries, got " + std::to_string(lb.size()));
  std::vector<std::uint8_t> labels;
  for (std::size_t i = 0; i < lb.size(); ++i) {
    const auto l = as_index(lb[i], at("instance.labels", i));
    if (l > 1)
      fail(at("instance.labels", i), "labels must be 0 or 1");
    labels.push_back(static_cast<std::uint8_t>(l));
  }

  GraphSpace::DistMap dists;
  const auto &edges = as_array(j.at("edges"), "instance.edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto p = at("instance.edges", i);
    require_object(edges[i], p, {"u", "v", "dist"});
    const auto pair = read_pair(edges[i], p, n);
    if (dists.contains(pair))
      fail(p, "duplicate pair " + to_string(pair));
    const auto &d = edges[i].at("dist");
    require_object(d, p + ".dist", {"support", "probs"});
    std::vector<double> support, probs;
    const auto &sj = as_array(d.at("support"), p + ".dist.support");
    const auto &pj = as_array(d.at("probs"), p + ".dist.probs");
    for (std::size_t s = 0; s < sj.size(); ++s)
      support.push_back(as_unit(sj[s], at(p + ".dist.support", s)));
    for (std::size_t s = 0; s < pj.size(); ++s)
      probs.push_back(as_number(pj[s], at(p + ".dist.probs", s)));
    try {
      dists.emplace(pair, EdgeDistribution(std::move(support), std::move(probs)));
    } catch (const InputError &e) {
      fail(p + ".dist", e.what());
    }
  }
  return GraphSpace(std::move(thresholds), std::move(labels), std::move(dists));
}

inline std::string write_instance(const GraphSpace &space) {
  using io_detail::json;
  json edges = json::array();
  for (const auto &[pair, dist] : space.distributions()) {
    edges.push_back({{"u", pair.lo},
                     {"v", pair.hi},
                     {"dist",
                      {{"support", std::vector<double>(dist.support().begin(), dist.support().end())},
                       {"probs", std::vector<double>(dist.probs().begin(), dist.probs().end())}}}});
  }
  std::vector<int> labels(space.labels().begin(), space.labels().end());
  json j = {{"version", kFormatVersion},
            {"n", space.size()},
            {"thresholds", std::vector<double>(space.thresholds().begin(), space.thresholds().end())},
            {"labels", labels},
            {"edges", edges}};
  return io_detail::dump(j);
}

// ---------------------------------------------------------- realized graph

inline RealizedGraph parse_graph(std::string_view text) {
  using namespace io_detail;
  const json j = parse_text(text);
  require_object(j, "graph", {"version", "n", "edges"});
  check_version(j, "graph");
  const auto n = as_index(j.at("n"), "graph.n");
  return read_weighted_edges(j.at("edges"), "graph.edges", n);
}

inline std::string write_graph(const RealizedGraph &g) {
  using io_detail::json;
  json j = {{"version", kFormatVersion}, {"n", g.size()}, {"edges", io_detail::weighted_edges_json(g)}};
  return io_detail::dump(j);
}

// ---------------------------------------------------------------- solution

struct SolutionFile {
  Solution solution;
  std::optional<CascadeTrace> trace;

  bool operator==(const SolutionFile &) const = default;
};

/// n comes from the instance the solution belongs to.
inline SolutionFile parse_solution(std::string_view text, std::size_t n) {
  using namespace io_detail;
  const json j = parse_text(text);
  require_object(j, "solution", {"version", "seeds", "k", "loss_total", "edges"}, {"trace"});
  check_version(j, "solution");
  SolutionFile out;
  try {
    out.solution.seeds = SeedSet(read_nodes(j.at("seeds"), "solution.seeds", n));
  } catch (const ParseError &) {
    throw;
  } catch (const InputError &e) {
    fail("solution.seeds", e.what());
  }
  const auto k = as_index(j.at("k"), "solution.k");
  if (k != out.solution.seeds.size())
    fail("solution.k", "k must equal the number of seeds");
  out.solution.loss_total = as_number(j.at("loss_total"), "solution.loss_total");
  if (!(out.solution.loss_total >= 0.0))
    fail("solution.loss_total", "loss must be nonnegative");
  out.solution.graph = read_weighted_edges(j.at("edges"), "solution.edges", n);
  if (j.contains("trace"))
    out.trace = read_trace(j.at("trace"), "solution.trace", n);
  return out;
}

inline std::string write_solution(const Solution &sol, const std::optional<CascadeTrace> &trace = std::nullopt) {
  using io_detail::json;
  std::vector<NodeId> seeds(sol.seeds.begin(), sol.seeds.end());
  json j = {{"version", kFormatVersion},
            {"seeds", seeds},
            {"k", sol.k()},
            {"loss_total", sol.loss_total},
            {"edges", io_detail::weighted_edges_json(sol.graph)}};
  if (trace)
    j["trace"] = io_detail::trace_json(*trace);
  return io_detail::dump(j);
}

inline std::string write_solution(const SolutionFile &file) { return write_solution(file.solution, file.trace); }

// ------------------------------------------------------- traces and losses

inline std::string write_trace(const CascadeTrace &t) {
  auto j = io_detail::trace_json(t);
  j["version"] = kFormatVersion;
  return io_detail::dump(j);
}

inline CascadeTrace parse_trace(std::string_view text, std::size_t n) {
  using namespace io_detail;
  json j = parse_text(text);
  require_object(j, "trace", {"version", "rounds", "final_active"});
  check_version(j, "trace");
  j.erase("version");
  return read_trace(j, "trace", n);
}

inline std::string write_loss_report(const LossReport &r) {
  using io_detail::json;
  json per_edge = json::array();
  for (const auto &[pair, l] : r.per_edge)
    per_edge.push_back({{"u", pair.lo}, {"v", pair.hi}, {"loss", l}});
  json j = {{"version", kFormatVersion}, {"total", r.total}, {"per_edge", per_edge}};
  return io_detail::dump(j);
}

} // namespace netspace
