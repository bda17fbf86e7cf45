#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netspace/errors.hpp"
#include "netspace/random.hpp"

namespace netspace {

using NodeId = std::uint32_t;

/// Unordered node pair stored as (lo, hi) with lo < hi.
struct NodePair {
  NodeId lo = 0;
  NodeId hi = 1;

  static NodePair of(NodeId a, NodeId b) {
    if (a == b)
      throw InputError("self-pair {" + std::to_string(a) + "," + std::to_string(b) + "} is not allowed");
    return a < b ? NodePair{a, b} : NodePair{b, a};
  }

  bool contains(NodeId v) const { return lo == v || hi == v; }
  NodeId other(NodeId v) const { return v == lo ? hi : lo; }

  auto operator<=>(const NodePair &) const = default;
};

inline std::string to_string(NodePair p) {
  return "{" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "}";
}

inline void check_unit_interval(double x, const std::string &what) {
  if (!(x >= 0.0 && x <= 1.0))
    throw InputError(what + " must lie in [0,1], got " + std::to_string(x));
}

/// Finite probability mass function over edge weights in [0,1].
class EdgeDistribution {
public:
  static constexpr double kSumTolerance = 1e-9;

  EdgeDistribution() : support_{0.0}, probs_{1.0} {}

  EdgeDistribution(std::vector<double> support, std::vector<double> probs)
      : support_(std::move(support)), probs_(std::move(probs)) {
    if (support_.empty())
      throw InputError("distribution support must not be empty");
    if (support_.size() != probs_.size())
      throw InputError("support and probs must have the same length");
    double total = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i) {
      check_unit_interval(support_[i], "support value");
      if (i > 0 && !(support_[i - 1] < support_[i]))
        throw InputError("support values must be strictly increasing");
      if (!(probs_[i] > 0.0))
        throw InputError("probabilities must be positive");
      total += probs_[i];
    }
    if (std::abs(total - 1.0) > kSumTolerance)
      throw InputError("probabilities must sum to 1 (sum is " + std::to_string(total) + ")");
  }

  static EdgeDistribution point(double w) { return EdgeDistribution({w}, {1.0}); }

  std::span<const double> support() const { return support_; }
  std::span<const double> probs() const { return probs_; }

  bool is_point_mass_at_zero() const { return support_.size() == 1 && support_[0] == 0.0; }

  /// Most likely weight; ties go to the smallest support value.
  double mode() const { return support_[mode_index()]; }

  double mode_mass() const { return probs_[mode_index()]; }

  /// PMF value at w (exact match); 0 off the support.
  double mass(double w) const {
    const auto it = std::lower_bound(support_.begin(), support_.end(), w);
    if (it == support_.end() || *it != w)
      return 0.0;
    return probs_[static_cast<std::size_t>(it - support_.begin())];
  }

  /// Inverse-CDF draw for a uniform variate u in [0,1).
  double sample(double u) const {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < support_.size(); ++i) {
      acc += probs_[i];
      if (u < acc)
        return support_[i];
    }
    return support_.back();
  }

  bool operator==(const EdgeDistribution &) const = default;

private:
  std::size_t mode_index() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < probs_.size(); ++i)
      if (probs_[i] > probs_[best])
        best = i;
    return best;
  }

  std::vector<double> support_;
  std::vector<double> probs_;
};

/// The space of weighted, attributed graphs: per-node thresholds and binary
/// labels, and one weight distribution per unordered pair. Pairs without a
/// stored distribution are point mass at 0.
class GraphSpace {
public:
  using DistMap = std::map<NodePair, EdgeDistribution>;

  GraphSpace() = default;

  GraphSpace(std::vector<double> thresholds, std::vector<std::uint8_t> labels, DistMap dists = {})
      : thresholds_(std::move(thresholds)), labels_(std::move(labels)), dists_(std::move(dists)) {
    if (thresholds_.size() != labels_.size())
      throw InputError("thresholds and labels must both have n entries");
    for (double a : thresholds_)
      check_unit_interval(a, "threshold");
    for (auto l : labels_)
      if (l > 1)
        throw InputError("labels must be 0 or 1");
    for (const auto &[pair, dist] : dists_) {
      if (pair.lo >= pair.hi)
        throw InputError("pair " + to_string(pair) + " must satisfy u < v");
      if (pair.hi >= size())
        throw InputError("pair " + to_string(pair) + " references a node outside [0, n)");
    }
  }

  /// Every node shares the threshold alpha.
  static GraphSpace with_global_threshold(double alpha, std::vector<std::uint8_t> labels, DistMap dists = {}) {
    std::vector<double> thresholds(labels.size(), alpha);
    return GraphSpace(std::move(thresholds), std::move(labels), std::move(dists));
  }

  std::size_t size() const { return thresholds_.size(); }
  std::span<const double> thresholds() const { return thresholds_; }
  std::span<const std::uint8_t> labels() const { return labels_; }
  const DistMap &distributions() const { return dists_; }

  bool labeled(NodeId v) const { return labels_.at(v) == 1; }

  std::vector<NodeId> labeled_nodes() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < size(); ++v)
      if (labels_[v] == 1)
        out.push_back(v);
    return out;
  }

  const EdgeDistribution &dist(NodePair p) const {
    static const EdgeDistribution zero;
    const auto it = dists_.find(p);
    return it == dists_.end() ? zero : it->second;
  }

  bool operator==(const GraphSpace &) const = default;

private:
  std::vector<double> thresholds_;
  std::vector<std::uint8_t> labels_;
  DistMap dists_;
};

/// One concrete weighted graph. Absent pairs have weight 0; zero weights are
/// never stored, so equal graphs compare equal.
class RealizedGraph {
public:
  using WeightMap = std::map<NodePair, double>;

  RealizedGraph() = default;
  explicit RealizedGraph(std::size_t n) : n_(n) {}

  std::size_t size() const { return n_; }
  const WeightMap &weights() const { return weights_; }

  double weight(NodePair p) const {
    const auto it = weights_.find(p);
    return it == weights_.end() ? 0.0 : it->second;
  }

  void set(NodePair p, double w) {
    if (p.hi >= n_)
      throw InputError("pair " + to_string(p) + " references a node outside [0, n)");
    check_unit_interval(w, "edge weight");
    if (w == 0.0)
      weights_.erase(p);
    else
      weights_[p] = w;
  }

  bool operator==(const RealizedGraph &) const = default;

private:
  std::size_t n_ = 0;
  WeightMap weights_;
};

/// Graph assigning every pair its distribution's mode.
inline RealizedGraph mle_graph(const GraphSpace &space) {
  RealizedGraph g(space.size());
  for (const auto &[pair, dist] : space.distributions())
    g.set(pair, dist.mode());
  return g;
}

/// Independent draw per pair. Each pair uses its own stream derived from
/// (seed, pair), so omitting a point-mass-at-0 pair changes nothing else.
inline RealizedGraph sample_graph(const GraphSpace &space, std::uint64_t seed) {
  RealizedGraph g(space.size());
  for (const auto &[pair, dist] : space.distributions()) {
    const std::uint64_t key = (static_cast<std::uint64_t>(pair.lo) << 32) | pair.hi;
    Rng rng(splitmix64(seed) ^ splitmix64(key + 0x632be59bd9b4e019ULL));
    g.set(pair, dist.sample(rng.unit()));
  }
  return g;
}

/// Positive-weight neighbours of v, ascending by id.
inline std::vector<std::pair<NodeId, double>> neighbors(const RealizedGraph &graph, NodeId v) {
  if (v >= graph.size())
    throw InputError("node " + std::to_string(v) + " is outside [0, " + std::to_string(graph.size()) + ")");
  std::vector<std::pair<NodeId, double>> out;
  for (const auto &[pair, w] : graph.weights())
    if (pair.contains(v))
      out.emplace_back(pair.other(v), w);
  std::sort(out.begin(), out.end());
  return out;
}

/// Adjacency lists for repeated traversal; index by node id.
inline std::vector<std::vector<std::pair<NodeId, double>>> adjacency(const RealizedGraph &graph) {
  std::vector<std::vector<std::pair<NodeId, double>>> adj(graph.size());
  for (const auto &[pair, w] : graph.weights()) {
    adj[pair.lo].emplace_back(pair.hi, w);
    adj[pair.hi].emplace_back(pair.lo, w);
  }
  return adj;
}

} // namespace netspace
