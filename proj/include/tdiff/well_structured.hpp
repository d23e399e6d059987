#ifndef TDIFF_WELL_STRUCTURED_HPP
#define TDIFF_WELL_STRUCTURED_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdiff/errors.hpp"
#include "tdiff/graph.hpp"
#include "tdiff/rational.hpp"

namespace tdiff {

/// level(i) for every node; witnesses (θ,t)-well-structuredness when every
/// node with in-neighbours gets weight ≥ θ(i) from strictly lower levels.
using LevelCertificate = std::vector<std::size_t>;

namespace detail {
inline void check_theta(const WeightedDigraph& g, std::span<const Rational> theta) {
  if (theta.size() != g.node_count()) throw ArgumentError("threshold vector size differs from node count");
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (!theta[i].is_positive() || theta[i] > Rational(1)) {
      throw ArgumentError("threshold of node " + std::to_string(i) + " is " + theta[i].str() +
                          ", outside (0,1]");
    }
  }
}
}  // namespace detail

/// Decides (θ,t)-well-structuredness and returns the minimal certificate.
///
/// Level 0 goes to exactly the nodes without in-neighbours. In round k every
/// node whose counter of in-weight from already-levelled nodes reached θ gets
/// level k. Counters are only touched through the out-arcs of nodes levelled
/// in the previous round, so each edge is processed once.
inline std::optional<LevelCertificate> check_well_structured(const WeightedDigraph& g,
                                                             std::span<const Rational> theta) {
  detail::check_theta(g, theta);
  const std::size_t n = g.node_count();
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  LevelCertificate level(n, unassigned);
  std::vector<Rational> counter(n);
  std::vector<std::size_t> touched_in_round(n, unassigned);

  std::vector<NodeId> frontier;
  for (NodeId i = 0; i < n; ++i) {
    if (!g.has_in_neighbors(i)) {
      level[i] = 0;
      frontier.push_back(i);
    }
  }
  if (n > 0 && frontier.empty()) return std::nullopt;

  std::size_t assigned = frontier.size();
  std::vector<NodeId> touched;
  for (std::size_t round = 1; !frontier.empty(); ++round) {
    touched.clear();
    for (NodeId j : frontier) {
      for (const Arc& a : g.out_arcs(j)) {
        if (level[a.node] != unassigned) continue;
        counter[a.node] += a.weight;
        if (touched_in_round[a.node] != round) {
          touched_in_round[a.node] = round;
          touched.push_back(a.node);
        }
      }
    }
    frontier.clear();
    for (NodeId i : touched) {
      if (counter[i] >= theta[i]) {
        level[i] = round;
        frontier.push_back(i);
      }
    }
    assigned += frontier.size();
  }
  if (assigned != n) return std::nullopt;
  return level;
}

/// Eq. (1) at every node with in-neighbours.
inline bool verify_certificate(const WeightedDigraph& g, std::span<const Rational> theta,
                               const LevelCertificate& cert) {
  if (cert.size() != g.node_count() || theta.size() != g.node_count()) return false;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (!g.has_in_neighbors(i)) continue;
    Rational lower;
    for (const Arc& a : g.in_arcs(i)) {
      if (cert[a.node] < cert[i]) lower += a.weight;
    }
    if (lower < theta[i]) return false;
  }
  return true;
}

}  // namespace tdiff

#endif  // TDIFF_WELL_STRUCTURED_HPP
