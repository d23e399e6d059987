#ifndef TDIFF_SPREAD_HPP
#define TDIFF_SPREAD_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "tdiff/closure.hpp"
#include "tdiff/network.hpp"
#include "tdiff/trace.hpp"
#include "tdiff/well_structured.hpp"

namespace tdiff {

namespace detail {
inline bool offered_everywhere(const Network& net, ProductId top) {
  return std::all_of(net.availability().begin(), net.availability().end(),
                     [&](ProductSet p) { return p.contains(top); });
}

/// θ(·,top); requires top ∈ p(i) for all i.
inline std::vector<Rational> thresholds_for(const Network& net, ProductId top) {
  std::vector<Rational> theta(net.node_count());
  for (NodeId i = 0; i < net.node_count(); ++i) theta[i] = net.threshold(i, top);
  return theta;
}

inline std::optional<LevelCertificate> derived_certificate(const Network& net, ProductId top) {
  if (!offered_everywhere(net, top)) return std::nullopt;
  const auto theta = thresholds_for(net, top);
  return check_well_structured(derived_graph(net, top), theta);
}
}  // namespace detail

/// [top] is reachable iff top is offered to every node and G_{p,top} is
/// (θ,top)-well-structured.
inline bool is_reachable_all(const Network& net, ProductId top) {
  net.check_product(top);
  return detail::derived_certificate(net, top).has_value();
}

/// Same decision by running top-only fast reductions to saturation.
inline bool is_reachable_all_by_closure(const Network& net, ProductId top) {
  net.check_product(top);
  if (!detail::offered_everywhere(net, top)) return false;
  return is_constant(product_closure(net, top), top);
}

/// Reduction sequence from net to [top] adopting top level by level along the
/// minimal certificate of G_{p,top}; one step per level unless serialize is
/// set, in which case every adoption is its own step.
inline std::optional<ReductionTrace> reachability_witness(const Network& net, ProductId top,
                                                          bool serialize = false) {
  net.check_product(top);
  const auto cert = detail::derived_certificate(net, top);
  if (!cert) return std::nullopt;
  const std::size_t max_level = cert->empty() ? 0 : *std::max_element(cert->begin(), cert->end());
  std::vector<std::vector<AdoptionEvent>> by_level(max_level + 1);
  for (NodeId i = 0; i < net.node_count(); ++i) {
    if (net.availability(i).size() >= 2) by_level[(*cert)[i]].push_back(AdoptionEvent{i, top});
  }
  ReductionTrace trace;
  for (const auto& step : by_level) {
    if (!step.empty()) trace.push_step(step);
  }
  return serialize ? trace.serialized() : trace;
}

/// [top] is unavoidable iff every node without in-neighbours already adopted
/// top and [top] is reachable.
inline bool is_unavoidable_all(const Network& net, ProductId top) {
  net.check_product(top);
  const ProductSet only_top = ProductSet::single(top);
  for (NodeId i = 0; i < net.node_count(); ++i) {
    if (!net.graph().has_in_neighbors(i) && net.availability(i) != only_top) return false;
  }
  return is_reachable_all(net, top);
}

}  // namespace tdiff

#endif  // TDIFF_SPREAD_HPP
