#ifndef TDIFF_GRAPH_HPP
#define TDIFF_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdiff/errors.hpp"
#include "tdiff/product_set.hpp"
#include "tdiff/rational.hpp"

namespace tdiff {

struct Edge {
  NodeId source = 0;
  NodeId target = 0;
  Rational weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One end of an edge as seen from the other end.
struct Arc {
  NodeId node = 0;
  Rational weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Immutable weighted directed graph on nodes 0..n-1.
///
/// Invariants checked on construction: no self-loops, no parallel edges,
/// weights in [0,1], and the in-weights of every node sum to at most 1.
/// Adjacency is kept in compressed form for both directions, arcs sorted by
/// the neighbour id.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  WeightedDigraph(std::size_t node_count, std::vector<Edge> edges) : n_(node_count) {
    for (const Edge& e : edges) {
      if (e.source >= n_ || e.target >= n_) {
        throw ArgumentError("edge " + std::to_string(e.source) + "->" +
                            std::to_string(e.target) + " references an unknown node");
      }
      if (e.source == e.target) {
        throw ArgumentError("self-loop on node " + std::to_string(e.source));
      }
      if (e.weight.is_negative() || e.weight > Rational(1)) {
        throw ArgumentError("weight of edge " + std::to_string(e.source) + "->" +
                            std::to_string(e.target) + " is outside [0,1]");
      }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return a.target != b.target ? a.target < b.target : a.source < b.source;
    });
    for (std::size_t k = 1; k < edges.size(); ++k) {
      if (edges[k].target == edges[k - 1].target && edges[k].source == edges[k - 1].source) {
        throw ArgumentError("parallel edge " + std::to_string(edges[k].source) + "->" +
                            std::to_string(edges[k].target));
      }
    }

    in_offsets_.assign(n_ + 1, 0);
    out_offsets_.assign(n_ + 1, 0);
    for (const Edge& e : edges) {
      ++in_offsets_[e.target + 1];
      ++out_offsets_[e.source + 1];
    }
    for (std::size_t i = 0; i < n_; ++i) {
      in_offsets_[i + 1] += in_offsets_[i];
      out_offsets_[i + 1] += out_offsets_[i];
    }
    in_arcs_.resize(edges.size());
    out_arcs_.resize(edges.size());
    std::vector<std::size_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
    // Edges are sorted by (target, source): in-arcs come out sorted directly,
    // and out-arcs are filled in ascending target order per source.
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const Edge& e = edges[k];
      in_arcs_[k] = Arc{e.source, e.weight};
      out_arcs_[out_fill[e.source]++] = Arc{e.target, e.weight};
    }

    for (NodeId i = 0; i < n_; ++i) {
      Rational sum;
      for (const Arc& a : in_arcs(i)) sum += a.weight;
      if (sum > Rational(1)) {
        throw ArgumentError("in-weights of node " + std::to_string(i) + " sum to " + sum.str() +
                            " > 1");
      }
    }
  }

  [[nodiscard]] std::size_t node_count() const { return n_; }
  [[nodiscard]] std::size_t edge_count() const { return in_arcs_.size(); }

  /// In-neighbourhood N(i) with the weights w_ji.
  [[nodiscard]] std::span<const Arc> in_arcs(NodeId i) const {
    return {in_arcs_.data() + in_offsets_[i], in_arcs_.data() + in_offsets_[i + 1]};
  }
  [[nodiscard]] std::span<const Arc> out_arcs(NodeId i) const {
    return {out_arcs_.data() + out_offsets_[i], out_arcs_.data() + out_offsets_[i + 1]};
  }
  [[nodiscard]] std::size_t in_degree(NodeId i) const { return in_offsets_[i + 1] - in_offsets_[i]; }
  [[nodiscard]] bool has_in_neighbors(NodeId i) const { return in_degree(i) != 0; }

  [[nodiscard]] std::optional<Rational> weight(NodeId source, NodeId target) const {
    auto arcs = in_arcs(target);
    auto it = std::lower_bound(arcs.begin(), arcs.end(), source,
                               [](const Arc& a, NodeId s) { return a.node < s; });
    if (it == arcs.end() || it->node != source) return std::nullopt;
    return it->weight;
  }

  /// All edges ordered by (source, target).
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId j = 0; j < n_; ++j) {
      for (const Arc& a : out_arcs(j)) out.push_back(Edge{j, a.node, a.weight});
    }
    return out;
  }

  /// Copy without the in-edges of every node for which drop(i) holds.
  template <typename Pred>
  [[nodiscard]] WeightedDigraph without_edges_into(Pred drop) const {
    std::vector<Edge> kept;
    kept.reserve(edge_count());
    for (NodeId i = 0; i < n_; ++i) {
      if (drop(i)) continue;
      for (const Arc& a : in_arcs(i)) kept.push_back(Edge{a.node, i, a.weight});
    }
    return WeightedDigraph(n_, std::move(kept));
  }

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
    return a.n_ == b.n_ && a.in_offsets_ == b.in_offsets_ && a.in_arcs_ == b.in_arcs_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Arc> in_arcs_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Arc> out_arcs_;
};

}  // namespace tdiff

#endif  // TDIFF_GRAPH_HPP
