#ifndef TDIFF_NETWORK_HPP
#define TDIFF_NETWORK_HPP

#include <algorithm>
#include <initializer_list>
#include <string_view>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tdiff/errors.hpp"
#include "tdiff/graph.hpp"
#include "tdiff/product_set.hpp"
#include "tdiff/rational.hpp"

namespace tdiff {

/// A social network (G, P, p, θ): a weighted digraph, a product universe, the
/// availability map p and the thresholds θ.
///
/// Networks are immutable values. Everything except p lives in a shared
/// model, so networks reached by reductions are cheap to copy and share their
/// graph and thresholds with the network they started from.
///
/// θ(i,t) is defined exactly for the products available to i in the network
/// the model was built with. Reduced networks only ever shrink p(i), so θ stays
/// defined for every product of the original availability; can_switch relies
/// on this.
class Network {
 public:
  Network(WeightedDigraph graph, std::vector<std::string> products,
          std::vector<ProductSet> availability, std::vector<Rational> thresholds)
      : avail_(std::move(availability)) {
    auto model = std::make_shared<Model>();
    model->graph = std::move(graph);
    model->products = std::move(products);
    model->theta = std::move(thresholds);
    model->domain = avail_;
    const std::size_t n = model->graph.node_count();
    const std::size_t pc = model->products.size();
    if (pc == 0) throw ArgumentError("product universe is empty");
    if (pc > kMaxProducts) throw ArgumentError("more than 64 products");
    for (std::size_t a = 0; a < pc; ++a) {
      for (std::size_t b = a + 1; b < pc; ++b) {
        if (model->products[a] == model->products[b]) {
          throw ArgumentError("duplicate product name '" + model->products[a] + "'");
        }
      }
    }
    if (avail_.size() != n) throw ArgumentError("availability map size differs from node count");
    if (model->theta.size() != n * pc) throw ArgumentError("threshold table has wrong size");
    const ProductSet universe = ProductSet::first(pc);
    for (NodeId i = 0; i < n; ++i) {
      if (avail_[i].empty()) {
        throw ArgumentError("node " + std::to_string(i) + " has an empty product set");
      }
      if (!avail_[i].subset_of(universe)) {
        throw ArgumentError("node " + std::to_string(i) + " offers an unknown product");
      }
      for (ProductId t : avail_[i]) {
        const Rational& th = model->theta[i * pc + t];
        if (!th.is_positive() || th > Rational(1)) {
          throw ArgumentError("threshold of node " + std::to_string(i) + " for product '" +
                              model->products[t] + "' is " + th.str() + ", outside (0,1]");
        }
      }
    }
    model_ = std::move(model);
  }

  [[nodiscard]] const WeightedDigraph& graph() const { return model_->graph; }
  [[nodiscard]] std::size_t node_count() const { return avail_.size(); }
  [[nodiscard]] std::size_t product_count() const { return model_->products.size(); }
  [[nodiscard]] const std::vector<std::string>& product_names() const { return model_->products; }
  [[nodiscard]] const std::string& product_name(ProductId t) const {
    check_product(t);
    return model_->products[t];
  }
  [[nodiscard]] std::optional<ProductId> find_product(std::string_view name) const {
    auto& ps = model_->products;
    auto it = std::find(ps.begin(), ps.end(), name);
    if (it == ps.end()) return std::nullopt;
    return static_cast<ProductId>(it - ps.begin());
  }
  [[nodiscard]] ProductId product_id(std::string_view name) const {
    if (auto t = find_product(name)) return *t;
    throw ArgumentError("unknown product '" + std::string(name) + "'");
  }

  /// p(i)
  [[nodiscard]] ProductSet availability(NodeId i) const {
    check_node(i);
    return avail_[i];
  }
  [[nodiscard]] std::span<const ProductSet> availability() const { return avail_; }

  /// Products for which θ(i,·) is defined.
  [[nodiscard]] ProductSet threshold_domain(NodeId i) const {
    check_node(i);
    return model_->domain[i];
  }

  [[nodiscard]] const Rational& threshold(NodeId i, ProductId t) const {
    check_node(i);
    check_product(t);
    if (!model_->domain[i].contains(t)) {
      throw ArgumentError("threshold of node " + std::to_string(i) + " for product '" +
                          model_->products[t] + "' is undefined");
    }
    return model_->theta[i * product_count() + t];
  }

  /// The product i adopted, if p(i) is a singleton.
  [[nodiscard]] std::optional<ProductId> adopted(NodeId i) const {
    check_node(i);
    if (avail_[i].is_singleton()) return avail_[i].front();
    return std::nullopt;
  }

  /// Same graph, products and thresholds with another availability map. Every
  /// p'(i) must be a non-empty subset of the threshold domain of i.
  [[nodiscard]] Network with_availability(std::vector<ProductSet> availability) const {
    if (availability.size() != node_count()) {
      throw ArgumentError("availability map size differs from node count");
    }
    for (NodeId i = 0; i < availability.size(); ++i) {
      if (availability[i].empty() || !availability[i].subset_of(model_->domain[i])) {
        throw ArgumentError("availability of node " + std::to_string(i) +
                            " is empty or outside its threshold domain");
      }
    }
    Network out = *this;
    out.avail_ = std::move(availability);
    return out;
  }

  [[nodiscard]] bool shares_model_with(const Network& o) const { return model_ == o.model_; }

  void check_node(NodeId i) const {
    if (i >= avail_.size()) throw ArgumentError("unknown node " + std::to_string(i));
  }
  void check_product(ProductId t) const {
    if (t >= model_->products.size()) throw ArgumentError("unknown product id " + std::to_string(t));
  }

  /// Equal availability maps over equal graphs, product lists and thresholds.
  friend bool operator==(const Network& a, const Network& b) {
    if (a.avail_ != b.avail_) return false;
    if (a.model_ == b.model_) return true;
    return a.model_->graph == b.model_->graph && a.model_->products == b.model_->products &&
           a.model_->domain == b.model_->domain && a.same_thresholds(b);
  }

 private:
  struct Model {
    WeightedDigraph graph;
    std::vector<std::string> products;
    std::vector<Rational> theta;  // row-major n x |P|
    std::vector<ProductSet> domain;
  };

  bool same_thresholds(const Network& b) const {
    const std::size_t pc = product_count();
    for (NodeId i = 0; i < node_count(); ++i) {
      for (ProductId t : model_->domain[i]) {
        if (model_->theta[i * pc + t] != b.model_->theta[i * pc + t]) return false;
      }
    }
    return true;
  }

  std::shared_ptr<const Model> model_;
  std::vector<ProductSet> avail_;
};

/// Incremental construction of a Network by product names.
class NetworkBuilder {
 public:
  explicit NetworkBuilder(std::vector<std::string> products) : products_(std::move(products)) {}

  [[nodiscard]] ProductId product(std::string_view name) const {
    auto it = std::find(products_.begin(), products_.end(), name);
    if (it == products_.end()) throw ArgumentError("unknown product '" + std::string(name) + "'");
    return static_cast<ProductId>(it - products_.begin());
  }

  [[nodiscard]] ProductSet products(std::initializer_list<std::string_view> names) const {
    ProductSet s;
    for (auto name : names) s.insert(product(name));
    return s;
  }

  /// Node with a product-independent threshold.
  NodeId add_node(ProductSet available, Rational threshold) {
    avail_.push_back(available);
    theta_.emplace_back(products_.size(), threshold);
    return static_cast<NodeId>(avail_.size() - 1);
  }

  NodeId add_node(std::initializer_list<std::string_view> available, Rational threshold) {
    return add_node(products(available), threshold);
  }

  void set_threshold(NodeId i, ProductId t, Rational threshold) { theta_.at(i).at(t) = threshold; }
  void set_threshold(NodeId i, std::string_view t, Rational threshold) {
    set_threshold(i, product(t), threshold);
  }

  void add_edge(NodeId source, NodeId target, Rational weight) {
    edges_.push_back(Edge{source, target, weight});
  }

  [[nodiscard]] std::size_t node_count() const { return avail_.size(); }

  [[nodiscard]] Network build() const {
    std::vector<Rational> flat;
    flat.reserve(avail_.size() * products_.size());
    for (const auto& row : theta_) flat.insert(flat.end(), row.begin(), row.end());
    return Network(WeightedDigraph(avail_.size(), edges_), products_, avail_, std::move(flat));
  }

 private:
  std::vector<std::string> products_;
  std::vector<ProductSet> avail_;
  std::vector<std::vector<Rational>> theta_;
  std::vector<Edge> edges_;
};

struct AdoptionEvent {
  NodeId node = 0;
  ProductId product = 0;

  friend bool operator==(const AdoptionEvent&, const AdoptionEvent&) = default;
};

/// Σ_{j ∈ N(i), p(j) = {t}} w_ji
inline Rational adopter_weight(const Network& net, NodeId i, ProductId t) {
  Rational sum;
  const auto avail = net.availability();
  const ProductSet only_t = ProductSet::single(t);
  for (const Arc& a : net.graph().in_arcs(i)) {
    if (avail[a.node] == only_t) sum += a.weight;
  }
  return sum;
}

/// A(t,i): vacuously true for nodes without in-neighbours.
inline bool adoption_condition(const Network& net, NodeId i, ProductId t) {
  net.check_node(i);
  net.check_product(t);
  if (!net.graph().has_in_neighbors(i)) return true;
  return adopter_weight(net, i, t) >= net.threshold(i, t);
}

inline bool can_adopt(const Network& net, NodeId i, ProductId t) {
  net.check_node(i);
  net.check_product(t);
  const ProductSet p = net.availability(i);
  return p.contains(t) && p.size() >= 2 && adoption_condition(net, i, t);
}

/// All t that i can adopt. One pass over the in-arcs of i.
inline ProductSet adoptable_products(const Network& net, NodeId i) {
  const ProductSet p = net.availability(i);
  if (p.size() < 2) return {};
  const auto& g = net.graph();
  if (!g.has_in_neighbors(i)) return p;
  const auto avail = net.availability();
  ProductSet out;
  for (ProductId t : p) {
    Rational sum;
    const ProductSet only_t = ProductSet::single(t);
    for (const Arc& a : g.in_arcs(i)) {
      if (avail[a.node] == only_t) sum += a.weight;
    }
    if (sum >= net.threshold(i, t)) out.insert(t);
  }
  return out;
}

/// One reduction step p1 → p2 in which every event's node adopts its product
/// simultaneously. Throws ReductionError naming the first offending event.
inline Network apply_events(const Network& net, std::span<const AdoptionEvent> events) {
  if (events.empty()) throw ReductionError("empty event set is not a reduction step");
  std::vector<ProductSet> next(net.availability().begin(), net.availability().end());
  std::vector<bool> seen(net.node_count(), false);
  for (const AdoptionEvent& e : events) {
    const std::string label = "(" + std::to_string(e.node) + ", " + std::to_string(e.product) + ")";
    if (e.node >= net.node_count() || e.product >= net.product_count()) {
      throw ReductionError("event " + label + " references an unknown node or product");
    }
    if (seen[e.node]) throw ReductionError("event " + label + " repeats node " + std::to_string(e.node));
    seen[e.node] = true;
    if (!can_adopt(net, e.node, e.product)) {
      throw ReductionError("event " + label + ": node cannot adopt '" +
                           net.product_name(e.product) + "'");
    }
    next[e.node] = ProductSet::single(e.product);
  }
  return net.with_availability(std::move(next));
}

inline Network apply_event(const Network& net, AdoptionEvent e) {
  return apply_events(net, std::span<const AdoptionEvent>(&e, 1));
}

inline bool is_final(const Network& net) {
  for (NodeId i = 0; i < net.node_count(); ++i) {
    if (!adoptable_products(net, i).empty()) return false;
  }
  return true;
}

/// Products t ∈ p(i) whose total in-weight from neighbours still offering t is
/// below θ(i,t). Empty for adopted nodes and for nodes without in-neighbours.
inline ProductSet infeasible_products(const Network& net, NodeId i) {
  const ProductSet p = net.availability(i);
  if (p.size() < 2 || !net.graph().has_in_neighbors(i)) return {};
  const auto avail = net.availability();
  ProductSet out;
  for (ProductId t : p) {
    Rational support;
    for (const Arc& a : net.graph().in_arcs(i)) {
      if (avail[a.node].contains(t)) support += a.weight;
    }
    if (support < net.threshold(i, t)) out.insert(t);
  }
  return out;
}

/// G_{p,t}: G without the in-edges of nodes that adopted t.
inline WeightedDigraph derived_graph(const Network& net, ProductId t) {
  net.check_product(t);
  const ProductSet only_t = ProductSet::single(t);
  const auto avail = net.availability();
  return net.graph().without_edges_into([&](NodeId i) { return avail[i] == only_t; });
}

/// Every w_ji equals 1/|N(i)|.
inline bool is_equitable(const Network& net) {
  const auto& g = net.graph();
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto arcs = g.in_arcs(i);
    if (arcs.empty()) continue;
    const Rational share(1, static_cast<std::int64_t>(arcs.size()));
    for (const Arc& a : arcs) {
      if (a.weight != share) return false;
    }
  }
  return true;
}

/// True when p(i) = {t} for every node, i.e. the network is [t].
inline bool is_constant(const Network& net, ProductId t) {
  const ProductSet only_t = ProductSet::single(t);
  return std::all_of(net.availability().begin(), net.availability().end(),
                     [&](ProductSet p) { return p == only_t; });
}

inline std::size_t count_adopters(const Network& net, ProductId t) {
  const ProductSet only_t = ProductSet::single(t);
  return static_cast<std::size_t>(std::count(net.availability().begin(), net.availability().end(), only_t));
}

}  // namespace tdiff

#endif  // TDIFF_NETWORK_HPP
