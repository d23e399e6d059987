#ifndef TDIFF_ORACLE_HPP
#define TDIFF_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <unordered_set>
#include <vector>

#include "tdiff/errors.hpp"
#include "tdiff/network.hpp"

namespace tdiff {

inline constexpr std::size_t kDefaultStateBudget = 2'000'000;

struct EnumerateOptions {
  std::size_t budget = kDefaultStateBudget;
  /// Explore simultaneous multi-node steps instead of single adoptions.
  bool multi_event = false;
  /// Keep every reachable availability map, not only the final ones.
  bool keep_reachable = false;
};

/// Every final network reachable from `initial`, in canonical order
/// (lexicographic over the availability map).
struct FinalSet {
  Network initial;
  std::vector<Network> finals;
  std::size_t reachable_count = 0;
  /// Filled only with EnumerateOptions::keep_reachable, in canonical order.
  std::vector<std::vector<ProductSet>> reachable;

  [[nodiscard]] std::size_t size() const { return finals.size(); }
};

namespace detail {

/// Per-node byte: 0 while the node keeps its initial set, 1+t once it adopted t.
using StateKey = std::string;

class StateSpace {
 public:
  explicit StateSpace(const Network& net) : net_(net), initial_(net.availability().begin(), net.availability().end()) {}

  [[nodiscard]] StateKey root() const { return StateKey(net_.node_count(), '\0'); }

  /// Product adopted by j in state s, or npos.
  [[nodiscard]] std::size_t adopted(const StateKey& s, NodeId j) const {
    const auto c = static_cast<unsigned char>(s[j]);
    if (c != 0) return c - 1u;
    if (initial_[j].is_singleton()) return initial_[j].front();
    return npos;
  }

  [[nodiscard]] ProductSet enabled(const StateKey& s, NodeId i) const {
    if (s[i] != 0 || initial_[i].size() < 2) return {};
    const auto& g = net_.graph();
    if (!g.has_in_neighbors(i)) return initial_[i];
    ProductSet out;
    for (ProductId t : initial_[i]) {
      Rational sum;
      for (const Arc& a : g.in_arcs(i)) {
        if (adopted(s, a.node) == t) sum += a.weight;
      }
      if (sum >= net_.threshold(i, t)) out.insert(t);
    }
    return out;
  }

  [[nodiscard]] std::vector<ProductSet> availability(const StateKey& s) const {
    std::vector<ProductSet> out(initial_);
    for (NodeId i = 0; i < out.size(); ++i) {
      if (s[i] != 0) out[i] = ProductSet::single(static_cast<unsigned char>(s[i]) - 1u);
    }
    return out;
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  const Network& net_;
  std::vector<ProductSet> initial_;
};

inline bool canonical_less(const std::vector<ProductSet>& a, const std::vector<ProductSet>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

/// Depth-first search over the reduction state space, memoized on the
/// adoption vector. Aborts with ResourceError once more than `budget` distinct
/// states have been visited.
inline FinalSet enumerate(const Network& net, const EnumerateOptions& options = {}) {
  if (options.budget == 0) throw ArgumentError("state budget must be positive");
  const detail::StateSpace space(net);
  const std::size_t n = net.node_count();

  std::unordered_set<detail::StateKey> visited;
  std::vector<detail::StateKey> stack;
  std::vector<std::vector<ProductSet>> finals;

  auto visit = [&](detail::StateKey s) {
    if (!visited.insert(s).second) return;
    if (visited.size() > options.budget) {
      throw ResourceError("state budget of " + std::to_string(options.budget) + " exhausted",
                          visited.size());
    }
    stack.push_back(std::move(s));
  };

  visit(space.root());
  std::vector<NodeId> movers;
  std::vector<ProductSet> choices;
  while (!stack.empty()) {
    detail::StateKey s = std::move(stack.back());
    stack.pop_back();
    movers.clear();
    choices.clear();
    for (NodeId i = 0; i < n; ++i) {
      const ProductSet e = space.enabled(s, i);
      if (e.empty()) continue;
      movers.push_back(i);
      choices.push_back(e);
    }
    if (movers.empty()) {
      finals.push_back(space.availability(s));
      continue;
    }
    if (!options.multi_event) {
      for (std::size_t k = 0; k < movers.size(); ++k) {
        for (ProductId t : choices[k]) {
          detail::StateKey next = s;
          next[movers[k]] = static_cast<char>(t + 1);
          visit(std::move(next));
        }
      }
      continue;
    }
    // Every combination of "stay" or "adopt one enabled product" per mover,
    // except all-stay. Odometer over the movers' choices.
    std::vector<std::vector<ProductId>> options_of(movers.size());
    for (std::size_t k = 0; k < movers.size(); ++k) options_of[k] = choices[k].to_vector();
    std::vector<std::size_t> digit(movers.size(), 0);  // 0 = stay, d = options_of[k][d-1]
    while (true) {
      std::size_t k = 0;
      while (k < digit.size() && digit[k] == options_of[k].size()) digit[k++] = 0;
      if (k == digit.size()) break;
      ++digit[k];
      detail::StateKey next = s;
      for (std::size_t m = 0; m < movers.size(); ++m) {
        if (digit[m] != 0) next[movers[m]] = static_cast<char>(options_of[m][digit[m] - 1] + 1);
      }
      visit(std::move(next));
    }
  }

  std::sort(finals.begin(), finals.end(), detail::canonical_less);
  FinalSet out{net, {}, visited.size(), {}};
  out.finals.reserve(finals.size());
  for (auto& f : finals) out.finals.push_back(net.with_availability(std::move(f)));
  if (options.keep_reachable) {
    out.reachable.reserve(visited.size());
    for (const auto& s : visited) out.reachable.push_back(space.availability(s));
    std::sort(out.reachable.begin(), out.reachable.end(), detail::canonical_less);
  }
  return out;
}

inline FinalSet enumerate(const Network& net, std::size_t budget) {
  return enumerate(net, EnumerateOptions{budget, false, false});
}

/// FINAL: some final network in which every node adopted a product.
inline bool final_exists_all_adopted(const Network& net, std::size_t budget = kDefaultStateBudget) {
  const FinalSet fs = enumerate(net, budget);
  return std::any_of(fs.finals.begin(), fs.finals.end(), [](const Network& f) {
    return std::all_of(f.availability().begin(), f.availability().end(),
                       [](ProductSet p) { return p.is_singleton(); });
  });
}

/// ADOPTION 1: i adopted some product in every final network.
inline bool adoption1_unavoidable_some(const Network& net, NodeId i,
                                       std::size_t budget = kDefaultStateBudget) {
  net.check_node(i);
  const FinalSet fs = enumerate(net, budget);
  return std::all_of(fs.finals.begin(), fs.finals.end(),
                     [&](const Network& f) { return f.availability(i).is_singleton(); });
}

/// ADOPTION 2: i adopted t in every final network.
inline bool adoption2_unavoidable_given(const Network& net, NodeId i, ProductId t,
                                        std::size_t budget = kDefaultStateBudget) {
  net.check_node(i);
  net.check_product(t);
  const FinalSet fs = enumerate(net, budget);
  return std::all_of(fs.finals.begin(), fs.finals.end(),
                     [&](const Network& f) { return f.availability(i) == ProductSet::single(t); });
}

/// ADOPTION 3 by enumeration.
inline bool adoption3_exact(const Network& net, NodeId i, std::size_t budget = kDefaultStateBudget) {
  net.check_node(i);
  const FinalSet fs = enumerate(net, budget);
  return std::any_of(fs.finals.begin(), fs.finals.end(),
                     [&](const Network& f) { return f.availability(i).is_singleton(); });
}

/// ADOPTION 4 by enumeration.
inline bool adoption4_exact(const Network& net, NodeId i, ProductId t,
                            std::size_t budget = kDefaultStateBudget) {
  net.check_node(i);
  net.check_product(t);
  const FinalSet fs = enumerate(net, budget);
  return std::any_of(fs.finals.begin(), fs.finals.end(),
                     [&](const Network& f) { return f.availability(i) == ProductSet::single(t); });
}

/// MIN-ADOPTION: fewest t-adopters over all final networks.
inline std::size_t min_adoption_exact(const Network& net, ProductId t,
                                      std::size_t budget = kDefaultStateBudget) {
  net.check_product(t);
  const FinalSet fs = enumerate(net, budget);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const Network& f : fs.finals) best = std::min(best, count_adopters(f, t));
  return best;
}

/// MAX-ADOPTION by enumeration.
inline std::size_t max_adoption_exact(const Network& net, ProductId t,
                                      std::size_t budget = kDefaultStateBudget) {
  net.check_product(t);
  const FinalSet fs = enumerate(net, budget);
  std::size_t best = 0;
  for (const Network& f : fs.finals) best = std::max(best, count_adopters(f, t));
  return best;
}

}  // namespace tdiff

#endif  // TDIFF_ORACLE_HPP
