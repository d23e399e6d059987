#ifndef TDIFF_TESTS_BRUTE_HPP
#define TDIFF_TESTS_BRUTE_HPP

// Independent reference implementations used to check the library on small
// inputs. Deliberately naive: they share no code with the algorithms under test.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "tdiff/tdiff.hpp"

namespace tdiff::ref {

/// Pointwise minimum over every valid level function of g, or nullopt when
/// none exists. Any level function can be compressed to consecutive ranks
/// without breaking Eq. (1) and without raising a value, so it suffices to
/// enumerate ordered partitions of the nodes. A node is placed at rank k only
/// if its in-weight from ranks < k already meets θ (nodes without
/// in-neighbours go anywhere).
inline std::optional<LevelCertificate> brute_min_certificate(const WeightedDigraph& g,
                                                            const std::vector<Rational>& theta) {
  const std::size_t n = g.node_count();
  if (n == 0) return LevelCertificate{};
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  std::vector<std::size_t> rank(n, 0);
  std::optional<LevelCertificate> best;

  auto supported = [&](NodeId i, std::uint32_t placed_before) {
    if (!g.has_in_neighbors(i)) return true;
    Rational w;
    for (const Arc& a : g.in_arcs(i)) {
      if ((placed_before >> a.node) & 1u) w += a.weight;
    }
    return w >= theta[i];
  };

  auto recurse = [&](auto&& self, std::uint32_t placed, std::size_t k) -> void {
    if (placed == all) {
      if (!best) {
        best = LevelCertificate(rank.begin(), rank.end());
      } else {
        for (std::size_t i = 0; i < n; ++i) (*best)[i] = std::min((*best)[i], rank[i]);
      }
      return;
    }
    std::uint32_t eligible = 0;
    for (NodeId i = 0; i < n; ++i) {
      if (!((placed >> i) & 1u) && supported(i, placed)) eligible |= std::uint32_t{1} << i;
    }
    for (std::uint32_t sub = eligible; sub != 0; sub = (sub - 1) & eligible) {
      for (NodeId i = 0; i < n; ++i) {
        if ((sub >> i) & 1u) rank[i] = k;
      }
      self(self, placed | sub, k + 1);
    }
  };
  recurse(recurse, 0, 0);
  return best;
}

/// Can the numbers be split into two parts of equal sum?
inline bool partition_solvable(const std::vector<Rational>& a) {
  Rational total;
  for (const auto& x : a) total += x;
  const std::size_t n = a.size();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    Rational s;
    for (std::size_t k = 0; k < n; ++k) {
      if ((mask >> k) & 1u) s += a[k];
    }
    if (s + s == total) return true;
  }
  return false;
}

inline bool is_constant_map(const std::vector<ProductSet>& avail, ProductId t) {
  return std::all_of(avail.begin(), avail.end(), [&](ProductSet p) { return p == ProductSet::single(t); });
}

/// [top] among the final networks.
inline bool finals_contain_constant(const FinalSet& fs, ProductId top) {
  return std::any_of(fs.finals.begin(), fs.finals.end(), [&](const Network& f) { return is_constant(f, top); });
}

/// Seeded corpus of small networks with varied shape. Network k depends only
/// on (k, base_seed).
inline RandomSpec corpus_spec(std::size_t k, std::uint64_t base_seed, std::size_t max_nodes,
                              std::size_t max_products) {
  RandomSpec spec;
  spec.seed = base_seed * 1000003u + k;
  spec.nodes = 1 + (k * 7 + 3) % max_nodes;
  spec.products = 1 + (k / 3) % max_products;
  static constexpr double densities[] = {0.15, 0.3, 0.45, 0.6, 0.8};
  spec.density = densities[k % 5];
  spec.equitable = (k % 4) == 1;
  spec.adopted_fraction = (k % 3 == 0) ? 0.2 : 0.4;
  spec.isolated_adopted = (k % 6) == 2;
  return spec;
}

inline std::vector<Network> corpus(std::size_t count, std::uint64_t base_seed, std::size_t max_nodes,
                                   std::size_t max_products) {
  std::vector<Network> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(gen_random(corpus_spec(k, base_seed, max_nodes, max_products)));
  return out;
}

}  // namespace tdiff::ref

#endif  // TDIFF_TESTS_BRUTE_HPP
