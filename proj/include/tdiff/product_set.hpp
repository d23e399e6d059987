#ifndef TDIFF_PRODUCT_SET_HPP
#define TDIFF_PRODUCT_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tdiff {

using NodeId = std::uint32_t;
using ProductId = std::uint32_t;

inline constexpr std::size_t kMaxProducts = 64;

/// Set of product ids, stored as a bitmask over at most kMaxProducts products.
class ProductSet {
 public:
  constexpr ProductSet() = default;
  constexpr explicit ProductSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ProductSet single(ProductId t) { return ProductSet(std::uint64_t{1} << t); }

  /// {0, ..., count-1}
  static constexpr ProductSet first(std::size_t count) {
    return ProductSet(count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
  }

  [[nodiscard]] constexpr bool contains(ProductId t) const {
    return t < 64 && ((bits_ >> t) & 1u) != 0;
  }
  [[nodiscard]] constexpr std::size_t size() const { return std::popcount(bits_); }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr bool is_singleton() const { return std::has_single_bit(bits_); }
  /// Lowest member; only meaningful when non-empty.
  [[nodiscard]] constexpr ProductId front() const {
    return static_cast<ProductId>(std::countr_zero(bits_));
  }
  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }

  constexpr void insert(ProductId t) { bits_ |= std::uint64_t{1} << t; }
  constexpr void erase(ProductId t) { bits_ &= ~(std::uint64_t{1} << t); }

  [[nodiscard]] constexpr bool subset_of(ProductSet o) const { return (bits_ & ~o.bits_) == 0; }
  [[nodiscard]] constexpr ProductSet operator&(ProductSet o) const { return ProductSet(bits_ & o.bits_); }
  [[nodiscard]] constexpr ProductSet operator|(ProductSet o) const { return ProductSet(bits_ | o.bits_); }

  friend constexpr bool operator==(ProductSet, ProductSet) = default;
  friend constexpr auto operator<=>(ProductSet a, ProductSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    using value_type = ProductId;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr ProductId operator*() const { return static_cast<ProductId>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  [[nodiscard]] constexpr iterator begin() const { return iterator(bits_); }
  [[nodiscard]] constexpr iterator end() const { return iterator(0); }

  [[nodiscard]] std::vector<ProductId> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace tdiff

#endif  // TDIFF_PRODUCT_SET_HPP
