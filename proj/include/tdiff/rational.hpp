#ifndef TDIFF_RATIONAL_HPP
#define TDIFF_RATIONAL_HPP

#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tdiff {

/// Exact rational number with a 64-bit numerator and a positive 64-bit
/// denominator, always kept in lowest terms.
///
/// Intermediate products are computed in 128 bits; a result that does not fit
/// back into 64 bits throws std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }

  [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
  [[nodiscard]] constexpr bool is_positive() const { return num_ > 0; }
  [[nodiscard]] constexpr bool is_negative() const { return num_ < 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from_wide(wide(a.num_) + b.num_, a.den_);
    return from_wide(wide(a.num_) * b.den_ + wide(b.num_) * a.den_,
                     wide(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from_wide(wide(a.num_) - b.num_, a.den_);
    return from_wide(wide(a.num_) * b.den_ - wide(b.num_) * a.den_,
                     wide(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from_wide(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
  }
  Rational operator-() const { return from_wide(-wide(num_), den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    const wide lhs = wide(a.num_) * b.den_;
    const wide rhs = wide(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Always "num/den", including integers ("1/1").
  [[nodiscard]] std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "a/b" or a bare integer "a". Decimal and exponent notation are
  /// rejected so that no value is ever approximated.
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    std::int64_t n = parse_int(text.substr(0, slash), text);
    std::int64_t d = 1;
    if (slash != std::string_view::npos) d = parse_int(text.substr(slash + 1), text);
    if (d <= 0) {
      throw std::invalid_argument("rational '" + std::string(text) +
                                  "' must have a positive denominator");
    }
    return Rational(n, d);
  }

 private:
  using wide = __int128;

  static wide gcd(wide a, wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      wide r = a % b;
      a = b;
      b = r;
    }
    return a;
  }

  static Rational from_wide(wide n, wide d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return Rational{};
    wide g = gcd(n, d);
    n /= g;
    d /= g;
    constexpr wide lo = INT64_MIN;
    constexpr wide hi = INT64_MAX;
    if (n < lo || n > hi || d > hi) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(n, d);
  }

  static std::int64_t parse_int(std::string_view part, std::string_view whole) {
    std::int64_t v = 0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (part.empty() || ec != std::errc{} || ptr != last) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) +
                                  "' (expected num/den)");
    }
    return v;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace tdiff

template <>
struct std::hash<tdiff::Rational> {
  std::size_t operator()(const tdiff::Rational& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 31u ^ std::hash<std::int64_t>{}(r.den());
  }
};

#endif  // TDIFF_RATIONAL_HPP
