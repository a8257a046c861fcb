#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace epsnet {

/// Thrown when an exact rational operation does not fit in 64-bit terms.
class RationalOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Exact rational number in lowest terms with a positive denominator.
///
/// All threshold decisions in the library ("P(R) >= eps", "rho >= level")
/// go through the comparison operators, which cross-multiply in 128-bit
/// arithmetic, so no decision ever depends on floating-point rounding.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  [[nodiscard]] std::int64_t num() const { return num_; }
  [[nodiscard]] std::int64_t den() const { return den_; }

  [[nodiscard]] bool is_zero() const { return num_ == 0; }
  [[nodiscard]] bool is_positive() const { return num_ > 0; }

  [[nodiscard]] long double to_long_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }
  [[nodiscard]] double to_double() const { return static_cast<double>(to_long_double()); }

  /// Canonical "a/b" form; integers are written "a/1".
  [[nodiscard]] std::string str() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Parses "a/b", "-a/b", "+a/b" or a bare integer "a". Throws std::invalid_argument
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Smallest integer c >= 0 with 2^c >= 1/eps, i.e. ceil(log2(1/eps)) for eps in (0, 1].
int ceil_log2_inverse(const Rational& eps);

/// 2^i * value, exactly.
Rational times_pow2(const Rational& value, int i);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace epsnet
