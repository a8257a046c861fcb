#include "epsnet/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace epsnet {
namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (!fits64(num) || !fits64(den)) throw RationalOverflow("rational does not fit in 64 bits");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ +
                                 static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero rational");
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_,
                             static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part, bool allow_sign) -> std::int64_t {
    if (part.empty()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    bool negative = false;
    if (allow_sign && (part.front() == '+' || part.front() == '-')) {
      negative = part.front() == '-';
      part.remove_prefix(1);
    }
    if (part.empty() || part.front() < '0' || part.front() > '9')
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return negative ? -value : value;
  };

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true));
  const std::int64_t num = parse_int(text.substr(0, slash), true);
  const std::int64_t den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

int ceil_log2_inverse(const Rational& eps) {
  if (!eps.is_positive()) throw std::domain_error("ceil_log2_inverse needs eps > 0");
  // 2^c * num >= den
  int c = 0;
  __int128 lhs = eps.num();
  while (lhs < eps.den()) {
    lhs *= 2;
    ++c;
  }
  return c;
}

Rational times_pow2(const Rational& value, int i) {
  if (i >= 0) {
    if (i > 62) throw RationalOverflow("power of two exponent too large");
    return value * Rational(std::int64_t{1} << i);
  }
  if (-i > 62) throw RationalOverflow("power of two exponent too large");
  return value / Rational(std::int64_t{1} << -i);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace epsnet
