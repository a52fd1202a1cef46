#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heckoid {

using BigInt = boost::multiprecision::cpp_int;

/// An extended rational q/p in lowest terms.
///
/// Invariants: gcd(|q|, p) = 1 and p >= 0; the point at infinity is stored
/// as 1/0 (so -1/0 normalizes to 1/0), zero as 0/1. Slopes are immutable
/// after construction and compare componentwise.
class Slope {
 public:
  Slope() : num_(0), den_(1) {}

  Slope(BigInt numerator, BigInt denominator) {
    normalize(std::move(numerator), std::move(denominator));
  }

  Slope(long long numerator, long long denominator)
      : Slope(BigInt(numerator), BigInt(denominator)) {}

  // Integer slope k = k/1.
  Slope(long long k) : num_(k), den_(1) {}  // NOLINT(google-explicit-constructor)

  static Slope infinity() { return Slope(1, 0); }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_infinity() const { return den_.is_zero(); }
  bool is_integer() const { return den_ == 1; }

  friend bool operator==(const Slope& x, const Slope& y) = default;

  // Finite slopes order as rationals; infinity is greater than every
  // rational (one-point order, enough for interval tests).
  friend bool operator<(const Slope& x, const Slope& y) {
    if (x.is_infinity()) return false;
    if (y.is_infinity()) return true;
    return x.num_ * y.den_ < y.num_ * x.den_;
  }
  friend bool operator>(const Slope& x, const Slope& y) { return y < x; }
  friend bool operator<=(const Slope& x, const Slope& y) { return !(y < x); }
  friend bool operator>=(const Slope& x, const Slope& y) { return !(x < y); }

  /// "q/p", or "k" for integers, or "∞".
  std::string str() const {
    if (is_infinity()) return "∞";
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  /// Accepts "q/p", "k", "∞" and "inf". No whitespace, no other forms.
  static Slope parse(std::string_view text);

 private:
  void normalize(BigInt n, BigInt d) {
    if (d.is_zero()) {
      if (n.is_zero()) throw std::invalid_argument("slope 0/0 is undefined");
      num_ = 1;
      den_ = 0;
      return;
    }
    if (d < 0) {
      n = -n;
      d = -d;
    }
    BigInt g = gcd(abs(n), d);
    num_ = n / g;
    den_ = d / g;
  }

  BigInt num_;
  BigInt den_;
};

inline Slope Slope::parse(std::string_view text) {
  if (text == "∞" || text == "inf") return infinity();
  auto bad = [&] {
    return std::invalid_argument("not a slope: \"" + std::string(text) + "\"");
  };
  auto parse_int = [&](std::string_view part) {
    std::size_t i = 0;
    if (i < part.size() && part[i] == '-') ++i;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
    return BigInt(std::string(part));
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Slope(parse_int(text), BigInt(1));
  return Slope(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

/// Continued fraction [m1, ..., mk] of a rational in (0, 1]:
/// s = 1/(m1 + 1/(m2 + ... + 1/mk)), all entries positive and mk >= 2
/// unless k = 1.
struct ContinuedFraction {
  std::vector<BigInt> entries;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Expansion of s with 0 < s <= 1; the Euclidean algorithm lands on the
/// normalized form directly (final entry >= 2 whenever k >= 2).
inline ContinuedFraction continued_fraction(const Slope& s) {
  if (s.is_infinity() || s <= Slope(0) || s > Slope(1))
    throw std::invalid_argument("continued_fraction requires 0 < s <= 1, got " + s.str());
  ContinuedFraction cf;
  BigInt x = s.denominator();
  BigInt y = s.numerator();
  while (!y.is_zero()) {
    cf.entries.push_back(x / y);
    BigInt r = x % y;
    x = y;
    y = r;
  }
  return cf;
}

inline Slope evaluate(const ContinuedFraction& cf) {
  if (cf.entries.empty())
    throw std::invalid_argument("empty continued fraction");
  for (const BigInt& m : cf.entries)
    if (m < 1) throw std::invalid_argument("continued fraction entries must be positive");
  // Fold from the innermost term: 1/(m + q/p) = p/(m p + q).
  BigInt q = 0;
  BigInt p = 1;
  for (auto it = cf.entries.rbegin(); it != cf.entries.rend(); ++it) {
    BigInt np = *it * p + q;
    q = p;
    p = np;
  }
  return Slope(q, p);
}

/// True iff s is rational and 1/n <= s <= 1.
inline bool in_fundamental_interval(const Slope& s, int index) {
  if (index < 2) throw std::invalid_argument("index must be at least 2");
  if (s.is_infinity()) return false;
  return Slope(1, index) <= s && s <= Slope(1);
}

}  // namespace heckoid
