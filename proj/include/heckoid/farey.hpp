#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heckoid/riley.hpp"
#include "heckoid/slope.hpp"

namespace heckoid {

/// An integer Moebius map q/p -> (a q + b p)/(c q + d p) with determinant
/// ±1, stored projectively normalized: the first nonzero entry of
/// (a, b, c, d) is positive.
class BoundaryMap {
 public:
  BoundaryMap(BigInt a, BigInt b, BigInt c, BigInt d, std::string label = "")
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)),
        label_(std::move(label)) {
    BigInt det = a_ * d_ - b_ * c_;
    if (det != 1 && det != -1)
      throw std::invalid_argument("boundary map must have determinant ±1");
    const BigInt* entries[] = {&a_, &b_, &c_, &d_};
    for (const BigInt* e : entries) {
      if (e->is_zero()) continue;
      if (*e < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
      }
      break;
    }
  }

  static BoundaryMap identity() { return BoundaryMap(1, 0, 0, 1, "1"); }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }
  const std::string& label() const { return label_; }

  BigInt det() const { return a_ * d_ - b_ * c_; }
  BigInt trace() const { return a_ + d_; }

  /// Exact projective action; infinity = 1/0 needs no special case.
  Slope operator()(const Slope& s) const {
    return Slope(a_ * s.numerator() + b_ * s.denominator(),
                 c_ * s.numerator() + d_ * s.denominator());
  }

  /// Composition: (x * y)(s) = x(y(s)).
  friend BoundaryMap operator*(const BoundaryMap& x, const BoundaryMap& y) {
    return BoundaryMap(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                       x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_,
                       x.label_ + "*" + y.label_);
  }

  /// Projective equality (labels ignored).
  friend bool operator==(const BoundaryMap& x, const BoundaryMap& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

 private:
  BigInt a_, b_, c_, d_;
  std::string label_;
};

/// The three reflections generating Γ(0;n), one per Farey edge:
///   g1: x -> -x          (edge <∞, 0>)
///   g2: x -> 2 - x       (edge <∞, 1>)
///   g3: x -> x/(2nx - 1) (edge <0, 1/n>)
/// Each is an involution of the extended rationals with determinant -1.
struct Generators {
  BoundaryMap g1;
  BoundaryMap g2;
  BoundaryMap g3;
};

inline Generators reflection_generators(int index) {
  if (index < 2) throw std::invalid_argument("index must be at least 2");
  return Generators{BoundaryMap(-1, 0, 0, 1, "g1"), BoundaryMap(-1, 2, 0, 1, "g2"),
                    BoundaryMap(1, 0, 2 * BigInt(index), -1, "g3")};
}

struct ReductionStep {
  BoundaryMap map;
  Slope result;
};

/// Deterministic reduction of a slope to the canonical fundamental set
/// [1/n, 1] ∪ {∞, 0}, with the generator word that realizes it.
struct ReductionTrace {
  Slope start;
  std::vector<ReductionStep> steps;
  Slope canonical;

  std::size_t pierce_count() const {
    std::size_t k = 0;
    for (const ReductionStep& s : steps)
      if (s.map.label() == "g3") ++k;
    return k;
  }
};

/// Alternates two moves until the slope is canonical:
///   fold:   move s into [0, 1] with the dihedral group <g1, g2> (it acts
///           by x -> x + 2k and x -> 2k - x); done in closed form as one
///           translation step (1, 2j; 0, 1), a power of g2*g1, plus at
///           most one g2 reflection — the trace still records a valid
///           generator word;
///   pierce: if s is strictly inside (0, 1/n), apply g3.
/// Each pierce strictly shrinks the denominator (|2nq - p| < p, or the
/// image is ∞), which certifies termination within den(s) pierce steps.
inline ReductionTrace reduce_slope(const Slope& s, int index) {
  Generators gens = reflection_generators(index);
  const Slope lower(1, index);
  const Slope one(1);
  const Slope zero(0);

  ReductionTrace trace;
  trace.start = s;
  Slope cur = s;
  auto push = [&](const BoundaryMap& m) {
    cur = m(cur);
    trace.steps.push_back({m, cur});
  };

  for (;;) {
    if (cur.is_infinity() || cur == zero) break;
    if (lower <= cur && cur <= one) break;
    if (cur < zero || cur > one) {
      // fold: k = floor(s/2), then s - 2k lands in [0, 2)
      BigInt k = detail::floor_div(cur.numerator(), 2 * cur.denominator());
      if (!k.is_zero()) {
        BigInt j = -k;
        std::string label = (j > 0 ? "(g2*g1)^" : "(g1*g2)^") + BigInt(abs(j)).str();
        push(BoundaryMap(1, 2 * j, 0, 1, std::move(label)));
      }
      if (cur > one) push(gens.g2);
      continue;
    }
    push(gens.g3);  // cur in (0, 1/n)
  }
  trace.canonical = cur;
  return trace;
}

/// Same algorithm as reduce_slope without recording the trace; used where
/// only the canonical representative matters.
inline Slope reduce_canonical(const Slope& s, int index) {
  if (index < 2) throw std::invalid_argument("index must be at least 2");
  const BigInt two_n = 2 * BigInt(index);
  const Slope lower(1, index);
  const Slope one(1);
  const Slope zero(0);

  Slope cur = s;
  for (;;) {
    if (cur.is_infinity() || cur == zero) return cur;
    if (lower <= cur && cur <= one) return cur;
    if (cur < zero || cur > one) {
      BigInt k = detail::floor_div(cur.numerator(), 2 * cur.denominator());
      cur = Slope(cur.numerator() - 2 * k * cur.denominator(), cur.denominator());
      if (cur > one) cur = Slope(2 * cur.denominator() - cur.numerator(), cur.denominator());
      continue;
    }
    cur = Slope(cur.numerator(), two_n * cur.numerator() - cur.denominator());
  }
}

inline bool same_orbit(const Slope& s, const Slope& t, int index) {
  return reduce_canonical(s, index) == reduce_canonical(t, index);
}

}  // namespace heckoid
