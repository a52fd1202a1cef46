#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "heckoid/word.hpp"

namespace heckoid {

struct Mat2 {
  double a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }

  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

/// Entrywise max-norm of M - N.
inline double max_norm_diff(const Mat2& m, const Mat2& n) {
  double v = std::abs(m.a - n.a);
  v = std::max(v, std::abs(m.b - n.b));
  v = std::max(v, std::abs(m.c - n.c));
  v = std::max(v, std::abs(m.d - n.d));
  return v;
}

/// min(‖M - I‖, ‖M + I‖): distance to the projective identity.
inline double distance_to_identity(const Mat2& m) {
  const Mat2 id = Mat2::identity();
  const Mat2 neg{-1, 0, 0, -1};
  return std::min(max_norm_diff(m, id), max_norm_diff(m, neg));
}

/// Unimodularity defect |det - 1| relative to the size of the products
/// that cancel inside the determinant. Entries of long hyperbolic words
/// grow past 1e15, where the absolute defect is pure cancellation noise;
/// for matrices of moderate size this is the plain |det - 1|.
inline double det_defect(const Mat2& m) {
  const double scale = std::max(1.0, std::abs(m.a * m.d) + std::abs(m.b * m.c));
  return std::abs(m.det() - 1.0) / scale;
}

/// Hecke group data for index n: the parabolic P = (1, λ; 0, 1) with
/// λ = 2 cos(π/2n), the rotation S = (0, 1; -1, 0), and the images
/// A = P, B = S P S^-1 = (1, 0; -λ, 1) of the meridian generators, so
/// that H(0;n) maps onto the index-2 subgroup <P, S P S^-1>.
struct HeckeGenerators {
  double lambda;
  Mat2 P, S, A, B;
};

inline HeckeGenerators hecke_generators(int index) {
  if (index < 2) throw std::invalid_argument("index must be at least 2");
  const double lambda = 2.0 * std::cos(std::acos(-1.0) / (2.0 * index));
  HeckeGenerators g;
  g.lambda = lambda;
  g.P = {1, lambda, 0, 1};
  g.S = {0, 1, -1, 0};
  g.A = g.P;
  g.B = {1, 0, -lambda, 1};
  return g;
}

/// Evaluates a word left to right at a -> A, b -> B.
inline Mat2 represent(const Word& w, int index) {
  const HeckeGenerators g = hecke_generators(index);
  const Mat2 a_inv{1, -g.lambda, 0, 1};
  const Mat2 b_inv{1, 0, g.lambda, 1};
  Mat2 m = Mat2::identity();
  for (const Letter& l : w.letters()) {
    if (l.gen == Gen::a)
      m = m * (l.exp > 0 ? g.A : a_inv);
    else
      m = m * (l.exp > 0 ? g.B : b_inv);
  }
  return m;
}

enum class TraceKind : std::uint8_t { identity_like, elliptic, parabolic, hyperbolic };

struct TraceClass {
  TraceKind kind;
  double trace;
};

inline const char* to_string(TraceKind k) {
  switch (k) {
    case TraceKind::identity_like: return "identity";
    case TraceKind::elliptic: return "elliptic";
    case TraceKind::parabolic: return "parabolic";
    case TraceKind::hyperbolic: return "hyperbolic";
  }
  return "?";
}

/// |tr| against 2 with tolerance: elliptic below, parabolic at, hyperbolic
/// above; matrices within tol of ±I report identity_like.
inline TraceClass classify_matrix(const Mat2& m, double tol = 1e-6) {
  if (det_defect(m) >= 1e-6)
    throw std::invalid_argument("classify_matrix requires det = 1, got det = " +
                                std::to_string(m.det()));
  if (distance_to_identity(m) <= tol) return {TraceKind::identity_like, m.trace()};
  const double t = std::abs(m.trace());
  if (t < 2.0 - tol) return {TraceKind::elliptic, m.trace()};
  if (t <= 2.0 + tol) return {TraceKind::parabolic, m.trace()};
  return {TraceKind::hyperbolic, m.trace()};
}

}  // namespace heckoid
