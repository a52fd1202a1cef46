#pragma once

#include <stdexcept>
#include <utility>

#include "heckoid/slope.hpp"
#include "heckoid/word.hpp"

namespace heckoid {

namespace detail {

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  // b > 0; cpp_int division truncates toward zero.
  BigInt q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace detail

/// Sign (-1)^floor(i q / p) of the i-th exponent in the slope word of q/p.
/// True mathematical floor, so negative q is handled as written.
inline int riley_exponent(const BigInt& i, const BigInt& p, const BigInt& q) {
  if (p < 1) throw std::invalid_argument("riley_exponent requires p >= 1");
  if (i < 1 || i > p - 1) throw std::out_of_range("riley_exponent requires 1 <= i <= p-1");
  BigInt f = detail::floor_div(i * q, p);
  return f % 2 == 0 ? +1 : -1;
}

/// The slope word u_s of the upper presentation, together with the prefix
/// word u-hat it is assembled from:
///   p odd:  u = a u^ b^{(-1)^q} u^{-1},  u^ = b^{e1} a^{e2} ... b^{e_{p-2}} a^{e_{p-1}}
///   p even: u = a u^ a^{-1} u^{-1},      u^ = b^{e1} a^{e2} ... a^{e_{p-2}} b^{e_{p-1}}
/// |u_s| = 2p, and u_s is cyclically reduced and cyclically alternating.
struct SlopeWord {
  Slope slope;
  Word word;
  Word hat_word;
};

/// Accepts every rational slope (p = 1 covers the integers: u_0 = "ab",
/// u_1 = "aB"); rejects only infinity.
inline SlopeWord riley_word(const Slope& s) {
  if (s.is_infinity()) throw std::invalid_argument("no slope word for infinity");
  const BigInt& q = s.numerator();
  const BigInt& p = s.denominator();

  std::vector<Letter> hat;
  for (BigInt i = 1; i <= p - 1; ++i) {
    Gen g = (i % 2 != 0) ? Gen::b : Gen::a;
    hat.push_back({g, static_cast<std::int8_t>(riley_exponent(i, p, q))});
  }

  const bool p_odd = (p % 2 != 0);
  const std::int8_t middle_exp = p_odd ? (q % 2 == 0 ? std::int8_t{+1} : std::int8_t{-1})
                                       : std::int8_t{-1};
  const Gen middle_gen = p_odd ? Gen::b : Gen::a;

  std::vector<Letter> u;
  u.reserve(2 * hat.size() + 2);
  u.push_back({Gen::a, +1});
  u.insert(u.end(), hat.begin(), hat.end());
  u.push_back({middle_gen, middle_exp});
  for (auto it = hat.rbegin(); it != hat.rend(); ++it) u.push_back(it->inverse());

  SlopeWord out;
  out.slope = s;
  out.word = free_reduce(u);
  out.hat_word = free_reduce(hat);
  return out;
}

/// CS(s) for 0 < s <= 1: the cyclic S-sequence of the slope word u_s.
inline SSequence s_sequence_of_slope(const Slope& s) {
  if (s.is_infinity() || s <= Slope(0) || s > Slope(1))
    throw std::invalid_argument("cyclic S-sequence requires 0 < s <= 1, got " + s.str());
  return s_sequence(CyclicWord(riley_word(s).word));
}

}  // namespace heckoid
