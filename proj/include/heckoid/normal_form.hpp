#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckoid/word.hpp"

namespace heckoid {

/// H(0;n) = <a,b | (ab)^n> is the free product Z * Z/n, with a generating
/// the Z factor and x = ab generating the Z/n factor, so b = a^-1 x. A
/// syllable is a nontrivial element of one factor: a^k with k != 0, or x^m
/// with m in 1..n-1 (residues kept canonical so equality is syntactic).
struct Syllable {
  enum class Factor : std::uint8_t { A, X };

  Factor factor;
  std::int64_t exp;

  static Syllable a(std::int64_t k) { return {Factor::A, k}; }
  static Syllable x(std::int64_t m) { return {Factor::X, m}; }

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

namespace detail {

inline std::int64_t mod_index(std::int64_t v, int n) {
  std::int64_t m = v % n;
  return m < 0 ? m + n : m;
}

/// Appends one syllable to an alternating stack, merging (and cancelling)
/// inside a factor. Keeps the stack a valid normal form.
inline void push_syllable(std::vector<Syllable>& stack, Syllable s, int n) {
  if (s.factor == Syllable::Factor::X) s.exp = mod_index(s.exp, n);
  if (s.exp == 0) return;
  if (!stack.empty() && stack.back().factor == s.factor) {
    std::int64_t merged = stack.back().exp + s.exp;
    if (s.factor == Syllable::Factor::X) merged = mod_index(merged, n);
    if (merged == 0)
      stack.pop_back();
    else
      stack.back().exp = merged;
    return;
  }
  stack.push_back(s);
}

}  // namespace detail

/// Normal form of an element of Z * Z/n: an alternating syllable sequence,
/// empty for the identity.
class NormalForm {
 public:
  explicit NormalForm(int index) : index_(validate_index(index)) {}

  NormalForm(int index, std::vector<Syllable> syllables)
      : index_(validate_index(index)) {
    for (const Syllable& s : syllables) detail::push_syllable(syllables_, s, index_);
  }

  int index() const { return index_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t size() const { return syllables_.size(); }
  const std::vector<Syllable>& syllables() const { return syllables_; }

  NormalForm inverse() const {
    NormalForm out(index_);
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
      detail::push_syllable(out.syllables_, {it->factor, -it->exp}, index_);
    return out;
  }

  friend NormalForm operator*(const NormalForm& x, const NormalForm& y) {
    if (x.index_ != y.index_)
      throw std::invalid_argument("normal forms live in groups of different index");
    NormalForm out = x;
    for (const Syllable& s : y.syllables_) detail::push_syllable(out.syllables_, s, x.index_);
    return out;
  }

  /// A word in {a, b} representing the same element: a^k spells itself and
  /// x^m spells (ab)^m.
  Word to_word() const {
    std::vector<Letter> letters;
    for (const Syllable& s : syllables_) {
      if (s.factor == Syllable::Factor::A) {
        const std::int8_t e = s.exp > 0 ? std::int8_t{+1} : std::int8_t{-1};
        for (std::int64_t i = 0; i < (s.exp > 0 ? s.exp : -s.exp); ++i)
          letters.push_back({Gen::a, e});
      } else {
        for (std::int64_t i = 0; i < s.exp; ++i) {
          letters.push_back({Gen::a, +1});
          letters.push_back({Gen::b, +1});
        }
      }
    }
    return free_reduce(letters);
  }

  std::string str() const {
    if (syllables_.empty()) return "1";
    std::string s;
    for (const Syllable& syl : syllables_) {
      if (!s.empty()) s += " ";
      s += (syl.factor == Syllable::Factor::A) ? "a" : "x";
      if (syl.exp != 1) s += "^" + std::to_string(syl.exp);
    }
    return s;
  }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  static int validate_index(int n) {
    if (n < 2) throw std::invalid_argument("index must be at least 2");
    return n;
  }

  friend NormalForm normal_form(const Word&, int);
  int index_;
  std::vector<Syllable> syllables_;
};

/// Rewrites a word over {a, b} into its normal form in Z * Z/n:
/// a -> a, b -> a^-1 x, then merge and cancel. Empty iff the word is
/// trivial in H(0;n).
inline NormalForm normal_form(const Word& w, int index) {
  NormalForm out(index);
  for (const Letter& l : w.letters()) {
    if (l.gen == Gen::a) {
      detail::push_syllable(out.syllables_, Syllable::a(l.exp), index);
    } else if (l.exp > 0) {
      detail::push_syllable(out.syllables_, Syllable::a(-1), index);
      detail::push_syllable(out.syllables_, Syllable::x(1), index);
    } else {
      detail::push_syllable(out.syllables_, Syllable::x(-1), index);
      detail::push_syllable(out.syllables_, Syllable::a(1), index);
    }
  }
  return out;
}

/// A normal form read cyclically: empty, a single syllable, or an
/// alternating sequence whose first and last syllables lie in different
/// factors (hence of even length).
class CyclicNormalForm {
 public:
  CyclicNormalForm(int index, std::vector<Syllable> syllables)
      : index_(index), syllables_(std::move(syllables)) {
    if (syllables_.size() >= 2 &&
        syllables_.front().factor == syllables_.back().factor)
      throw std::invalid_argument("syllable sequence is not cyclically reduced");
  }

  int index() const { return index_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t size() const { return syllables_.size(); }
  const std::vector<Syllable>& syllables() const { return syllables_; }

  std::vector<Syllable> canonical() const {
    return detail::rotated(syllables_, detail::least_rotation_index(syllables_));
  }

  friend bool operator==(const CyclicNormalForm& x, const CyclicNormalForm& y) {
    return x.index_ == y.index_ && x.size() == y.size() && x.canonical() == y.canonical();
  }

 private:
  int index_;
  std::vector<Syllable> syllables_;
};

struct CyclicNormalReduction {
  CyclicNormalForm cyclic;
  NormalForm conjugator;  // conjugator * cyclic * conjugator^-1 = input
};

/// Cyclic reduction in the free product: while the first and last
/// syllables share a factor, conjugate the last one around the front.
/// The result has the minimal syllable count in the conjugacy class.
inline CyclicNormalReduction cyclic_normal_form(const Word& w, int index) {
  NormalForm nf = normal_form(w, index);
  std::vector<Syllable> syl = nf.syllables();
  NormalForm conj(index);
  while (syl.size() >= 2 && syl.front().factor == syl.back().factor) {
    Syllable last = syl.back();
    syl.pop_back();
    // v ~ last * v * last^-1; fold last into the leading syllable.
    conj = conj * NormalForm(index, {Syllable{last.factor, -last.exp}});
    std::vector<Syllable> merged;
    detail::push_syllable(merged, last, index);
    for (const Syllable& s : syl) detail::push_syllable(merged, s, index);
    syl = std::move(merged);
  }
  return CyclicNormalReduction{CyclicNormalForm(index, std::move(syl)), conj};
}

enum class ElementKind : std::uint8_t { trivial, torsion, peripheral, generic };

/// Conjugacy-class label of a word in H(0;n): trivial, torsion of a given
/// order (conjugate of a power of x = ab), peripheral (conjugate of a
/// power of a meridian a or b), or generic.
struct ElementClass {
  ElementKind kind = ElementKind::generic;
  int torsion_order = 0;       // set for torsion
  Gen base = Gen::a;           // set for peripheral
  std::int64_t power = 0;      // set for peripheral

  static ElementClass trivial() { return {ElementKind::trivial, 0, Gen::a, 0}; }
  static ElementClass torsion(int order) { return {ElementKind::torsion, order, Gen::a, 0}; }
  static ElementClass peripheral(Gen base, std::int64_t power) {
    return {ElementKind::peripheral, 0, base, power};
  }
  static ElementClass generic() { return {ElementKind::generic, 0, Gen::a, 0}; }

  friend bool operator==(const ElementClass&, const ElementClass&) = default;
};

inline const char* to_string(ElementKind k) {
  switch (k) {
    case ElementKind::trivial: return "trivial";
    case ElementKind::torsion: return "torsion";
    case ElementKind::peripheral: return "peripheral";
    case ElementKind::generic: return "generic";
  }
  return "?";
}

inline bool is_trivial(const Word& w, int index) {
  return normal_form(w, index).empty();
}

/// Free-product conjugacy: cyclically reduced forms of length >= 2 are
/// conjugate iff one is a cyclic rotation of the other; single syllables
/// iff they agree (both factors are abelian).
inline bool are_conjugate(const Word& u, const Word& v, int index) {
  CyclicNormalForm cu = cyclic_normal_form(u, index).cyclic;
  CyclicNormalForm cv = cyclic_normal_form(v, index).cyclic;
  return cu == cv;
}

inline ElementClass classify(const Word& w, int index) {
  CyclicNormalForm c = cyclic_normal_form(w, index).cyclic;
  const auto& syl = c.syllables();
  if (syl.empty()) return ElementClass::trivial();
  if (syl.size() == 1) {
    const Syllable& s = syl.front();
    if (s.factor == Syllable::Factor::A) return ElementClass::peripheral(Gen::a, s.exp);
    const int order = index / std::gcd<std::int64_t>(index, s.exp);
    return ElementClass::torsion(order);
  }
  // b^t = (a^-1 x)^t and b^-t = (x^-1 a)^t are the only multi-syllable
  // meridian powers: all a-syllables a^-1 with all x-syllables x, or all
  // a-syllables a with all x-syllables x^{n-1}.
  bool all_b_pos = true;
  bool all_b_neg = true;
  for (const Syllable& s : syl) {
    if (s.factor == Syllable::Factor::A) {
      all_b_pos &= (s.exp == -1);
      all_b_neg &= (s.exp == +1);
    } else {
      all_b_pos &= (s.exp == 1);
      all_b_neg &= (s.exp == index - 1);
    }
  }
  const auto t = static_cast<std::int64_t>(syl.size() / 2);
  if (all_b_pos) return ElementClass::peripheral(Gen::b, t);
  if (all_b_neg) return ElementClass::peripheral(Gen::b, -t);
  return ElementClass::generic();
}

}  // namespace heckoid
