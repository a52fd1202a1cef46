#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heckoid {

enum class Gen : std::uint8_t { a = 0, b = 1 };

/// One letter g^e, g in {a,b}, e = +1 or -1.
struct Letter {
  Gen gen;
  std::int8_t exp;

  Letter inverse() const { return Letter{gen, static_cast<std::int8_t>(-exp)}; }

  /// 'a'/'b' for exponent +1, 'A'/'B' for -1.
  char code() const {
    if (gen == Gen::a) return exp > 0 ? 'a' : 'A';
    return exp > 0 ? 'b' : 'B';
  }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Strict grammar /[abAB]*/; anything else (including whitespace) throws.
inline std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'a': out.push_back({Gen::a, +1}); break;
      case 'A': out.push_back({Gen::a, -1}); break;
      case 'b': out.push_back({Gen::b, +1}); break;
      case 'B': out.push_back({Gen::b, -1}); break;
      default:
        throw std::invalid_argument(std::string("invalid word character '") + c + "'");
    }
  }
  return out;
}

/// A freely reduced word over {a, b}. Construction always reduces, so no
/// instance ever contains g^e g^-e.
class Word {
 public:
  Word() = default;

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word inverse() const {
    std::vector<Letter> inv;
    inv.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      inv.push_back(it->inverse());
    Word w;
    w.letters_ = std::move(inv);  // reversal of a reduced word is reduced
    return w;
  }

  friend Word operator*(const Word& x, const Word& y);

  Word pow(long long k) const {
    Word base = k < 0 ? inverse() : *this;
    if (k < 0) k = -k;
    Word out;
    for (long long i = 0; i < k; ++i) out = out * base;
    return out;
  }

  std::string str() const {
    std::string s;
    s.reserve(letters_.size());
    for (const Letter& l : letters_) s.push_back(l.code());
    return s;
  }

  static Word parse(std::string_view text);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  friend Word free_reduce(std::span<const Letter>);
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
inline Word free_reduce(std::span<const Letter> raw) {
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!stack.empty() && stack.back().gen == l.gen && stack.back().exp == -l.exp)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  Word w;
  w.letters_ = std::move(stack);
  return w;
}

inline Word Word::parse(std::string_view text) {
  auto raw = parse_letters(text);
  return free_reduce(raw);
}

inline Word operator*(const Word& x, const Word& y) {
  std::vector<Letter> joined;
  joined.reserve(x.size() + y.size());
  joined.insert(joined.end(), x.letters_.begin(), x.letters_.end());
  joined.insert(joined.end(), y.letters_.begin(), y.letters_.end());
  return free_reduce(joined);
}

namespace detail {

/// Index of the lexicographically least rotation (Booth's two-pointer form).
template <typename Seq>
std::size_t least_rotation_index(const Seq& s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const auto& x = s[(i + k) % n];
    const auto& y = s[(j + k) % n];
    if (x == y) {
      ++k;
      continue;
    }
    if (y < x)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

template <typename T>
std::vector<T> rotated(const std::vector<T>& v, std::size_t start) {
  std::vector<T> out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(v[(start + k) % v.size()]);
  return out;
}

}  // namespace detail

/// A cyclically reduced word up to cyclic permutation. The representative
/// keeps the rotation it was built with (some algorithms scan from it);
/// equality and ordering use the least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;

  explicit CyclicWord(Word representative) : rep_(std::move(representative)) {
    if (!rep_.empty()) {
      const Letter& first = rep_.letters().front();
      const Letter& last = rep_.letters().back();
      if (first.gen == last.gen && first.exp == -last.exp)
        throw std::invalid_argument("word is not cyclically reduced: " + rep_.str());
    }
  }

  std::size_t size() const { return rep_.size(); }
  bool empty() const { return rep_.empty(); }
  const Word& representative() const { return rep_; }

  std::vector<Letter> canonical_letters() const {
    return detail::rotated(rep_.letters(),
                           detail::least_rotation_index(rep_.letters()));
  }

  std::string str() const { return rep_.str(); }

  friend bool operator==(const CyclicWord& x, const CyclicWord& y) {
    return x.size() == y.size() && x.canonical_letters() == y.canonical_letters();
  }

 private:
  Word rep_;
};

struct CyclicReduction {
  CyclicWord cyclic;
  Word conjugator;  // conjugator * cyclic * conjugator^-1 = input
};

/// Peels conjugating letters until the core is cyclically reduced.
inline CyclicReduction cyclic_reduce(const Word& w) {
  std::vector<Letter> core(w.letters().begin(), w.letters().end());
  std::vector<Letter> conj;
  while (core.size() >= 2 && core.front().gen == core.back().gen &&
         core.front().exp == -core.back().exp) {
    conj.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  CyclicReduction out;
  out.conjugator = free_reduce(conj);
  out.cyclic = CyclicWord(free_reduce(core));
  return out;
}

/// Cyclic sequence of run lengths of the exponent signs of a cyclic word,
/// stored as the least cyclic rotation.
class SSequence {
 public:
  explicit SSequence(std::vector<std::int64_t> runs) : runs_(std::move(runs)) {
    if (runs_.empty()) throw std::invalid_argument("empty S-sequence");
    for (std::int64_t r : runs_)
      if (r <= 0) throw std::invalid_argument("S-sequence runs must be positive");
    runs_ = detail::rotated(runs_, detail::least_rotation_index(runs_));
  }

  const std::vector<std::int64_t>& runs() const { return runs_; }
  std::size_t length() const { return runs_.size(); }

  std::int64_t sum() const {
    std::int64_t t = 0;
    for (std::int64_t r : runs_) t += r;
    return t;
  }

  std::int64_t max_run() const { return *std::max_element(runs_.begin(), runs_.end()); }

  std::string str() const {
    std::string s = "((";
    for (std::size_t i = 0; i < runs_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(runs_[i]);
    }
    return s + "))";
  }

  friend bool operator==(const SSequence&, const SSequence&) = default;

 private:
  std::vector<std::int64_t> runs_;
};

/// Maximal constant-sign block lengths of the cyclic word. A single-sign
/// word gives the length-1 sequence ((|v|)); the empty cyclic word is
/// rejected.
inline SSequence s_sequence(const CyclicWord& w) {
  if (w.empty()) throw std::invalid_argument("S-sequence of the empty cyclic word");
  const auto& ls = w.representative().letters();
  const std::size_t n = ls.size();
  // Rotate to a sign boundary so runs never wrap.
  std::size_t start = 0;
  bool constant = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (ls[i].exp != ls[(i + n - 1) % n].exp) {
      start = i;
      constant = false;
      break;
    }
  }
  if (constant) return SSequence({static_cast<std::int64_t>(n)});
  std::vector<std::int64_t> runs;
  std::int64_t run = 0;
  int sign = ls[start].exp;
  for (std::size_t k = 0; k < n; ++k) {
    const Letter& l = ls[(start + k) % n];
    if (l.exp == sign) {
      ++run;
    } else {
      runs.push_back(run);
      run = 1;
      sign = l.exp;
    }
  }
  runs.push_back(run);
  return SSequence(std::move(runs));
}

/// True iff a^{±1} and b^{±1} alternate around the cycle, i.e. no a^{±2}
/// or b^{±2} occurs cyclically. A one-letter word is not alternating.
inline bool is_alternating(const CyclicWord& w) {
  const auto& ls = w.representative().letters();
  const std::size_t n = ls.size();
  for (std::size_t i = 0; i < n; ++i)
    if (ls[i].gen == ls[(i + 1) % n].gen) return false;
  return true;
}

}  // namespace heckoid
