#pragma once

#include <array>
#include <set>
#include <stdexcept>
#include <vector>

#include "heckoid/word.hpp"

namespace heckoid {

namespace detail {

/// The four linear spellings of the cyclic relator words ((ab)^n) and
/// ((ab)^-n): every length-L subword of either cyclic word, L <= 2n, is a
/// prefix of exactly one of these (they start with four distinct letters).
inline std::array<std::vector<Letter>, 4> relator_spellings(int n) {
  std::array<std::vector<Letter>, 4> out;
  for (int i = 0; i < n; ++i) {
    out[0].push_back({Gen::a, +1});  // (ab)^n
    out[0].push_back({Gen::b, +1});
    out[1].push_back({Gen::b, +1});  // (ba)^n
    out[1].push_back({Gen::a, +1});
    out[2].push_back({Gen::b, -1});  // (BA)^n = (ab)^-n
    out[2].push_back({Gen::a, -1});
    out[3].push_back({Gen::a, -1});  // (AB)^n
    out[3].push_back({Gen::b, -1});
  }
  return out;
}

}  // namespace detail

/// Dehn's algorithm for <a,b | (ab)^n>. Repeatedly: freely and cyclically
/// reduce; if the cyclic word contains a subword of length >= 2n-1 of some
/// cyclic permutation of (ab)^{±n}, replace it by the inverse of the
/// complementary subword (length <= 1). The scan runs left to right from
/// the stored rotation and takes the first maximal match, so the fixed
/// point is deterministic. By Newman's spelling theorem the fixed point is
/// empty iff the input is trivial in H(0;n).
inline Word dehn_reduce(const Word& w, int index) {
  if (index < 2) throw std::invalid_argument("index must be at least 2");
  const auto relators = detail::relator_spellings(index);
  const std::size_t relator_len = 2 * static_cast<std::size_t>(index);
  const std::size_t threshold = relator_len - 1;

  std::vector<Letter> cur = cyclic_reduce(w).cyclic.representative().letters();
  while (cur.size() >= threshold) {
    const std::size_t len = cur.size();
    std::size_t match_pos = 0;
    std::size_t match_len = 0;
    const std::vector<Letter>* match_rel = nullptr;
    for (std::size_t i = 0; i < len && !match_rel; ++i) {
      for (const auto& rel : relators) {
        if (cur[i] != rel[0]) continue;
        std::size_t l = 1;
        const std::size_t cap = std::min(len, relator_len);
        while (l < cap && cur[(i + l) % len] == rel[l]) ++l;
        if (l >= threshold) {
          match_pos = i;
          match_len = l;
          match_rel = &rel;
        }
        break;  // at most one spelling starts with this letter
      }
    }
    if (!match_rel) break;

    // relator = match * complement, so match = complement^-1 in the group.
    std::vector<Letter> next;
    next.reserve(cur.size());
    for (std::size_t j = relator_len; j-- > match_len;)
      next.push_back((*match_rel)[j].inverse());
    for (std::size_t k = match_len; k < len; ++k)
      next.push_back(cur[(match_pos + k) % len]);
    cur = cyclic_reduce(free_reduce(next)).cyclic.representative().letters();
  }
  return free_reduce(cur);
}

/// All pieces of the symmetrized closure of {relator}: the nonempty common
/// prefixes of distinct elements among the cyclic permutations of the
/// relator and of its inverse. (ab)^n has none.
inline std::set<Word> pieces(const Word& relator) {
  if (relator.empty()) throw std::invalid_argument("empty relator");
  {
    const Letter& first = relator.letters().front();
    const Letter& last = relator.letters().back();
    if (first.gen == last.gen && first.exp == -last.exp)
      throw std::invalid_argument("relator must be cyclically reduced");
  }

  std::set<std::vector<Letter>> symmetrized;
  auto add_rotations = [&](const std::vector<Letter>& base) {
    for (std::size_t r = 0; r < base.size(); ++r)
      symmetrized.insert(detail::rotated(base, r));
  };
  add_rotations(relator.letters());
  add_rotations(relator.inverse().letters());

  std::vector<std::vector<Letter>> words(symmetrized.begin(), symmetrized.end());
  std::set<Word> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      std::size_t l = 0;
      while (l < words[i].size() && l < words[j].size() && words[i][l] == words[j][l]) ++l;
      for (std::size_t t = 1; t <= l; ++t)
        out.insert(free_reduce(std::span<const Letter>(words[i].data(), t)));
    }
  }
  return out;
}

}  // namespace heckoid
