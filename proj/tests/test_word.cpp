#include <gtest/gtest.h>

#include <random>

#include "heckoid/word.hpp"

namespace heckoid {
namespace {

Word random_raw_word(std::mt19937_64& rng, std::size_t len) {
  static constexpr Letter alphabet[4] = {
      {Gen::a, +1}, {Gen::a, -1}, {Gen::b, +1}, {Gen::b, -1}};
  std::vector<Letter> raw;
  for (std::size_t i = 0; i < len; ++i) raw.push_back(alphabet[rng() % 4]);
  return free_reduce(raw);
}

TEST(FreeReduce, CancelsAdjacentInverses) {
  EXPECT_EQ(Word::parse("abB").str(), "a");
  EXPECT_EQ(Word::parse("aA").str(), "");
  EXPECT_EQ(Word::parse("abAB").str(), "abAB");
  EXPECT_EQ(Word::parse("abBA").str(), "");
}

TEST(FreeReduce, IdempotentAndNeverLonger) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t len = rng() % 64;
    std::vector<Letter> raw;
    static constexpr Letter alphabet[4] = {
        {Gen::a, +1}, {Gen::a, -1}, {Gen::b, +1}, {Gen::b, -1}};
    for (std::size_t k = 0; k < len; ++k) raw.push_back(alphabet[rng() % 4]);
    const Word once = free_reduce(raw);
    ASSERT_LE(once.size(), raw.size());
    ASSERT_EQ(free_reduce(once.letters()), once);
  }
}

TEST(WordParse, RejectsAnythingOutsideTheGrammar) {
  EXPECT_THROW(Word::parse("ab c"), std::invalid_argument);
  EXPECT_THROW(Word::parse("x"), std::invalid_argument);
  EXPECT_THROW(Word::parse("a-b"), std::invalid_argument);
  EXPECT_EQ(Word::parse("").size(), 0u);
}

TEST(WordAlgebra, InverseAndProduct) {
  const Word w = Word::parse("abAB");
  EXPECT_EQ(w.inverse().str(), "baBA");
  EXPECT_TRUE((w * w.inverse()).empty());
  EXPECT_EQ(Word::parse("ab").pow(3).str(), "ababab");
  EXPECT_EQ(Word::parse("ab").pow(-2).str(), "BABA");
}

TEST(CyclicReduce, PeelsConjugatingLetters) {
  auto red = cyclic_reduce(Word::parse("Bab"));
  EXPECT_EQ(red.cyclic.representative().str(), "a");
  EXPECT_EQ(red.conjugator.str(), "B");

  red = cyclic_reduce(Word::parse("abAB"));
  EXPECT_EQ(red.cyclic.representative().str(), "abAB");
  EXPECT_TRUE(red.conjugator.empty());

  // "AabaB" reduces freely to "baB", then cyclically to "a".
  red = cyclic_reduce(Word::parse("AabaB"));
  EXPECT_EQ(red.cyclic.representative().str(), "a");
  EXPECT_EQ((red.conjugator * red.cyclic.representative() * red.conjugator.inverse()),
            Word::parse("AabaB"));
}

TEST(CyclicReduce, ConjugationIdentityHoldsOnRandomWords) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 2000; ++i) {
    const Word w = random_raw_word(rng, rng() % 64);
    const auto red = cyclic_reduce(w);
    ASSERT_EQ(red.conjugator * red.cyclic.representative() * red.conjugator.inverse(), w);
    const auto& rep = red.cyclic.representative();
    if (rep.size() >= 2) {
      ASSERT_FALSE(rep.letters().front().gen == rep.letters().back().gen &&
                   rep.letters().front().exp == -rep.letters().back().exp);
    }
  }
}

TEST(CyclicWord, EqualityIsUpToRotation) {
  const CyclicWord u(Word::parse("abAB"));
  const CyclicWord v(Word::parse("BabA"));
  EXPECT_EQ(u, v);
  EXPECT_FALSE(u == CyclicWord(Word::parse("abab")));
  EXPECT_THROW(CyclicWord(Word::parse("baB")), std::invalid_argument);
}

TEST(SSequenceOfWord, HandComputedRuns) {
  EXPECT_EQ(s_sequence(CyclicWord(Word::parse("abaBAB"))), SSequence({3, 3}));
  EXPECT_EQ(s_sequence(CyclicWord(Word::parse("abaBAbabAB"))), SSequence({3, 2, 3, 2}));
  EXPECT_EQ(s_sequence(CyclicWord(Word::parse("ab"))), SSequence({2}));
  EXPECT_THROW(s_sequence(CyclicWord(Word())), std::invalid_argument);
}

TEST(SSequenceOfWord, WrappingRunIsMergedAcrossTheSeam) {
  // Signs + - - + read cyclically: runs 2, 2.
  EXPECT_EQ(s_sequence(CyclicWord(Word::parse("aBAb"))), SSequence({2, 2}));
}

TEST(SSequence, EqualityIsUpToRotationAndValidation) {
  EXPECT_EQ(SSequence({3, 2, 3, 2}), SSequence({2, 3, 2, 3}));
  EXPECT_FALSE(SSequence({3, 3}) == SSequence({3, 2}));
  EXPECT_THROW(SSequence({}), std::invalid_argument);
  EXPECT_THROW(SSequence({2, 0}), std::invalid_argument);
  EXPECT_EQ(SSequence({3, 2, 3, 2}).str(), "((2,3,2,3))");
}

TEST(SSequenceOfWord, InvariantUnderShiftAndSignFlip) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 2000; ++i) {
    const Word w = cyclic_reduce(random_raw_word(rng, 2 + rng() % 40))
                       .cyclic.representative();
    if (w.empty()) continue;
    const CyclicWord cw(w);
    const SSequence cs = s_sequence(cw);
    ASSERT_EQ(cs.sum(), static_cast<std::int64_t>(w.size()));

    const auto shift = detail::rotated(w.letters(), rng() % w.size());
    ASSERT_EQ(s_sequence(CyclicWord(free_reduce(shift))), cs);

    std::vector<Letter> flipped;
    for (const Letter& l : w.letters()) flipped.push_back(l.inverse());
    ASSERT_EQ(s_sequence(CyclicWord(free_reduce(flipped))), cs);
  }
}

TEST(IsAlternating, GeneratorsMustStrictlyAlternate) {
  EXPECT_TRUE(is_alternating(CyclicWord(Word::parse("abAB"))));
  EXPECT_FALSE(is_alternating(CyclicWord(Word::parse("aab"))));
  EXPECT_FALSE(is_alternating(CyclicWord(Word::parse("a"))));
  EXPECT_FALSE(is_alternating(CyclicWord(Word::parse("aba"))));
}

}  // namespace
}  // namespace heckoid
