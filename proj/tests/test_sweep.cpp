#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "heckoid/sweep.hpp"

namespace heckoid::sweep {
namespace {

TEST(SlopeEnumeration, CoversTheIntervalInOrder) {
  const auto slopes = slopes_in_interval(4, 5);
  // p = 1: 1; p = 2: 1/2; p = 3: 1/3, 2/3; p = 4: 1/4, 3/4; p = 5: 2/5, ...
  ASSERT_FALSE(slopes.empty());
  EXPECT_EQ(slopes.front(), Slope(1));
  for (const Slope& s : slopes) EXPECT_TRUE(in_fundamental_interval(s, 4));
  for (std::size_t i = 1; i < slopes.size(); ++i) {
    const bool ordered =
        slopes[i - 1].denominator() < slopes[i].denominator() ||
        (slopes[i - 1].denominator() == slopes[i].denominator() &&
         slopes[i - 1].numerator() < slopes[i].numerator());
    EXPECT_TRUE(ordered);
  }
  EXPECT_TRUE(std::find(slopes.begin(), slopes.end(), Slope(1, 4)) != slopes.end());
  EXPECT_TRUE(std::find(slopes.begin(), slopes.end(), Slope(1, 5)) == slopes.end());
}

TEST(RandomWords, ReducedAndSeedStable) {
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_reduced_word(a, 50);
    EXPECT_EQ(w.size(), 50u);
    EXPECT_EQ(w, random_reduced_word(b, 50));
  }
  Rng c(7);
  for (int i = 0; i < 100; ++i) {
    const Word t = random_trivial_word(c, 3);
    EXPECT_TRUE(is_trivial(t, 3));
  }
}

TEST(VerifyMainTheorem, SmallSweepsAreClean) {
  RunConfig cfg;
  cfg.index = 4;
  cfg.max_denominator = 12;
  cfg.pair_max_denominator = 8;
  const SweepReport rep = verify_main_theorem(cfg);
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.pairs.pairs_checked, 0u);
  EXPECT_EQ(rep.pairs.conjugate_pairs, 0u);
  EXPECT_EQ(rep.records.front().slope, "0");
  EXPECT_EQ(rep.records.front().element_class, "torsion");

  cfg.index = 2;
  EXPECT_TRUE(verify_main_theorem(cfg).ok());
  cfg.index = 3;
  cfg.max_denominator = 3;
  EXPECT_TRUE(verify_main_theorem(cfg).ok());

  // degenerate sweep: only s = 1 and s = 0 survive the bounds
  cfg.max_denominator = 1;
  cfg.pair_max_denominator = 1;
  const SweepReport tiny = verify_main_theorem(cfg);
  EXPECT_TRUE(tiny.ok());
  EXPECT_EQ(tiny.records.size(), 2u);
}

TEST(VerifyFundamentalDomain, SmallSweepIsClean) {
  RunConfig cfg;
  cfg.index = 2;
  cfg.max_denominator = 10;
  cfg.samples = 200;
  cfg.seed = 5;
  const SweepReport rep = verify_fundamental_domain(cfg);
  EXPECT_TRUE(rep.ok()) << text_summary(rep);
  EXPECT_GT(rep.checks, 0u);
}

TEST(CrossOracle, SmallSweepIsClean) {
  RunConfig cfg;
  cfg.index = 3;
  cfg.samples = 400;
  cfg.seed = 42;
  const SweepReport rep = cross_oracle(cfg);
  EXPECT_TRUE(rep.ok()) << text_summary(rep);

  cfg.oracle = Oracle::dehn;
  EXPECT_TRUE(cross_oracle(cfg).ok());
}

TEST(Reports, ByteReproducibleForFixedConfigAndSeed) {
  RunConfig cfg;
  cfg.index = 3;
  cfg.max_denominator = 8;
  cfg.samples = 50;
  cfg.seed = 1234;

  const auto dump = [&](const SweepReport& rep) {
    std::ostringstream os;
    write_jsonl(rep, os);
    return os.str();
  };
  EXPECT_EQ(dump(verify_fundamental_domain(cfg)), dump(verify_fundamental_domain(cfg)));
  EXPECT_EQ(dump(verify_main_theorem(cfg)), dump(verify_main_theorem(cfg)));
  EXPECT_EQ(dump(cross_oracle(cfg)), dump(cross_oracle(cfg)));

  const std::string text = text_summary(verify_main_theorem(cfg));
  EXPECT_NE(text.find("result:          OK"), std::string::npos);
}

TEST(Reports, CounterexamplesFlipTheOkBit) {
  SweepReport rep;
  EXPECT_TRUE(rep.ok());
  rep.counterexamples.push_back({"demo", {{"slope", "1/2"}}});
  EXPECT_FALSE(rep.ok());
  const auto summary = summary_json(rep);
  EXPECT_FALSE(summary["ok"].get<bool>());
  EXPECT_EQ(summary["counterexamples"].size(), 1u);
}

TEST(OracleSelection, ParsesAndPrints) {
  EXPECT_EQ(oracle_from_string("exact"), Oracle::exact);
  EXPECT_EQ(oracle_from_string("all"), Oracle::all);
  EXPECT_STREQ(to_string(Oracle::matrix), "matrix");
  EXPECT_THROW(oracle_from_string("fancy"), std::invalid_argument);
  RunConfig bad;
  bad.index = 1;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace heckoid::sweep
