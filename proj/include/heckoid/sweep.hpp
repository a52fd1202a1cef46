#pragma once

#include <chrono>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "heckoid/dehn.hpp"
#include "heckoid/farey.hpp"
#include "heckoid/hecke.hpp"
#include "heckoid/normal_form.hpp"
#include "heckoid/riley.hpp"
#include "heckoid/slope.hpp"
#include "heckoid/version.hpp"
#include "heckoid/word.hpp"

namespace heckoid::sweep {

/// mt19937_64 with modulo sampling; the standard pins the engine but not
/// the distributions, and reports must be byte-stable across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool flip() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

/// Non-backtracking random walk in F(a, b): reduced by construction.
inline Word random_reduced_word(Rng& rng, std::size_t length) {
  static constexpr Letter alphabet[4] = {
      {Gen::a, +1}, {Gen::a, -1}, {Gen::b, +1}, {Gen::b, -1}};
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    Letter next{};
    do {
      next = alphabet[rng.below(4)];
    } while (!letters.empty() && next.gen == letters.back().gen &&
             next.exp == -letters.back().exp);
    letters.push_back(next);
  }
  return free_reduce(letters);
}

/// A product of conjugated relator powers g (ab)^{kn} g^-1: trivial in
/// H(0;n) by construction, nontrivial-looking as a word.
inline Word random_trivial_word(Rng& rng, int index, int max_factors = 3) {
  const Word relator = Word::parse("ab").pow(index);
  Word w;
  const int factors = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_factors)));
  for (int f = 0; f < factors; ++f) {
    const Word g = random_reduced_word(rng, rng.below(9));
    const long long k = rng.flip() ? 1 : -1;
    const long long mult = 1 + static_cast<long long>(rng.below(2));
    w = w * g * relator.pow(k * mult) * g.inverse();
  }
  return w;
}

inline Slope random_slope(Rng& rng, std::int64_t max_entry) {
  return Slope(rng.range(-max_entry, max_entry), rng.range(1, max_entry));
}

/// All q/p in [1/n, 1] with p <= max_denominator, in (p, q) order.
inline std::vector<Slope> slopes_in_interval(int index, std::int64_t max_denominator) {
  std::vector<Slope> out;
  for (std::int64_t p = 1; p <= max_denominator; ++p)
    for (std::int64_t q = (p + index - 1) / index; q <= p; ++q)
      if (std::gcd(q, p) == 1) out.emplace_back(q, p);
  return out;
}

enum class Oracle : std::uint8_t { exact, dehn, matrix, all };

inline const char* to_string(Oracle o) {
  switch (o) {
    case Oracle::exact: return "exact";
    case Oracle::dehn: return "dehn";
    case Oracle::matrix: return "matrix";
    case Oracle::all: return "all";
  }
  return "?";
}

inline Oracle oracle_from_string(const std::string& s) {
  if (s == "exact") return Oracle::exact;
  if (s == "dehn") return Oracle::dehn;
  if (s == "matrix") return Oracle::matrix;
  if (s == "all") return Oracle::all;
  throw std::invalid_argument("unknown oracle selection: " + s);
}

struct RunConfig {
  int index = 2;
  std::int64_t max_denominator = 50;
  std::int64_t pair_max_denominator = 20;
  std::int64_t samples = 10000;
  std::uint64_t seed = 42;
  Oracle oracle = Oracle::all;
  std::string out_path;

  void validate() const {
    if (index < 2) throw std::invalid_argument("index must be at least 2");
    if (max_denominator < 1 || pair_max_denominator < 1 || samples < 0)
      throw std::invalid_argument("bounds must be positive");
  }
};

struct SlopeRecord {
  std::string slope;
  std::size_t word_length = 0;
  std::vector<std::int64_t> cs;
  std::string element_class;
  std::string canonical;
};

struct PairSummary {
  std::uint64_t pairs_checked = 0;
  std::uint64_t conjugate_pairs = 0;
};

struct Counterexample {
  std::string check;
  nlohmann::json data;
};

struct SweepReport {
  std::string kind;
  RunConfig config;
  std::vector<SlopeRecord> records;
  PairSummary pairs;
  std::uint64_t checks = 0;
  std::vector<Counterexample> counterexamples;
  double timing_ms = 0.0;  // never serialized: report bytes depend only on
                           // (version, config, seed)

  bool ok() const { return counterexamples.empty(); }
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline void add_counterexample(SweepReport& rep, std::string check, nlohmann::json data) {
  rep.counterexamples.push_back({std::move(check), std::move(data)});
}

/// Validates a reduction trace: replay reproduces every recorded slope,
/// the landing point is canonical, and each g3 step strictly shrinks the
/// denominator (or exits to ∞), with at most den(start) + 1 pierces.
inline void check_trace(SweepReport& rep, const ReductionTrace& trace, int index) {
  const Slope lower(1, index);
  const Slope one(1);
  const Slope& c = trace.canonical;
  if (!(c.is_infinity() || c == Slope(0) || (lower <= c && c <= one)))
    add_counterexample(rep, "lands_in_fundamental_set",
                       {{"slope", trace.start.str()}, {"canonical", c.str()}});
  Slope cur = trace.start;
  std::size_t pierces = 0;
  for (const ReductionStep& step : trace.steps) {
    const BigInt before = cur.denominator();
    cur = step.map(cur);
    if (cur != step.result) {
      add_counterexample(rep, "trace_replay",
                         {{"slope", trace.start.str()}, {"step", step.map.label()}});
      return;
    }
    if (step.map.label() == "g3") {
      ++pierces;
      if (!cur.is_infinity() && cur.denominator() >= before)
        add_counterexample(rep, "pierce_denominator_decreases",
                           {{"slope", trace.start.str()},
                            {"before", before.str()},
                            {"after", cur.denominator().str()}});
    }
  }
  if (cur != trace.canonical)
    add_counterexample(rep, "trace_replay",
                       {{"slope", trace.start.str()}, {"canonical", c.str()}});
  if (BigInt(static_cast<long long>(pierces)) > trace.start.denominator() + 1)
    add_counterexample(rep, "pierce_count_bound",
                       {{"slope", trace.start.str()},
                        {"pierces", pierces}});
}

}  // namespace detail

/// Sweep for the main classification theorem: every slope word u_s with
/// s in [1/n, 1] ∪ {0} is nontrivial, every u_s with s in [1/n, 1] is
/// generic, and distinct slopes in [1/n, 1] give distinct conjugacy
/// classes in either orientation.
inline SweepReport verify_main_theorem(const RunConfig& cfg) {
  cfg.validate();
  detail::Stopwatch timer;
  SweepReport rep;
  rep.kind = "main";
  rep.config = cfg;
  const int n = cfg.index;

  std::vector<Slope> slopes;
  slopes.emplace_back(0);
  for (Slope& s : slopes_in_interval(n, cfg.max_denominator)) slopes.push_back(std::move(s));

  for (const Slope& s : slopes) {
    const Word u = riley_word(s).word;
    const ElementClass cls = classify(u, n);
    SlopeRecord rec;
    rec.slope = s.str();
    rec.word_length = u.size();
    if (s != Slope(0)) rec.cs = s_sequence_of_slope(s).runs();
    rec.element_class = to_string(cls.kind);
    rec.canonical = reduce_canonical(s, n).str();
    rep.records.push_back(std::move(rec));

    ++rep.checks;
    if (cls.kind == ElementKind::trivial)
      detail::add_counterexample(rep, "nontrivial",
                                 {{"slope", s.str()}, {"word", u.str()}});
    if (s != Slope(0) && cls.kind != ElementKind::generic)
      detail::add_counterexample(rep, "generic",
                                 {{"slope", s.str()}, {"class", to_string(cls.kind)}});
  }

  const std::vector<Slope> pair_slopes = slopes_in_interval(n, cfg.pair_max_denominator);
  std::vector<Word> words;
  std::vector<Word> inverses;
  words.reserve(pair_slopes.size());
  for (const Slope& s : pair_slopes) {
    words.push_back(riley_word(s).word);
    inverses.push_back(words.back().inverse());
  }
  for (std::size_t i = 0; i < pair_slopes.size(); ++i) {
    for (std::size_t j = i + 1; j < pair_slopes.size(); ++j) {
      ++rep.pairs.pairs_checked;
      ++rep.checks;
      if (are_conjugate(words[i], words[j], n) ||
          are_conjugate(words[i], inverses[j], n)) {
        ++rep.pairs.conjugate_pairs;
        detail::add_counterexample(
            rep, "distinct_conjugacy_classes",
            {{"s", pair_slopes[i].str()}, {"s_prime", pair_slopes[j].str()}});
      }
    }
  }

  rep.timing_ms = timer.elapsed_ms();
  return rep;
}

/// Sweep for the fundamental-domain theorem: reduction lands in
/// [1/n, 1] ∪ {∞, 0}, traces replay exactly, canonicals are invariant
/// under random generator words, and the conjugacy consequence holds
/// (trivial at ∞, torsion at 0, conjugate up to inversion otherwise).
inline SweepReport verify_fundamental_domain(const RunConfig& cfg) {
  cfg.validate();
  detail::Stopwatch timer;
  SweepReport rep;
  rep.kind = "domain";
  rep.config = cfg;
  const int n = cfg.index;
  const Generators gens = reflection_generators(n);
  Rng rng(cfg.seed);

  auto orbit_invariant = [&](const Slope& s, const Slope& canonical) {
    Slope moved = s;
    for (int step = 0; step < 20; ++step) {
      switch (rng.below(3)) {
        case 0: moved = gens.g1(moved); break;
        case 1: moved = gens.g2(moved); break;
        default: moved = gens.g3(moved); break;
      }
    }
    ++rep.checks;
    if (reduce_canonical(moved, n) != canonical)
      detail::add_counterexample(rep, "orbit_invariance",
                                 {{"slope", s.str()}, {"moved", moved.str()}});
  };

  // Folding is 2-periodic, so numerators in [-2p, 2p] cover every orbit
  // with denominator p twice over.
  std::vector<Slope> enumerated;
  enumerated.push_back(Slope::infinity());
  for (std::int64_t p = 1; p <= cfg.max_denominator; ++p)
    for (std::int64_t q = -2 * p; q <= 2 * p; ++q)
      if (std::gcd(q < 0 ? -q : q, p) == 1) enumerated.emplace_back(q, p);

  for (const Slope& s : enumerated) {
    const ReductionTrace trace = reduce_slope(s, n);
    ++rep.checks;
    detail::check_trace(rep, trace, n);

    SlopeRecord rec;
    rec.slope = s.str();
    rec.canonical = trace.canonical.str();

    if (!s.is_infinity()) {
      const Word u = riley_word(s).word;
      rec.word_length = u.size();
      if (trace.canonical.is_infinity()) {
        rec.element_class = "trivial";
        ++rep.checks;
        if (!is_trivial(u, n))
          detail::add_counterexample(rep, "consequence_trivial", {{"slope", s.str()}});
      } else if (trace.canonical == Slope(0)) {
        rec.element_class = "torsion";
        ++rep.checks;
        if (classify(u, n).kind != ElementKind::torsion)
          detail::add_counterexample(rep, "consequence_torsion", {{"slope", s.str()}});
      } else {
        const Word uc = riley_word(trace.canonical).word;
        ++rep.checks;
        if (are_conjugate(u, uc, n)) {
          rec.element_class = "conjugate(+)";
        } else if (are_conjugate(u, uc.inverse(), n)) {
          rec.element_class = "conjugate(-)";
        } else {
          rec.element_class = "conjugate(none)";
          detail::add_counterexample(
              rep, "consequence_conjugate",
              {{"slope", s.str()}, {"canonical", trace.canonical.str()}});
        }
      }
    }
    rep.records.push_back(std::move(rec));
    orbit_invariant(s, trace.canonical);
  }

  for (std::int64_t i = 0; i < cfg.samples; ++i) {
    const Slope s = random_slope(rng, 1000000);
    const ReductionTrace trace = reduce_slope(s, n);
    ++rep.checks;
    detail::check_trace(rep, trace, n);
    orbit_invariant(s, trace.canonical);
    SlopeRecord rec;
    rec.slope = s.str();
    rec.canonical = trace.canonical.str();
    rep.records.push_back(std::move(rec));
  }

  rep.timing_ms = timer.elapsed_ms();
  return rep;
}

/// Agreement suite between the independent solvers: the free-product
/// normal form, the Dehn/Newman reducer, and (for identity detection) the
/// matrix representation. Disagreeing words are reported verbatim.
inline SweepReport cross_oracle(const RunConfig& cfg) {
  cfg.validate();
  detail::Stopwatch timer;
  SweepReport rep;
  rep.kind = "cross";
  rep.config = cfg;
  const int n = cfg.index;
  Rng rng(cfg.seed);

  const bool use_dehn = cfg.oracle == Oracle::dehn || cfg.oracle == Oracle::all;
  const bool use_matrix = cfg.oracle == Oracle::matrix || cfg.oracle == Oracle::all;

  auto check_word = [&](const Word& w) {
    const bool exact = is_trivial(w, n);
    if (use_dehn) {
      ++rep.checks;
      if (dehn_reduce(w, n).empty() != exact)
        detail::add_counterexample(rep, "dehn_agrees_with_normal_form",
                                   {{"word", w.str()}});
    }
    if (use_matrix) {
      ++rep.checks;
      const bool id_like =
          classify_matrix(represent(w, n)).kind == TraceKind::identity_like;
      if (id_like != exact)
        detail::add_counterexample(rep, "matrix_agrees_with_normal_form",
                                   {{"word", w.str()}});
    }
    return exact;
  };

  for (std::int64_t i = 0; i < cfg.samples; ++i) {
    switch (i % 4) {
      case 0:
      case 1: {  // plain random words
        check_word(random_reduced_word(rng, 1 + rng.below(200)));
        break;
      }
      case 2: {  // trivial by construction
        const Word w = random_trivial_word(rng, n);
        ++rep.checks;
        if (!check_word(w))
          detail::add_counterexample(rep, "constructed_trivial_word", {{"word", w.str()}});
        break;
      }
      default: {  // relator insertion preserves the element
        const Word base = random_reduced_word(rng, 1 + rng.below(100));
        const Word g = random_reduced_word(rng, rng.below(6));
        const Word insert =
            g * Word::parse("ab").pow(rng.flip() ? n : -n) * g.inverse();
        const std::size_t pos = rng.below(base.size() + 1);
        const auto& ls = base.letters();
        const Word left = free_reduce(std::span<const Letter>(ls.data(), pos));
        const Word right =
            free_reduce(std::span<const Letter>(ls.data() + pos, ls.size() - pos));
        const Word w = left * insert * right;
        ++rep.checks;
        if (is_trivial(w, n) != is_trivial(base, n) || !are_conjugate(w, base, n))
          detail::add_counterexample(rep, "relator_insertion_preserves_element",
                                     {{"word", w.str()}, {"base", base.str()}});
        check_word(w);
        break;
      }
    }
  }

  rep.timing_ms = timer.elapsed_ms();
  return rep;
}

inline nlohmann::json to_json(const SlopeRecord& rec) {
  return {{"slope", rec.slope},
          {"word_length", rec.word_length},
          {"cs", rec.cs},
          {"class", rec.element_class},
          {"canonical", rec.canonical}};
}

inline nlohmann::json summary_json(const SweepReport& rep) {
  nlohmann::json counterexamples = nlohmann::json::array();
  for (const Counterexample& c : rep.counterexamples)
    counterexamples.push_back({{"check", c.check}, {"data", c.data}});
  return {{"kind", rep.kind},
          {"version", kVersion},
          {"config",
           {{"index", rep.config.index},
            {"max_denominator", rep.config.max_denominator},
            {"pair_max_denominator", rep.config.pair_max_denominator},
            {"samples", rep.config.samples},
            {"seed", rep.config.seed},
            {"oracle", to_string(rep.config.oracle)}}},
          {"records", rep.records.size()},
          {"checks", rep.checks},
          {"pairs",
           {{"checked", rep.pairs.pairs_checked},
            {"conjugate", rep.pairs.conjugate_pairs}}},
          {"counterexamples", counterexamples},
          {"ok", rep.ok()}};
}

/// One JSON line per slope record, then one summary object. Byte-stable
/// for a fixed (version, config, seed).
inline void write_jsonl(const SweepReport& rep, std::ostream& os) {
  for (const SlopeRecord& rec : rep.records) os << to_json(rec).dump() << "\n";
  os << summary_json(rep).dump() << "\n";
}

inline std::string text_summary(const SweepReport& rep) {
  std::string s;
  s += "sweep:           " + rep.kind + "\n";
  s += "index:           " + std::to_string(rep.config.index) + "\n";
  s += "records:         " + std::to_string(rep.records.size()) + "\n";
  s += "checks:          " + std::to_string(rep.checks) + "\n";
  if (rep.pairs.pairs_checked > 0)
    s += "pairs checked:   " + std::to_string(rep.pairs.pairs_checked) + "\n";
  s += "counterexamples: " + std::to_string(rep.counterexamples.size()) + "\n";
  s += "result:          " + std::string(rep.ok() ? "OK" : "FAILED") + "\n";
  return s;
}

}  // namespace heckoid::sweep
