// Command line front end: slope words, cyclic S-sequences, orbit
// reduction, exact decision procedures, the matrix representation, and
// the verification sweeps.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "heckoid/heckoid.hpp"
#include "heckoid/sweep.hpp"

namespace {

using heckoid::Slope;
using heckoid::Word;
using nlohmann::json;

bool looks_like_word(const std::string& token) {
  for (char c : token)
    if (c != 'a' && c != 'A' && c != 'b' && c != 'B') return false;
  return true;
}

/// Word tokens are /[abAB]*/; anything else must parse as a slope, which
/// is then turned into its slope word.
Word word_or_slope(const std::string& token) {
  if (looks_like_word(token)) return Word::parse(token);
  return heckoid::riley_word(Slope::parse(token)).word;
}

json class_json(const heckoid::ElementClass& cls) {
  json out{{"class", heckoid::to_string(cls.kind)}};
  switch (cls.kind) {
    case heckoid::ElementKind::torsion:
      out["detail"] = {{"order", cls.torsion_order}};
      break;
    case heckoid::ElementKind::peripheral:
      out["detail"] = {{"base", cls.base == heckoid::Gen::a ? "a" : "b"},
                       {"power", cls.power}};
      break;
    default:
      out["detail"] = nullptr;
      break;
  }
  return out;
}

int emit_report(const heckoid::sweep::SweepReport& rep, const std::string& out_path,
                const std::string& format) {
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return 2;
    }
    heckoid::sweep::write_jsonl(rep, file);
  }
  if (format == "json" && out_path.empty())
    heckoid::sweep::write_jsonl(rep, std::cout);
  else
    std::cout << heckoid::sweep::text_summary(rep);
  std::cerr << "elapsed: " << rep.timing_ms << " ms\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"even Heckoid groups of the trivial knot: slope words, orbit "
               "reduction, exact decision procedures, theorem sweeps"};
  app.require_subcommand(1);

  std::string token;
  std::string token2;
  std::string verify_kind;
  std::string out_path;
  std::string format = "text";
  std::string oracle = "all";
  int index = 2;
  bool with_trace = false;
  heckoid::sweep::RunConfig cfg;

  auto* cmd_word = app.add_subcommand("word", "slope word u_s of a rational slope");
  cmd_word->add_option("slope", token, "slope, e.g. 2/5")->required();

  auto* cmd_cs = app.add_subcommand("cs", "cyclic S-sequence of a slope as a JSON array");
  cmd_cs->add_option("slope", token, "slope in (0, 1]")->required();

  auto* cmd_reduce = app.add_subcommand("reduce", "canonical Farey-orbit representative");
  cmd_reduce->add_option("slope", token, "any extended rational slope")->required();
  cmd_reduce->add_option("--index", index, "orbifold index n >= 2")->required();
  cmd_reduce->add_flag("--trace", with_trace, "include the generator steps");

  auto* cmd_decide = app.add_subcommand("decide", "classify a word or slope in H(0;n)");
  cmd_decide->add_option("word", token, "word over [abAB] or a slope")->required();
  cmd_decide->add_option("--index", index, "orbifold index n >= 2")->required();

  auto* cmd_conj = app.add_subcommand("conjugate", "conjugacy of two words/slopes in H(0;n)");
  cmd_conj->add_option("first", token, "word or slope")->required();
  cmd_conj->add_option("second", token2, "word or slope")->required();
  cmd_conj->add_option("--index", index, "orbifold index n >= 2")->required();

  auto* cmd_rep = app.add_subcommand("rep", "Hecke matrix image and trace class");
  cmd_rep->add_option("word", token, "word over [abAB] or a slope")->required();
  cmd_rep->add_option("--index", index, "orbifold index n >= 2")->required();

  auto* cmd_verify = app.add_subcommand("verify", "run a verification sweep");
  cmd_verify->add_option("which", verify_kind, "main | domain | cross")
      ->required()
      ->check(CLI::IsMember({"main", "domain", "cross"}));
  cmd_verify->add_option("--index", index, "orbifold index n >= 2")->required();
  cmd_verify->add_option("--max-denominator", cfg.max_denominator, "unary sweep bound");
  cmd_verify->add_option("--pair-max-denominator", cfg.pair_max_denominator,
                         "pairwise sweep bound");
  cmd_verify->add_option("--samples", cfg.samples, "random sample count");
  cmd_verify->add_option("--seed", cfg.seed, "random seed");
  cmd_verify->add_option("--out", out_path, "write the JSONL report here");
  cmd_verify->add_option("--format", format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd_verify->add_option("--oracle", oracle, "exact | dehn | matrix | all")
      ->check(CLI::IsMember({"exact", "dehn", "matrix", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*cmd_word) {
      std::cout << heckoid::riley_word(Slope::parse(token)).word.str() << "\n";
      return 0;
    }
    if (*cmd_cs) {
      json runs = heckoid::s_sequence_of_slope(Slope::parse(token)).runs();
      std::cout << runs.dump() << "\n";
      return 0;
    }
    if (*cmd_reduce) {
      const Slope start = Slope::parse(token);
      json out;
      if (with_trace) {
        const auto trace = heckoid::reduce_slope(start, index);
        json steps = json::array();
        for (const auto& step : trace.steps)
          steps.push_back({{"gen", step.map.label()}, {"slope", step.result.str()}});
        out = {{"canonical", trace.canonical.str()}, {"steps", steps}};
      } else {
        out = {{"canonical", heckoid::reduce_canonical(start, index).str()}};
      }
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*cmd_decide) {
      std::cout << class_json(heckoid::classify(word_or_slope(token), index)).dump()
                << "\n";
      return 0;
    }
    if (*cmd_conj) {
      const Word u = word_or_slope(token);
      const Word v = word_or_slope(token2);
      const bool oriented = heckoid::are_conjugate(u, v, index);
      const bool inverted = oriented || heckoid::are_conjugate(u, v.inverse(), index);
      json out{{"conjugate", oriented}, {"up_to_inversion", inverted}};
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*cmd_rep) {
      const heckoid::Mat2 m = heckoid::represent(word_or_slope(token), index);
      const heckoid::TraceClass tc = heckoid::classify_matrix(m);
      json out{{"trace", tc.trace},
               {"class", heckoid::to_string(tc.kind)},
               {"matrix", {{m.a, m.b}, {m.c, m.d}}}};
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*cmd_verify) {
      cfg.index = index;
      cfg.oracle = heckoid::sweep::oracle_from_string(oracle);
      cfg.out_path = out_path;
      heckoid::sweep::SweepReport rep;
      if (verify_kind == "main")
        rep = heckoid::sweep::verify_main_theorem(cfg);
      else if (verify_kind == "domain")
        rep = heckoid::sweep::verify_fundamental_domain(cfg);
      else
        rep = heckoid::sweep::cross_oracle(cfg);
      return emit_report(rep, out_path, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
