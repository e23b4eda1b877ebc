#ifndef CATKIT_CLI_HPP
#define CATKIT_CLI_HPP

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "catkit/json_io.hpp"

// Deterministic command-line front end.  Exit codes: 0 success, 1 usage
// error, 2 validation or domain failure (with a machine-readable JSON
// payload on stdout / --out).
namespace catkit::cli {

namespace fs = std::filesystem;
using nlohmann::json;

inline std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(errc::usage_error, "cannot open '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json load_json(const fs::path& p) {
  std::string text = read_file(p);
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(errc::malformed_input, "'" + p.string() + "' is not valid JSON");
  return j;
}

struct Common {
  std::string in;
  std::string out;
  std::string format = "json";
  int bound = -1;
  int budget = -1;
  unsigned seed = 0;  // reserved for randomized property verbs

  Budget make_budget() const { return budget > 0 ? Budget::scaled(budget) : Budget::from_env(); }

  void emit(std::ostream& stream, const std::string& payload) const {
    if (out.empty()) {
      stream << payload;
      return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error(errc::usage_error, "cannot write '" + out + "'");
    f << payload;
  }
};

inline void add_common(CLI::App* cmd, Common& c, bool needs_in = true) {
  if (needs_in) cmd->add_option("--in", c.in, "input file")->required();
  cmd->add_option("--out", c.out, "write the artifact here instead of stdout");
  cmd->add_option("--format", c.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  cmd->add_option("--bound", c.bound, "word-length bound override");
  cmd->add_option("--budget", c.budget, "size budget override");
  cmd->add_option("--seed", c.seed, "seed for randomized property verbs");
}

// Words on the command line: with a comma, tokens like "a,b,a^-1"; without,
// one letter per character where a trailing apostrophe inverts ("aba'b'").
inline std::vector<present::Letter> parse_word_spec(const std::string& s) {
  std::vector<present::Letter> letters;
  if (s.empty()) return letters;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw Error(errc::usage_error, "empty token in word '" + s + "'");
      int dir = 1;
      if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
        dir = -1;
        tok = tok.substr(0, tok.size() - 3);
      } else if (tok.size() > 1 && tok.back() == '\'') {
        dir = -1;
        tok.pop_back();
      }
      letters.push_back({tok, dir});
    }
    return letters;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\'') {
      if (letters.empty()) throw Error(errc::usage_error, "word cannot start with an inverse marker");
      letters.back().dir = -letters.back().dir;
      continue;
    }
    letters.push_back({std::string(1, s[i]), 1});
  }
  return letters;
}

inline present::Word make_word(const fincat::FinGraph& g, const std::vector<present::Letter>& letters,
                               const std::string& at) {
  present::Word w;
  w.letters = letters;
  if (!letters.empty()) {
    const fincat::Edge* e = g.find_edge(letters.front().edge);
    if (!e) throw Error(errc::malformed_input, "unknown edge '" + letters.front().edge + "'");
    w.start = letters.front().dir == 1 ? e->src : e->tgt;
  } else if (!at.empty()) {
    w.start = at;
  } else {
    throw Error(errc::usage_error, "an empty word needs --at <node>");
  }
  return w;
}

// ------------------------------------------------------------ corpus runner

struct CorpusCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CorpusReport {
  std::vector<CorpusCase> cases;
  bool all_passed() const {
    for (const auto& c : cases)
      if (!c.passed) return false;
    return true;
  }
};

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

inline CorpusReport run_corpus(const fs::path& dir, const fs::path& outdir, std::ostream& log) {
  fs::path cases_dir = dir / "cases";
  if (!fs::is_directory(cases_dir)) throw Error(errc::usage_error, "no cases/ directory under '" + dir.string() + "'");
  std::vector<fs::path> case_files;
  for (const auto& entry : fs::directory_iterator(cases_dir))
    if (entry.path().extension() == ".json") case_files.push_back(entry.path());
  std::sort(case_files.begin(), case_files.end());
  if (case_files.empty()) throw Error(errc::usage_error, "corpus has no cases");

  if (!outdir.empty()) fs::create_directories(outdir);

  CorpusReport report;
  for (const auto& file : case_files) {
    CorpusCase result;
    result.name = file.stem().string();
    try {
      json manifest = load_json(file);
      io::expect_schema(manifest, "manifest/v1");
      result.name = io::str_field(manifest, "name");
      int expect_exit = 0;
      if (manifest.contains("expect_exit")) expect_exit = manifest["expect_exit"].get<int>();

      std::vector<std::string> argv;
      for (const auto& a : io::field(manifest, "argv")) {
        std::string s = a.get<std::string>();
        if (fs::exists(dir / s)) s = (dir / s).string();
        argv.push_back(s);
      }

      std::ostringstream captured, captured_err;
      int code = run(argv, captured, captured_err);

      if (!outdir.empty()) {
        std::ofstream f(outdir / (result.name + ".out"), std::ios::binary);
        f << captured.str();
      }

      if (code != expect_exit) {
        result.detail = "exit " + std::to_string(code) + ", expected " + std::to_string(expect_exit);
      } else {
        std::string golden = read_file(dir / io::str_field(manifest, "golden"));
        if (captured.str() != golden)
          result.detail = "output differs from golden";
        else
          result.passed = true;
      }
    } catch (const Error& e) {
      result.detail = e.what();
    } catch (const std::exception& e) {
      result.detail = e.what();
    }
    log << (result.passed ? "PASS " : "FAIL ") << result.name;
    if (!result.detail.empty()) log << " (" << result.detail << ")";
    log << "\n";
    report.cases.push_back(std::move(result));
  }
  std::size_t passed = 0;
  for (const auto& c : report.cases) passed += c.passed;
  log << passed << "/" << report.cases.size() << " corpus cases passed\n";
  return report;
}

// ----------------------------------------------------------------- verbs

namespace detail {

inline json json_in(const Common& c) { return load_json(c.in); }

inline int emit_report(const Common& c, std::ostream& out, const fincat::ValidationReport& rep) {
  c.emit(out, io::dump(io::to_json(rep)));
  return rep.ok() ? 0 : 2;
}

inline fincat::CatPtr load_category(const Common& c) {
  fincat::FinCat cat = io::cat_from_json(json_in(c));
  fincat::ValidationReport rep = fincat::validate_category(cat);
  if (!rep.ok())
    throw Error(errc::invalid_input,
                "input is not a category: " + rep.violations.front().kind + " " + rep.violations.front().detail);
  return fincat::make_cat(std::move(cat));
}

inline topo::CWComplex2 load_complex(const Common& c) {
  json j = json_in(c);
  std::string schema = io::str_field(j, "schema");
  if (schema == "cw/v1") return io::complex_from_json(j);
  if (schema == "computad/v1") return topo::realize2(io::computad_from_json(j));
  throw Error(errc::malformed_input, "expected computad/v1 or cw/v1, got '" + schema + "'");
}

inline json descent_category_json(const descent::DescentCategory& dc) {
  json pairs = json::array();
  for (const auto& p : dc.pairs) pairs.push_back({{"object", p.object}, {"xi", p.xi}});
  return {{"category", io::to_json(*dc.cat)}, {"pairs", pairs}};
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite category theory workbench"};
  app.require_subcommand(1);

  Common c;
  std::string lhs_spec, rhs_spec, at_node;
  std::string corpus_dir, corpus_out;
  int exit_code = 0;
  std::function<void()> action;

  auto* fincat_cmd = app.add_subcommand("fincat", "finite categories");
  fincat_cmd->require_subcommand(1);
  {
    auto* validate = fincat_cmd->add_subcommand("validate", "check the category axioms");
    add_common(validate, c);
    validate->callback([&] {
      fincat::FinCat cat = io::cat_from_json(detail::json_in(c));
      exit_code = detail::emit_report(c, out, fincat::validate_category(cat));
    });
    auto* dot = fincat_cmd->add_subcommand("dot", "emit the underlying graph as DOT");
    add_common(dot, c);
    dot->callback([&] {
      fincat::FinCat cat = io::cat_from_json(detail::json_in(c));
      c.emit(out, io::to_dot(cat));
    });
  }

  auto* present_cmd = app.add_subcommand("present", "presentations and the word problem");
  present_cmd->require_subcommand(1);
  {
    auto* weq = present_cmd->add_subcommand("word-eq", "decide word equality up to the bound");
    add_common(weq, c);
    weq->add_option("--lhs", lhs_spec, "left word")->required();
    weq->add_option("--rhs", rhs_spec, "right word")->required();
    weq->add_option("--at", at_node, "start node for empty words");
    weq->callback([&] {
      present::Presentation p = io::presentation_from_json(detail::json_in(c));
      present::Word w1 = make_word(p.computad.graph, parse_word_spec(lhs_spec), at_node);
      present::Word w2 = make_word(p.computad.graph, parse_word_spec(rhs_spec), at_node);
      std::optional<int> bound;
      if (c.bound >= 0) bound = c.bound;
      present::WordVerdict v = present::word_eq(p, w1, w2, bound);
      c.emit(out, io::dump(json{{"verdict", present::to_string(v)}}));
    });

    auto* def = present_cmd->add_subcommand("deficiency", "rank of the free groupoid minus relations");
    add_common(def, c);
    def->callback([&] {
      present::Presentation p = io::presentation_from_json(detail::json_in(c));
      c.emit(out, io::dump(json{{"deficiency", present::deficiency(p)}}));
    });

    auto* ab = present_cmd->add_subcommand("abelianize", "per-component invariant factors");
    add_common(ab, c);
    ab->callback([&] {
      present::Presentation p = io::presentation_from_json(detail::json_in(c));
      c.emit(out, io::dump(json{{"components", io::to_json(present::abelianization(p))}}));
    });
  }

  auto* descent_cmd = app.add_subcommand("descent", "descent categories and monads");
  descent_cmd->require_subcommand(1);
  {
    auto* colax = descent_cmd->add_subcommand("colax", "colax descent category of a diagram");
    add_common(colax, c);
    colax->callback([&] {
      descent::DescentInput d = io::descent_input_from_json(detail::json_in(c));
      c.emit(out, io::dump(detail::descent_category_json(descent::colax_descent_category(d))));
    });

    auto* strict = descent_cmd->add_subcommand("strict", "descent category (invertible pairs)");
    add_common(strict, c);
    strict->callback([&] {
      descent::DescentInput d = io::descent_input_from_json(detail::json_in(c));
      c.emit(out, io::dump(detail::descent_category_json(descent::descent_category(d))));
    });

    auto* em = descent_cmd->add_subcommand("em-check", "compare Eilenberg-Moore with colax descent");
    add_common(em, c);
    em->callback([&] {
      descent::FinMonad m = io::monad_from_json(detail::json_in(c));
      fincat::Isomorphism iso = descent::em_equivalence_check(m, c.make_budget());
      json payload = {{"em_category", io::to_json(*iso.fwd.dom)},
                      {"descent_category", io::to_json(*iso.fwd.cod)},
                      {"isomorphism", {{"fwd", io::to_json_maps(iso.fwd)}, {"bwd", io::to_json_maps(iso.bwd)}}}};
      c.emit(out, io::dump(payload));
    });

    auto* homs = descent_cmd->add_subcommand("monad-homs", "category of colax monad morphisms");
    add_common(homs, c);
    homs->callback([&] {
      json j = detail::json_in(c);
      io::expect_schema(j, "monadpair/v1");
      descent::FinMonad y = io::monad_from_json_body(io::field(j, "y"));
      descent::FinMonad z = io::monad_from_json_body(io::field(j, "z"));
      descent::MonadMorphismCategory mm = descent::monad_morphism_category(y, z, c.make_budget());
      json objects = json::array();
      for (const auto& o : mm.objects)
        objects.push_back({{"functor", io::to_json_maps(o.f)}, {"phi", io::to_json_components(o.phi)}});
      c.emit(out, io::dump(json{{"category", io::to_json(*mm.cat)}, {"objects", objects}}));
    });
  }

  auto* mates_cmd = app.add_subcommand("mates", "adjunctions and mates");
  mates_cmd->require_subcommand(1);
  {
    auto* check = mates_cmd->add_subcommand("check", "triangle identities");
    add_common(check, c);
    check->callback([&] {
      mates::AdjunctionData a = io::adjunction_from_json(detail::json_in(c));
      exit_code = detail::emit_report(c, out, mates::check_adjunction(a));
    });

    auto* mate_verb = mates_cmd->add_subcommand("mate", "mate of a square");
    add_common(mate_verb, c);
    mate_verb->callback([&] {
      mates::MateSquare sq = io::mate_square_from_json(detail::json_in(c));
      fincat::NatTrans m = mates::mate(sq);
      c.emit(out, io::dump(json{{"mate", io::to_json_components(m)}}));
    });

    auto* bc = mates_cmd->add_subcommand("bc", "Beck-Chevalley condition");
    add_common(bc, c);
    bc->callback([&] {
      mates::MateSquare sq = io::mate_square_from_json(detail::json_in(c));
      mates::BeckChevalley r = mates::beck_chevalley(sq);
      json payload = r.satisfied
                         ? json{{"status", "Satisfied"}}
                         : json{{"status", "Violated"},
                                {"witness", {{"object", r.witness_object}, {"component", r.witness_component}}}};
      c.emit(out, io::dump(payload));
    });
  }

  auto* bicat_cmd = app.add_subcommand("bicat", "spans and matrices");
  bicat_cmd->require_subcommand(1);
  {
    auto* sc = bicat_cmd->add_subcommand("span-compose", "compose two spans by pullback");
    add_common(sc, c);
    sc->callback([&] {
      json j = detail::json_in(c);
      io::expect_schema(j, "spanpair/v1");
      bicat::FinSpan m = io::span_from_json_body(io::field(j, "m"));
      bicat::FinSpan n = io::span_from_json_body(io::field(j, "n"));
      c.emit(out, io::dump(io::to_json(bicat::span_compose(n, m))));
    });

    auto* mc = bicat_cmd->add_subcommand("mat-compose", "compose two matrices");
    add_common(mc, c);
    mc->callback([&] {
      json j = detail::json_in(c);
      io::expect_schema(j, "matpair/v1");
      bicat::FinMatrix m = io::matrix_from_json_body(io::field(j, "m"));
      bicat::FinMatrix n = io::matrix_from_json_body(io::field(j, "n"));
      c.emit(out, io::dump(io::to_json(bicat::mat_compose(n, m))));
    });

    auto* rt = bicat_cmd->add_subcommand("roundtrip", "category -> monad -> category, both bicategories");
    add_common(rt, c);
    rt->callback([&] {
      fincat::CatPtr cat = detail::load_category(c);
      fincat::FinCat via_span = bicat::span_monad_to_cat(bicat::cat_to_span_monad(*cat));
      fincat::FinCat via_mat = bicat::mat_monad_to_cat(bicat::cat_to_mat_monad(*cat));
      bool span_ok = via_span == *cat && fincat::validate_category(via_span).ok();
      bool mat_ok = via_mat == *cat && fincat::validate_category(via_mat).ok();
      c.emit(out, io::dump(json{{"span_ok", span_ok}, {"mat_ok", mat_ok}}));
      exit_code = span_ok && mat_ok ? 0 : 2;
    });
  }

  auto* topo_cmd = app.add_subcommand("topo", "realization and homology");
  topo_cmd->require_subcommand(1);
  {
    auto* realize = topo_cmd->add_subcommand("realize", "computad to CW-complex");
    add_common(realize, c);
    realize->callback([&] {
      topo::CWComplex2 x = topo::realize2(io::computad_from_json(detail::json_in(c)));
      if (c.format == "dot")
        c.emit(out, io::to_dot(x));
      else
        c.emit(out, io::dump(io::to_json(x)));
    });

    auto* chi = topo_cmd->add_subcommand("chi", "Euler characteristic per component");
    add_common(chi, c);
    chi->callback([&] {
      topo::EulerResult chi_result = topo::euler_characteristic(detail::load_complex(c));
      json per = json::array();
      for (const auto& [comp, v] : chi_result.per_component) per.push_back({{"component", comp}, {"chi", v}});
      c.emit(out, io::dump(json{{"convention", "thinness obstruction reads chi < 1 per component"},
                                {"per_component", per},
                                {"total", chi_result.total}}));
    });

    auto* hom = topo_cmd->add_subcommand("homology", "H0 rank and H1 invariant factors");
    add_common(hom, c);
    hom->callback([&] {
      topo::HomologyResult h = topo::homology(detail::load_complex(c));
      json per = json::array();
      for (const auto& g : h.h1_by_component)
        per.push_back({{"component", g.component}, {"rank", g.rank}, {"torsion", g.torsion}});
      c.emit(out, io::dump(json{{"h0_rank", h.h0_rank},
                                {"h1", {{"rank", h.h1_total.rank}, {"torsion", h.h1_total.torsion}}},
                                {"h1_by_component", per}}));
    });

    auto* pi1 = topo_cmd->add_subcommand("pi1", "fundamental groupoid presentation");
    add_common(pi1, c);
    pi1->callback([&] {
      present::Presentation p = topo::fundamental_groupoid_presentation(detail::load_complex(c));
      c.emit(out, io::dump(io::to_json(p)));
    });
  }

  auto* corpus_cmd = app.add_subcommand("corpus", "golden corpus runner");
  corpus_cmd->require_subcommand(1);
  {
    auto* run_all = corpus_cmd->add_subcommand("run-all", "run every corpus case");
    run_all->add_option("--dir", corpus_dir, "corpus directory")->required();
    run_all->add_option("--out", corpus_out, "write the output tree here");
    run_all->add_option("--seed", c.seed, "seed for randomized property verbs");
    run_all->callback([&] {
      CorpusReport report = run_corpus(corpus_dir, corpus_out, out);
      exit_code = report.all_passed() ? 0 : 2;
    });
  }

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    if (e.code() == errc::usage_error) {
      err << e.what() << "\n";
      return 1;
    }
    json payload = {{"error", {{"code", e.code_name()}, {"message", e.what()}}}};
    try {
      c.emit(out, io::dump(payload));
    } catch (const Error&) {
      out << io::dump(payload);
    }
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace catkit::cli

#endif
