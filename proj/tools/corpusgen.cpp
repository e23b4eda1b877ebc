// Maintenance tool for the bundled corpus.
//
//   corpusgen inputs <dir>    write the input files and case manifests
//   corpusgen goldens <dir>   re-run every case and refresh its golden file
//
// Golden refresh is deliberate: run it only when an output format change is
// intended, and review the diff.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "catkit/cli.hpp"
#include "catkit/zoo.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace catkit;

namespace {

void write_file(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error(errc::usage_error, "cannot write '" + p.string() + "'");
  f << text;
}

void write_json(const fs::path& p, const json& j) { write_file(p, io::dump(j)); }

json manifest(const std::string& name, const std::vector<std::string>& argv, const std::string& golden,
              int expect_exit = 0) {
  return {{"schema", "manifest/v1"}, {"name", name}, {"argv", argv}, {"golden", golden}, {"expect_exit", expect_exit}};
}

void write_inputs(const fs::path& dir) {
  using namespace catkit::zoo;

  // --- categories
  write_json(dir / "inputs/chain3.json", io::to_json(*chain(3)));
  {
    fincat::FinCat broken = *chain(3);
    broken.table[{pm("1", "2"), pm("0", "1")}] = pm("0", "0");
    write_json(dir / "inputs/chain3_broken.json", io::to_json(broken));
  }

  // --- computads
  {
    present::Computad2 commuting;
    commuting.graph = two_loops_graph();
    commuting.groupoidal = false;
    commuting.relations = {{"r",
                            present::Word{"n", {{"a", 1}, {"b", 1}}},
                            present::Word{"n", {{"b", 1}, {"a", 1}}}}};
    write_json(dir / "inputs/commuting_loops.json", io::to_json(commuting));
  }
  write_json(dir / "inputs/free_loop_monoid.json", io::to_json(free_loop_computad(false)));
  write_json(dir / "inputs/torus.json", io::to_json(torus_computad()));
  write_json(dir / "inputs/circle.json", io::to_json(free_loop_computad(true)));
  write_json(dir / "inputs/disk.json", io::to_json(disk_computad()));

  // --- spans and matrices
  {
    bicat::FinSpan m{{"a"}, {"x", "y"}, {"b0", "b1"}, {{"x", "a"}, {"y", "a"}}, {{"x", "b0"}, {"y", "b0"}}};
    bicat::FinSpan n{{"b0", "b1"}, {"u", "v"}, {"c"}, {{"u", "b0"}, {"v", "b1"}}, {{"u", "c"}, {"v", "c"}}};
    json m_body = io::to_json(m);
    json n_body = io::to_json(n);
    m_body.erase("schema");
    n_body.erase("schema");
    write_json(dir / "inputs/spanpair.json", json{{"schema", "spanpair/v1"}, {"m", m_body}, {"n", n_body}});
  }
  {
    bicat::FinMatrix m{{"s"}, {"t"}, {{{"s", "t"}, {"p", "q"}}}};
    bicat::FinMatrix n{{"t"}, {"u"}, {{{"t", "u"}, {"x", "y", "z"}}}};
    json m_body = io::to_json(m);
    json n_body = io::to_json(n);
    m_body.erase("schema");
    n_body.erase("schema");
    write_json(dir / "inputs/matpair.json", json{{"schema", "matpair/v1"}, {"m", m_body}, {"n", n_body}});
  }

  // --- adjunctions and squares
  mates::AdjunctionData roundup = subposet_closure_adjunction(chain(3), {"0", "2"});
  write_json(dir / "inputs/roundup.json", io::to_json(roundup));
  {
    fincat::CatPtr c2 = chain(2);
    mates::AdjunctionData ida = mates::identity_adjunction(c2);
    fincat::Functor idf = fincat::identity_functor(c2);
    mates::MateSquare sq{ida, ida, idf, idf, fincat::identity_nat(idf)};
    write_json(dir / "inputs/matesquare_identity.json", io::to_json(sq));
  }
  {
    fincat::CatPtr w = chain(2);
    mates::AdjunctionData lu = subposet_closure_adjunction(w, {"1"});
    mates::AdjunctionData fg = mates::identity_adjunction(w);
    fincat::Functor m = poset_functor(lu.cod(), w, {{"1", "1"}});
    fincat::Functor n = fincat::identity_functor(w);
    fincat::NatTrans alpha =
        poset_nat(fincat::compose_functors(n, lu.right), fincat::compose_functors(fg.right, m));
    write_json(dir / "inputs/matesquare_violated.json", io::to_json(mates::MateSquare{lu, fg, m, n, alpha}));
  }

  // --- descent data and monads
  write_json(dir / "inputs/descent_constant.json", io::to_json(descent::em_diagram(descent::identity_monad(terminal()))));
  write_json(dir / "inputs/closure_monad.json", io::to_json(descent::monad_from_adjunction(roundup)));
  write_json(dir / "inputs/identity_monad_parallel.json", io::to_json(descent::identity_monad(parallel_pair())));
  {
    json body = io::to_json(descent::identity_monad(terminal()));
    body.erase("schema");
    write_json(dir / "inputs/monadpair_point.json", json{{"schema", "monadpair/v1"}, {"y", body}, {"z", body}});
  }
  {
    json y = io::to_json(descent::monad_from_adjunction(roundup));
    y.erase("schema");
    write_json(dir / "inputs/monadpair_closure.json", json{{"schema", "monadpair/v1"}, {"y", y}, {"z", y}});
  }
  {
    // both adjunctions f -| g, m = n = id: the mate of id is id by the
    // triangle identity
    fincat::Functor m = fincat::identity_functor(roundup.cod());
    fincat::Functor n = fincat::identity_functor(roundup.dom());
    fincat::NatTrans alpha{fincat::compose_functors(n, roundup.right),
                           fincat::compose_functors(roundup.right, m),
                           {}};
    for (const auto& x : roundup.cod()->objects) alpha.at[x] = roundup.dom()->id_of(roundup.right.ob(x));
    write_json(dir / "inputs/matesquare_roundup.json", io::to_json(mates::MateSquare{roundup, roundup, m, n, alpha}));
  }

  // --- case manifests
  struct Case {
    std::string name;
    std::vector<std::string> argv;
    std::string ext = "json";
    int expect_exit = 0;
  };
  std::vector<Case> cases = {
      {"bicat_mat_compose", {"bicat", "mat-compose", "--in", "inputs/matpair.json"}},
      {"bicat_roundtrip_chain3", {"bicat", "roundtrip", "--in", "inputs/chain3.json"}},
      {"bicat_span_compose", {"bicat", "span-compose", "--in", "inputs/spanpair.json"}},
      {"descent_colax_constant", {"descent", "colax", "--in", "inputs/descent_constant.json"}},
      {"descent_em_check_closure", {"descent", "em-check", "--in", "inputs/closure_monad.json"}},
      {"descent_em_check_parallel", {"descent", "em-check", "--in", "inputs/identity_monad_parallel.json"}},
      {"descent_monad_homs_closure", {"descent", "monad-homs", "--in", "inputs/monadpair_closure.json"}},
      {"descent_monad_homs_point", {"descent", "monad-homs", "--in", "inputs/monadpair_point.json"}},
      {"descent_strict_constant", {"descent", "strict", "--in", "inputs/descent_constant.json"}},
      {"fincat_dot_chain3", {"fincat", "dot", "--in", "inputs/chain3.json"}, "dot"},
      {"fincat_validate_broken", {"fincat", "validate", "--in", "inputs/chain3_broken.json"}, "json", 2},
      {"fincat_validate_chain3", {"fincat", "validate", "--in", "inputs/chain3.json"}},
      {"mates_bc_identity", {"mates", "bc", "--in", "inputs/matesquare_identity.json"}},
      {"mates_bc_violated", {"mates", "bc", "--in", "inputs/matesquare_violated.json"}},
      {"mates_check_roundup", {"mates", "check", "--in", "inputs/roundup.json"}},
      {"mates_mate_identity", {"mates", "mate", "--in", "inputs/matesquare_identity.json"}},
      {"mates_mate_roundup", {"mates", "mate", "--in", "inputs/matesquare_roundup.json"}},
      {"present_abelianize_torus", {"present", "abelianize", "--in", "inputs/torus.json"}},
      {"present_deficiency_disk", {"present", "deficiency", "--in", "inputs/disk.json"}},
      {"present_deficiency_torus", {"present", "deficiency", "--in", "inputs/torus.json"}},
      {"present_word_eq_commuting",
       {"present", "word-eq", "--in", "inputs/commuting_loops.json", "--lhs", "abab", "--rhs", "aabb", "--bound", "6"}},
      {"present_word_eq_free",
       {"present", "word-eq", "--in", "inputs/free_loop_monoid.json", "--lhs", "x", "--rhs", "xx"}},
      {"topo_chi_disk", {"topo", "chi", "--in", "inputs/disk.json"}},
      {"topo_chi_torus", {"topo", "chi", "--in", "inputs/torus.json"}},
      {"topo_homology_disk", {"topo", "homology", "--in", "inputs/disk.json"}},
      {"topo_homology_torus", {"topo", "homology", "--in", "inputs/torus.json"}},
      {"topo_pi1_circle", {"topo", "pi1", "--in", "inputs/circle.json"}},
      {"topo_realize_torus", {"topo", "realize", "--in", "inputs/torus.json"}},
  };
  for (const auto& c : cases)
    write_json(dir / "cases" / (c.name + ".json"),
               manifest(c.name, c.argv, "golden/" + c.name + "." + c.ext, c.expect_exit));
}

int write_goldens(const fs::path& dir) {
  int failures = 0;
  for (const auto& entry : fs::directory_iterator(dir / "cases")) {
    if (entry.path().extension() != ".json") continue;
    json m = cli::load_json(entry.path());
    std::vector<std::string> argv;
    for (const auto& a : io::field(m, "argv")) {
      std::string s = a.get<std::string>();
      if (fs::exists(dir / s)) s = (dir / s).string();
      argv.push_back(s);
    }
    std::ostringstream out, err;
    int code = cli::run(argv, out, err);
    int expected = m.contains("expect_exit") ? m["expect_exit"].get<int>() : 0;
    if (code != expected) {
      std::cerr << io::str_field(m, "name") << ": exit " << code << ", expected " << expected << "\n" << err.str();
      ++failures;
      continue;
    }
    write_file(dir / io::str_field(m, "golden"), out.str());
    std::cout << "wrote " << io::str_field(m, "golden") << "\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: corpusgen inputs|goldens <dir>\n";
    return 1;
  }
  std::string mode = argv[1];
  fs::path dir = argv[2];
  try {
    if (mode == "inputs") {
      write_inputs(dir);
      std::cout << "corpus inputs written to " << dir << "\n";
      return 0;
    }
    if (mode == "goldens") return write_goldens(dir);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  std::cerr << "usage: corpusgen inputs|goldens <dir>\n";
  return 1;
}
