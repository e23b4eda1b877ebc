#ifndef CATKIT_JSON_IO_HPP
#define CATKIT_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "catkit/bicat.hpp"
#include "catkit/core.hpp"
#include "catkit/descent.hpp"
#include "catkit/fincat.hpp"
#include "catkit/mates.hpp"
#include "catkit/present.hpp"
#include "catkit/topo.hpp"

// JSON wire formats (schemas fincat/v1, computad/v1, descent/v1, ...) and
// the emit-only DOT output.  nlohmann::json keeps object keys sorted, so
// every emitter here is byte-deterministic.
namespace catkit::io {

using nlohmann::json;

inline const json& field(const json& j, const std::string& name) {
  auto it = j.find(name);
  if (it == j.end()) throw Error(errc::malformed_input, "missing field '" + name + "'");
  return *it;
}

inline std::string str_field(const json& j, const std::string& name) {
  const json& f = field(j, name);
  if (!f.is_string()) throw Error(errc::malformed_input, "field '" + name + "' must be a string");
  return f.get<std::string>();
}

inline void expect_schema(const json& j, const std::string& schema) {
  if (str_field(j, "schema") != schema)
    throw Error(errc::malformed_input, "expected schema '" + schema + "', got '" + str_field(j, "schema") + "'");
}

inline std::vector<Id> id_list(const json& j, const std::string& name) {
  const json& f = field(j, name);
  if (!f.is_array()) throw Error(errc::malformed_input, "field '" + name + "' must be an array");
  std::vector<Id> out;
  for (const auto& v : f) {
    if (!v.is_string()) throw Error(errc::malformed_input, "field '" + name + "' must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

inline std::map<Id, Id> id_map(const json& j, const std::string& name) {
  const json& f = field(j, name);
  if (!f.is_object()) throw Error(errc::malformed_input, "field '" + name + "' must be an object");
  std::map<Id, Id> out;
  for (const auto& [k, v] : f.items()) {
    if (!v.is_string()) throw Error(errc::malformed_input, "field '" + name + "' must map to strings");
    out[k] = v.get<std::string>();
  }
  return out;
}

// ---------------------------------------------------------------- graphs

inline json to_json(const fincat::FinGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({{"id", e.id}, {"src", e.src}, {"tgt", e.tgt}});
  return {{"schema", "graph/v1"}, {"nodes", g.nodes}, {"edges", edges}};
}

inline fincat::FinGraph graph_from_json(const json& j) {
  fincat::FinGraph g;
  g.nodes = id_list(j, "nodes");
  for (const auto& e : field(j, "edges")) g.edges.push_back({str_field(e, "id"), str_field(e, "src"), str_field(e, "tgt")});
  g.normalize();
  fincat::validate_graph(g);
  return g;
}

// ------------------------------------------------------------ categories

inline json to_json(const fincat::FinCat& c) {
  json morphisms = json::array();
  for (const auto& m : c.morphisms) morphisms.push_back({{"id", m.id}, {"src", m.src}, {"tgt", m.tgt}});
  json compose = json::array();
  for (const auto& [gf, h] : c.table) compose.push_back({{"g", gf.first}, {"f", gf.second}, {"result", h}});
  json identities = json::object();
  for (const auto& [x, i] : c.identity) identities[x] = i;
  return {{"schema", "fincat/v1"},
          {"objects", c.objects},
          {"morphisms", morphisms},
          {"identities", identities},
          {"compose", compose}};
}

inline fincat::FinCat cat_from_json(const json& j) {
  expect_schema(j, "fincat/v1");
  fincat::FinCat c;
  c.objects = id_list(j, "objects");
  for (const auto& m : field(j, "morphisms"))
    c.morphisms.push_back({str_field(m, "id"), str_field(m, "src"), str_field(m, "tgt")});
  c.identity = id_map(j, "identities");
  for (const auto& e : field(j, "compose")) c.table[{str_field(e, "g"), str_field(e, "f")}] = str_field(e, "result");
  c.normalize();
  return c;
}

inline json to_json_maps(const fincat::Functor& f) {
  json omap = json::object(), mmap = json::object();
  for (const auto& [k, v] : f.omap) omap[k] = v;
  for (const auto& [k, v] : f.mmap) mmap[k] = v;
  return {{"omap", omap}, {"mmap", mmap}};
}

inline fincat::Functor functor_from_json(const json& j, const fincat::CatPtr& dom, const fincat::CatPtr& cod) {
  fincat::Functor f{dom, cod, id_map(j, "omap"), id_map(j, "mmap")};
  fincat::ValidationReport rep = fincat::check_functor(f);
  if (!rep.ok())
    throw Error(errc::malformed_input, "functor: " + rep.violations.front().kind + " " + rep.violations.front().detail);
  return f;
}

inline json to_json_components(const fincat::NatTrans& t) {
  json at = json::object();
  for (const auto& [k, v] : t.at) at[k] = v;
  return {{"at", at}};
}

inline fincat::NatTrans nat_from_json(const json& j, const fincat::Functor& dom, const fincat::Functor& cod) {
  fincat::NatTrans t{dom, cod, id_map(j, "at")};
  fincat::ValidationReport rep = fincat::check_nat(t);
  if (!rep.ok())
    throw Error(errc::malformed_input,
                "transformation: " + rep.violations.front().kind + " " + rep.violations.front().detail);
  return t;
}

// -------------------------------------------------------------- computads

inline json to_json(const present::Word& w) {
  json letters = json::array();
  for (const auto& l : w.letters) letters.push_back(json::array({l.edge, l.dir}));
  return letters;
}

inline present::Word word_from_json(const json& letters, const fincat::FinGraph& g, const std::optional<Id>& at) {
  if (!letters.is_array()) throw Error(errc::malformed_input, "a word must be an array of [edge, dir] pairs");
  present::Word w;
  for (const auto& l : letters) {
    if (!l.is_array() || l.size() != 2 || !l[0].is_string() || !l[1].is_number_integer())
      throw Error(errc::malformed_input, "letters must be [edge, +1|-1] pairs");
    w.letters.push_back({l[0].get<std::string>(), l[1].get<int>()});
  }
  if (!w.letters.empty()) {
    const fincat::Edge* e = g.find_edge(w.letters.front().edge);
    if (!e) throw Error(errc::malformed_input, "word uses unknown edge '" + w.letters.front().edge + "'");
    w.start = w.letters.front().dir == 1 ? e->src : e->tgt;
  } else if (at) {
    w.start = *at;
  } else {
    throw Error(errc::malformed_input, "an empty word needs an explicit node ('at')");
  }
  return w;
}

inline json to_json(const present::Computad2& c) {
  json relations = json::array();
  for (const auto& r : c.relations) {
    json rel = {{"id", r.id}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}};
    if (r.lhs.letters.empty() && r.rhs.letters.empty()) rel["at"] = r.lhs.start;
    relations.push_back(rel);
  }
  return {{"schema", "computad/v1"},
          {"graph", to_json(c.graph)},
          {"groupoidal", c.groupoidal},
          {"relations", relations}};
}

inline present::Computad2 computad_from_json(const json& j) {
  expect_schema(j, "computad/v1");
  present::Computad2 c;
  c.graph = graph_from_json(field(j, "graph"));
  const json& g = field(j, "groupoidal");
  if (!g.is_boolean()) throw Error(errc::malformed_input, "'groupoidal' must be a boolean");
  c.groupoidal = g.get<bool>();
  for (const auto& r : field(j, "relations")) {
    std::optional<Id> at;
    if (r.contains("at")) at = str_field(r, "at");
    present::Word lhs = word_from_json(field(r, "lhs"), c.graph, at);
    // an empty rhs sits at the start of the lhs (the sides are parallel)
    present::Word rhs = word_from_json(field(r, "rhs"), c.graph, at ? at : std::optional<Id>(lhs.start));
    c.relations.push_back({str_field(r, "id"), lhs, rhs});
  }
  present::validate_computad(c);
  return c;
}

inline json to_json(const present::Presentation& p) {
  return {{"schema", "presentation/v1"}, {"computad", to_json(p.computad)}, {"bound", p.bound}};
}

inline present::Presentation presentation_from_json(const json& j) {
  if (j.contains("schema") && j["schema"] == "presentation/v1") {
    present::Computad2 c = computad_from_json(field(j, "computad"));
    const json& b = field(j, "bound");
    if (!b.is_number_integer()) throw Error(errc::malformed_input, "'bound' must be an integer");
    return present::make_presentation(std::move(c), b.get<int>());
  }
  return present::make_presentation(computad_from_json(j));
}

// ----------------------------------------------------------------- monads

inline json to_json(const descent::FinMonad& m) {
  return {{"schema", "monad/v1"},
          {"base", to_json(*m.base)},
          {"endofunctor", to_json_maps(m.endo)},
          {"mult", to_json_components(m.mult)},
          {"unit", to_json_components(m.unit)}};
}

inline descent::FinMonad monad_from_json_body(const json& j) {
  descent::FinMonad m;
  m.base = fincat::make_cat(cat_from_json(field(j, "base")));
  fincat::ValidationReport rep = fincat::validate_category(*m.base);
  if (!rep.ok()) throw Error(errc::malformed_input, "monad base: " + rep.violations.front().kind);
  m.endo = functor_from_json(field(j, "endofunctor"), m.base, m.base);
  m.mult = nat_from_json(field(j, "mult"), fincat::compose_functors(m.endo, m.endo), m.endo);
  m.unit = nat_from_json(field(j, "unit"), fincat::identity_functor(m.base), m.endo);
  fincat::ValidationReport laws = descent::check_monad(m);
  if (!laws.ok()) throw Error(errc::not_a_monad, laws.violations.front().kind + " " + laws.violations.front().detail);
  return m;
}

inline descent::FinMonad monad_from_json(const json& j) {
  expect_schema(j, "monad/v1");
  return monad_from_json_body(j);
}

// ---------------------------------------------------------- descent data

inline json to_json(const descent::DescentInput& d) {
  return {{"schema", "descent/v1"},
          {"d1", to_json(*d.d1)},
          {"d2", to_json(*d.d2)},
          {"d3", to_json(*d.d3)},
          {"functors",
           {{"d0", to_json_maps(d.f_d0)},
            {"d1", to_json_maps(d.f_d1)},
            {"s0", to_json_maps(d.f_s0)},
            {"del0", to_json_maps(d.f_del0)},
            {"del1", to_json_maps(d.f_del1)},
            {"del2", to_json_maps(d.f_del2)}}},
          {"transformations",
           {{"sigma00", to_json_components(d.sigma00)},
            {"sigma01", to_json_components(d.sigma01)},
            {"sigma21", to_json_components(d.sigma21)},
            {"n0", to_json_components(d.n0)},
            {"n1", to_json_components(d.n1)}}}};
}

inline descent::DescentInput descent_input_from_json(const json& j) {
  expect_schema(j, "descent/v1");
  descent::DescentInput d;
  d.d1 = fincat::make_cat(cat_from_json(field(j, "d1")));
  d.d2 = fincat::make_cat(cat_from_json(field(j, "d2")));
  d.d3 = fincat::make_cat(cat_from_json(field(j, "d3")));
  for (const auto& c : {d.d1, d.d2, d.d3}) {
    fincat::ValidationReport rep = fincat::validate_category(*c);
    if (!rep.ok()) throw Error(errc::malformed_input, "descent category: " + rep.violations.front().kind);
  }
  const json& fs = field(j, "functors");
  d.f_d0 = functor_from_json(field(fs, "d0"), d.d1, d.d2);
  d.f_d1 = functor_from_json(field(fs, "d1"), d.d1, d.d2);
  d.f_s0 = functor_from_json(field(fs, "s0"), d.d2, d.d1);
  d.f_del0 = functor_from_json(field(fs, "del0"), d.d2, d.d3);
  d.f_del1 = functor_from_json(field(fs, "del1"), d.d2, d.d3);
  d.f_del2 = functor_from_json(field(fs, "del2"), d.d2, d.d3);
  const json& ts = field(j, "transformations");
  using fincat::compose_functors;
  using fincat::identity_functor;
  d.sigma00 = nat_from_json(field(ts, "sigma00"), compose_functors(d.f_del0, d.f_d0), compose_functors(d.f_del1, d.f_d0));
  d.sigma01 = nat_from_json(field(ts, "sigma01"), compose_functors(d.f_del0, d.f_d1), compose_functors(d.f_del2, d.f_d0));
  d.sigma21 = nat_from_json(field(ts, "sigma21"), compose_functors(d.f_del2, d.f_d1), compose_functors(d.f_del1, d.f_d1));
  d.n0 = nat_from_json(field(ts, "n0"), identity_functor(d.d1), compose_functors(d.f_s0, d.f_d0));
  d.n1 = nat_from_json(field(ts, "n1"), identity_functor(d.d1), compose_functors(d.f_s0, d.f_d1));
  return d;
}

// ------------------------------------------------------------ adjunctions

inline json to_json(const mates::AdjunctionData& a) {
  return {{"schema", "adjunction/v1"},
          {"y", to_json(*a.dom())},
          {"z", to_json(*a.cod())},
          {"left", to_json_maps(a.left)},
          {"right", to_json_maps(a.right)},
          {"counit", to_json_components(a.counit)},
          {"unit", to_json_components(a.unit)}};
}

inline mates::AdjunctionData adjunction_from_json_body(const json& j) {
  fincat::CatPtr y = fincat::make_cat(cat_from_json(field(j, "y")));
  fincat::CatPtr z = fincat::make_cat(cat_from_json(field(j, "z")));
  for (const auto& c : {y, z}) {
    fincat::ValidationReport rep = fincat::validate_category(*c);
    if (!rep.ok()) throw Error(errc::malformed_input, "adjunction category: " + rep.violations.front().kind);
  }
  mates::AdjunctionData a;
  a.left = functor_from_json(field(j, "left"), y, z);
  a.right = functor_from_json(field(j, "right"), z, y);
  a.counit = nat_from_json(field(j, "counit"), fincat::compose_functors(a.left, a.right), fincat::identity_functor(z));
  a.unit = nat_from_json(field(j, "unit"), fincat::identity_functor(y), fincat::compose_functors(a.right, a.left));
  return a;
}

inline mates::AdjunctionData adjunction_from_json(const json& j) {
  expect_schema(j, "adjunction/v1");
  return adjunction_from_json_body(j);
}

inline json to_json(const mates::MateSquare& sq) {
  json lu = to_json(sq.adj_lu);
  json fg = to_json(sq.adj_fg);
  lu.erase("schema");
  fg.erase("schema");
  return {{"schema", "matesquare/v1"},
          {"adj_lu", lu},
          {"adj_fg", fg},
          {"m", to_json_maps(sq.m)},
          {"n", to_json_maps(sq.n)},
          {"alpha", to_json_components(sq.alpha)}};
}

inline mates::MateSquare mate_square_from_json(const json& j) {
  expect_schema(j, "matesquare/v1");
  mates::MateSquare sq;
  sq.adj_lu = adjunction_from_json_body(field(j, "adj_lu"));
  sq.adj_fg = adjunction_from_json_body(field(j, "adj_fg"));
  sq.m = functor_from_json(field(j, "m"), sq.adj_lu.cod(), sq.adj_fg.cod());
  sq.n = functor_from_json(field(j, "n"), sq.adj_lu.dom(), sq.adj_fg.dom());
  sq.alpha = nat_from_json(field(j, "alpha"), fincat::compose_functors(sq.n, sq.adj_lu.right),
                           fincat::compose_functors(sq.adj_fg.right, sq.m));
  return sq;
}

// ---------------------------------------------------------------- spans

inline json to_json(const bicat::FinSpan& s) {
  json ll = json::object(), lr = json::object();
  for (const auto& [k, v] : s.leg_left) ll[k] = v;
  for (const auto& [k, v] : s.leg_right) lr[k] = v;
  return {{"schema", "span/v1"}, {"left", s.left}, {"mid", s.mid}, {"right", s.right}, {"leg_left", ll}, {"leg_right", lr}};
}

inline bicat::FinSpan span_from_json_body(const json& j) {
  bicat::FinSpan s;
  s.left = id_list(j, "left");
  s.mid = id_list(j, "mid");
  s.right = id_list(j, "right");
  s.leg_left = id_map(j, "leg_left");
  s.leg_right = id_map(j, "leg_right");
  bicat::validate_span(s);
  return s;
}

inline bicat::FinSpan span_from_json(const json& j) {
  expect_schema(j, "span/v1");
  return span_from_json_body(j);
}

inline json to_json(const bicat::FinMatrix& m) {
  json entries = json::array();
  for (const auto& [rc, elems] : m.entry)
    entries.push_back({{"row", rc.first}, {"col", rc.second}, {"elems", elems}});
  return {{"schema", "matrix/v1"}, {"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

inline bicat::FinMatrix matrix_from_json_body(const json& j) {
  bicat::FinMatrix m;
  m.rows = id_list(j, "rows");
  m.cols = id_list(j, "cols");
  for (const auto& e : field(j, "entries")) m.entry[{str_field(e, "row"), str_field(e, "col")}] = id_list(e, "elems");
  bicat::validate_matrix(m);
  return m;
}

inline bicat::FinMatrix matrix_from_json(const json& j) {
  expect_schema(j, "matrix/v1");
  return matrix_from_json_body(j);
}

// ------------------------------------------------------------- complexes

inline json to_json(const topo::CWComplex2& x) {
  json edges = json::array();
  for (const auto& e : x.cells1) edges.push_back({{"id", e.id}, {"src", e.src}, {"tgt", e.tgt}});
  json faces = json::array();
  for (const auto& f : x.cells2) {
    json boundary = json::array();
    for (const auto& l : f.boundary) boundary.push_back(json::array({l.edge, l.dir}));
    faces.push_back({{"id", f.id}, {"at", f.at}, {"boundary", boundary}});
  }
  return {{"schema", "cw/v1"}, {"vertices", x.cells0}, {"edges", edges}, {"faces", faces}};
}

inline topo::CWComplex2 complex_from_json(const json& j) {
  expect_schema(j, "cw/v1");
  topo::CWComplex2 x;
  x.cells0 = id_list(j, "vertices");
  for (const auto& e : field(j, "edges")) x.cells1.push_back({str_field(e, "id"), str_field(e, "src"), str_field(e, "tgt")});
  for (const auto& f : field(j, "faces")) {
    topo::Cell2 cell;
    cell.id = str_field(f, "id");
    cell.at = str_field(f, "at");
    for (const auto& l : field(f, "boundary")) {
      if (!l.is_array() || l.size() != 2) throw Error(errc::malformed_input, "boundary letters are [edge, dir] pairs");
      cell.boundary.push_back({l[0].get<std::string>(), l[1].get<int>()});
    }
    x.cells2.push_back(std::move(cell));
  }
  topo::validate_complex(x);
  return x;
}

// ------------------------------------------------------------------- DOT

inline std::string dot_escape(const Id& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

inline std::string to_dot(const fincat::FinGraph& g) {
  std::string out = "digraph g {\n";
  std::vector<Id> nodes = g.nodes;
  std::sort(nodes.begin(), nodes.end());
  for (const auto& n : nodes) out += "  \"" + dot_escape(n) + "\";\n";
  std::vector<fincat::Edge> edges = g.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges)
    out += "  \"" + dot_escape(e.src) + "\" -> \"" + dot_escape(e.tgt) + "\" [label=\"" + dot_escape(e.id) + "\"];\n";
  out += "}\n";
  return out;
}

// Underlying graph of a category: objects as nodes, all morphisms as edges.
inline std::string to_dot(const fincat::FinCat& c) {
  fincat::FinGraph g;
  g.nodes = c.objects;
  for (const auto& m : c.morphisms) g.edges.push_back({m.id, m.src, m.tgt});
  return to_dot(g);
}

inline std::string to_dot(const topo::CWComplex2& x) { return to_dot(x.skeleton()); }

// ------------------------------------------------------------ reportage

inline json to_json(const fincat::ValidationReport& rep) {
  json violations = json::array();
  for (const auto& v : rep.violations) violations.push_back({{"kind", v.kind}, {"detail", v.detail}});
  return {{"valid", rep.ok()}, {"violations", violations}};
}

inline json to_json(const std::vector<present::ComponentGroup>& groups) {
  json out = json::array();
  for (const auto& g : groups) out.push_back({{"component", g.component}, {"rank", g.rank}, {"torsion", g.torsion}});
  return out;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace catkit::io

#endif
