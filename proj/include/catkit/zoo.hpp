#ifndef CATKIT_ZOO_HPP
#define CATKIT_ZOO_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catkit/fincat.hpp"
#include "catkit/mates.hpp"
#include "catkit/present.hpp"

// A zoo of standard small categories, graphs, computads and Galois
// connections.  Poset morphism ids are "(x,y)" for x <= y.
namespace catkit::zoo {

using catkit::Id;
using catkit::fincat::CatPtr;
using catkit::fincat::FinCat;
using catkit::fincat::FinGraph;
using catkit::fincat::make_cat;

inline Id pm(const Id& x, const Id& y) { return catkit::combine_ids({x, y}); }

inline CatPtr poset(const std::vector<Id>& elems, const std::function<bool(const Id&, const Id&)>& leq) {
  FinCat c;
  c.objects = elems;
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (leq(x, y)) c.morphisms.push_back({pm(x, y), x, y});
  for (const auto& x : elems) c.identity[x] = pm(x, x);
  for (const auto& m : c.morphisms)
    for (const auto& n : c.morphisms)
      if (m.tgt == n.src) c.table[{n.id, m.id}] = pm(m.src, n.tgt);
  return make_cat(std::move(c));
}

inline CatPtr terminal() { return poset({"*"}, [](const Id&, const Id&) { return true; }); }

inline CatPtr chain(int n) {
  std::vector<Id> elems;
  for (int i = 0; i < n; ++i) elems.push_back(std::to_string(i));
  return poset(elems, [](const Id& x, const Id& y) { return x <= y; });
}

inline CatPtr discrete(int n) {
  std::vector<Id> elems;
  for (int i = 0; i < n; ++i) elems.push_back("d" + std::to_string(i));
  return poset(elems, [](const Id& x, const Id& y) { return x == y; });
}

inline CatPtr divisibility_1236() {
  return poset({"1", "2", "3", "6"}, [](const Id& x, const Id& y) {
    int a = std::stoi(x), b = std::stoi(y);
    return b % a == 0;
  });
}

inline CatPtr square_poset() {
  return poset({"00", "01", "10", "11"},
               [](const Id& x, const Id& y) { return x[0] <= y[0] && x[1] <= y[1]; });
}

// The span shape: two objects, parallel arrows u, v : a -> b.
inline CatPtr parallel_pair() {
  FinCat c;
  c.objects = {"a", "b"};
  c.morphisms = {{"ida", "a", "a"}, {"idb", "b", "b"}, {"u", "a", "b"}, {"v", "a", "b"}};
  c.identity = {{"a", "ida"}, {"b", "idb"}};
  for (const auto& m : {"u", "v"}) {
    c.table[{m, "ida"}] = m;
    c.table[{"idb", m}] = m;
  }
  c.table[{"ida", "ida"}] = "ida";
  c.table[{"idb", "idb"}] = "idb";
  return make_cat(std::move(c));
}

inline CatPtr walking_iso() {
  FinCat c;
  c.objects = {"a", "b"};
  c.morphisms = {{"ida", "a", "a"}, {"idb", "b", "b"}, {"f", "a", "b"}, {"g", "b", "a"}};
  c.identity = {{"a", "ida"}, {"b", "idb"}};
  c.table[{"ida", "ida"}] = "ida";
  c.table[{"idb", "idb"}] = "idb";
  c.table[{"f", "ida"}] = "f";
  c.table[{"idb", "f"}] = "f";
  c.table[{"g", "idb"}] = "g";
  c.table[{"ida", "g"}] = "g";
  c.table[{"g", "f"}] = "ida";
  c.table[{"f", "g"}] = "idb";
  return make_cat(std::move(c));
}

// One object, morphisms {id, e} with e.e = e.
inline CatPtr idempotent_monoid() {
  FinCat c;
  c.objects = {"*"};
  c.morphisms = {{"e", "*", "*"}, {"id", "*", "*"}};
  c.identity = {{"*", "id"}};
  c.table[{"id", "id"}] = "id";
  c.table[{"id", "e"}] = "e";
  c.table[{"e", "id"}] = "e";
  c.table[{"e", "e"}] = "e";
  return make_cat(std::move(c));
}

// One object, morphisms {id, s} with s.s = id (the group Z/2).
inline CatPtr cyclic_two() {
  FinCat c;
  c.objects = {"*"};
  c.morphisms = {{"id", "*", "*"}, {"s", "*", "*"}};
  c.identity = {{"*", "id"}};
  c.table[{"id", "id"}] = "id";
  c.table[{"id", "s"}] = "s";
  c.table[{"s", "id"}] = "s";
  c.table[{"s", "s"}] = "id";
  return make_cat(std::move(c));
}

inline std::vector<CatPtr> corpus_categories() {
  return {terminal(),      chain(2),      chain(3),           discrete(2),
          discrete(3),     parallel_pair(), walking_iso(),    divisibility_1236(),
          square_poset(),  idempotent_monoid(), cyclic_two()};
}

// ------------------------------------------------------------- graphs

inline FinGraph loop_graph() {
  FinGraph g;
  g.nodes = {"n"};
  g.edges = {{"x", "n", "n"}};
  g.normalize();
  return g;
}

inline FinGraph two_loops_graph() {
  FinGraph g;
  g.nodes = {"n"};
  g.edges = {{"a", "n", "n"}, {"b", "n", "n"}};
  g.normalize();
  return g;
}

inline FinGraph parallel_edges_graph() {
  FinGraph g;
  g.nodes = {"n1", "n2"};
  g.edges = {{"u", "n1", "n2"}, {"v", "n1", "n2"}};
  g.normalize();
  return g;
}

inline FinGraph theta_graph() {
  FinGraph g;
  g.nodes = {"p", "q"};
  g.edges = {{"e1", "p", "q"}, {"e2", "p", "q"}, {"e3", "p", "q"}};
  g.normalize();
  return g;
}

// --------------------------------------------------------- computads

inline catkit::present::Computad2 torus_computad() {
  using namespace catkit::present;
  Computad2 c;
  c.graph = two_loops_graph();
  c.groupoidal = true;
  Word lhs{"n", {{"a", 1}, {"b", 1}, {"a", -1}, {"b", -1}}};
  Word rhs{"n", {}};
  c.relations = {{"r", lhs, rhs}};
  return c;
}

inline catkit::present::Computad2 disk_computad() {  // <a | a>
  using namespace catkit::present;
  Computad2 c;
  c.graph = loop_graph();
  c.graph.edges[0].id = "a";
  c.groupoidal = true;
  c.relations = {{"r", Word{"n", {{"a", 1}}}, Word{"n", {}}}};
  return c;
}

inline catkit::present::Computad2 z3_computad() {  // <a | a^3>
  using namespace catkit::present;
  Computad2 c;
  c.graph = loop_graph();
  c.graph.edges[0].id = "a";
  c.groupoidal = true;
  c.relations = {{"r", Word{"n", {{"a", 1}, {"a", 1}, {"a", 1}}}, Word{"n", {}}}};
  return c;
}

inline catkit::present::Computad2 free_loop_computad(bool groupoidal) {
  catkit::present::Computad2 c;
  c.graph = loop_graph();
  c.groupoidal = groupoidal;
  return c;
}

inline catkit::present::Computad2 sphere_like_computad() {  // <a | a a^-1>
  using namespace catkit::present;
  Computad2 c;
  c.graph = loop_graph();
  c.graph.edges[0].id = "a";
  c.groupoidal = true;
  c.relations = {{"r", Word{"n", {{"a", 1}, {"a", -1}}}, Word{"n", {}}}};
  return c;
}

inline catkit::present::Computad2 theta_computad() {
  catkit::present::Computad2 c;
  c.graph = theta_graph();
  c.groupoidal = true;
  return c;
}

// Circle plus disk, two components.
inline catkit::present::Computad2 two_component_computad() {
  using namespace catkit::present;
  Computad2 c;
  c.graph.nodes = {"m", "n"};
  c.graph.edges = {{"a", "n", "n"}, {"c", "m", "m"}};
  c.graph.normalize();
  c.groupoidal = true;
  c.relations = {{"r", Word{"m", {{"c", 1}}}, Word{"m", {}}}};
  return c;
}

inline std::vector<catkit::present::Computad2> corpus_computads() {
  return {torus_computad(),      disk_computad(),       z3_computad(),
          free_loop_computad(true), sphere_like_computad(), theta_computad(),
          two_component_computad()};
}

// -------------------------------------------------- posets as categories

inline bool poset_leq(const FinCat& p, const Id& x, const Id& y) { return !p.hom(x, y).empty(); }

// Functor between posets determined by a monotone object map.
inline catkit::fincat::Functor poset_functor(const CatPtr& dom, const CatPtr& cod, const std::map<Id, Id>& omap) {
  catkit::fincat::Functor f{dom, cod, omap, {}};
  for (const auto& m : dom->morphisms) f.mmap[m.id] = pm(omap.at(m.src), omap.at(m.tgt));
  if (!catkit::fincat::check_functor(f).ok()) throw catkit::Error(catkit::errc::invalid_input, "object map is not monotone");
  return f;
}

// The unique transformation between two poset functors, when it exists.
inline catkit::fincat::NatTrans poset_nat(const catkit::fincat::Functor& f, const catkit::fincat::Functor& g) {
  catkit::fincat::NatTrans t{f, g, {}};
  for (const auto& x : f.dom->objects) {
    if (!poset_leq(*f.cod, f.ob(x), g.ob(x)))
      throw catkit::Error(catkit::errc::invalid_input, "no transformation: not pointwise below");
    t.at[x] = pm(f.ob(x), g.ob(x));
  }
  return t;
}

// Galois connection (round up) -| (include) onto a sub-poset of closed
// points; every element must have a least closed point above it.
inline catkit::mates::AdjunctionData subposet_closure_adjunction(const CatPtr& y, const std::vector<Id>& closed) {
  CatPtr z = poset(closed, [&](const Id& a, const Id& b) { return poset_leq(*y, a, b); });
  std::map<Id, Id> up;
  for (const auto& x : y->objects) {
    std::vector<Id> above;
    for (const auto& s : closed)
      if (poset_leq(*y, x, s)) above.push_back(s);
    std::optional<Id> least;
    for (const auto& cand : above) {
      bool below_all = true;
      for (const auto& other : above) below_all &= poset_leq(*y, cand, other);
      if (below_all) least = cand;
    }
    if (!least) throw catkit::Error(catkit::errc::invalid_input, "'" + x + "' has no least closed point above");
    up[x] = *least;
  }
  catkit::fincat::Functor f = poset_functor(y, z, up);
  std::map<Id, Id> inc;
  for (const auto& s : closed) inc[s] = s;
  catkit::fincat::Functor g = poset_functor(z, y, inc);
  using catkit::fincat::compose_functors;
  using catkit::fincat::identity_functor;
  return catkit::mates::AdjunctionData{f, g, poset_nat(compose_functors(f, g), identity_functor(z)),
                                       poset_nat(identity_functor(y), compose_functors(g, f))};
}

}  // namespace catkit::zoo

#endif
