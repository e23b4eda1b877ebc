#ifndef CATKIT_DESCENT_HPP
#define CATKIT_DESCENT_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "catkit/core.hpp"
#include "catkit/fincat.hpp"
#include "catkit/mates.hpp"

// Colax and strict descent categories of diagrams shaped like the truncated
// 2-category with objects 1, 2, 3, arrows d0, d1 : 1 -> 2, s0 : 2 -> 1,
// del0, del1, del2 : 2 -> 3 and 2-cells
//   sigma00 : del0 d0 => del1 d0,   sigma01 : del0 d1 => del2 d0,
//   sigma21 : del2 d1 => del1 d1,   n0 : Id => s0 d0,   n1 : Id => s0 d1.
// Monads on finite categories, their Eilenberg-Moore categories, and the
// comparison between the two.
namespace catkit::descent {

using catkit::Budget;
using catkit::Error;
using catkit::Id;
using catkit::errc;
using catkit::fincat::CatPtr;
using catkit::fincat::FinCat;
using catkit::fincat::Functor;
using catkit::fincat::Isomorphism;
using catkit::fincat::NatTrans;
using catkit::fincat::ValidationReport;

struct DescentInput {
  CatPtr d1, d2, d3;
  Functor f_d0, f_d1;              // d1 -> d2
  Functor f_s0;                    // d2 -> d1
  Functor f_del0, f_del1, f_del2;  // d2 -> d3
  NatTrans sigma00, sigma01, sigma21, n0, n1;
};

inline ValidationReport validate_descent_input(const DescentInput& d) {
  using catkit::fincat::check_functor;
  using catkit::fincat::check_nat;
  using catkit::fincat::compose_functors;
  using catkit::fincat::functor_eq;
  using catkit::fincat::identity_functor;
  using catkit::fincat::same_cat;

  ValidationReport rep;
  auto functor_at = [&](const char* name, const Functor& f, const CatPtr& dom, const CatPtr& cod) {
    if (!same_cat(f.dom, dom) || !same_cat(f.cod, cod)) {
      rep.add("functor-boundary", std::string(name));
      return;
    }
    for (const auto& v : check_functor(f).violations) rep.add(std::string(name) + "-" + v.kind, v.detail);
  };
  functor_at("d0", d.f_d0, d.d1, d.d2);
  functor_at("d1", d.f_d1, d.d1, d.d2);
  functor_at("s0", d.f_s0, d.d2, d.d1);
  functor_at("del0", d.f_del0, d.d2, d.d3);
  functor_at("del1", d.f_del1, d.d2, d.d3);
  functor_at("del2", d.f_del2, d.d2, d.d3);
  if (!rep.ok()) return rep;

  auto trans_at = [&](const char* name, const NatTrans& t, const Functor& dom, const Functor& cod) {
    if (!functor_eq(t.dom, dom) || !functor_eq(t.cod, cod)) {
      rep.add("transformation-boundary", std::string(name));
      return;
    }
    for (const auto& v : check_nat(t).violations) rep.add(std::string(name) + "-" + v.kind, v.detail);
  };
  trans_at("sigma00", d.sigma00, compose_functors(d.f_del0, d.f_d0), compose_functors(d.f_del1, d.f_d0));
  trans_at("sigma01", d.sigma01, compose_functors(d.f_del0, d.f_d1), compose_functors(d.f_del2, d.f_d0));
  trans_at("sigma21", d.sigma21, compose_functors(d.f_del2, d.f_d1), compose_functors(d.f_del1, d.f_d1));
  trans_at("n0", d.n0, identity_functor(d.d1), compose_functors(d.f_s0, d.f_d0));
  trans_at("n1", d.n1, identity_functor(d.d1), compose_functors(d.f_s0, d.f_d1));
  return rep;
}

// Both sides of the two descent-object equations for a candidate pair
// (f, xi), as morphism ids.  The composition order is the only
// boundary-compatible reading of the associativity equation:
//   sigma21_f . del2(xi) . sigma01_f . del0(xi)  =  del1(xi) . sigma00_f.
struct EquationSides {
  Id assoc_lhs, assoc_rhs, ident_lhs, ident_rhs;
};

inline EquationSides descent_equation_sides(const DescentInput& d, const Id& f, const Id& xi) {
  const FinCat& c3 = *d.d3;
  const FinCat& c1 = *d.d1;
  EquationSides eq;
  Id lhs = d.f_del0.mor(xi);
  lhs = compose(c3, d.sigma01(f), lhs);
  lhs = compose(c3, d.f_del2.mor(xi), lhs);
  eq.assoc_lhs = compose(c3, d.sigma21(f), lhs);
  eq.assoc_rhs = compose(c3, d.f_del1.mor(xi), d.sigma00(f));
  eq.ident_lhs = compose(c1, d.f_s0.mor(xi), d.n0(f));
  eq.ident_rhs = d.n1(f);
  return eq;
}

struct DescentPair {
  Id object;  // object of d1
  Id xi;      // morphism of d2 from f_d0(object) to f_d1(object)
  friend bool operator==(const DescentPair&, const DescentPair&) = default;
};

struct DescentCategory {
  CatPtr cat;
  std::vector<DescentPair> pairs;          // aligned with sorted object ids
  std::map<Id, DescentPair> pair_of;       // object id -> pair
  std::map<Id, Id> morphism_to_d1;         // morphism id -> underlying d1 morphism
};

namespace detail {

inline DescentCategory build_descent_category(const DescentInput& d, bool require_invertible) {
  ValidationReport rep = validate_descent_input(d);
  if (!rep.ok())
    throw Error(errc::invalid_input, "descent input invalid: " + rep.violations.front().kind + " " + rep.violations.front().detail);

  DescentCategory out;
  FinCat c;
  for (const auto& f : d.d1->objects) {
    for (const auto& m : d.d2->morphisms) {
      if (m.src != d.f_d0.ob(f) || m.tgt != d.f_d1.ob(f)) continue;
      EquationSides eq = descent_equation_sides(d, f, m.id);
      if (eq.assoc_lhs != eq.assoc_rhs || eq.ident_lhs != eq.ident_rhs) continue;
      if (require_invertible && !catkit::fincat::is_invertible(*d.d2, m.id)) continue;
      Id oid = combine_ids({f, m.id});
      c.objects.push_back(oid);
      out.pairs.push_back({f, m.id});
      out.pair_of[oid] = {f, m.id};
    }
  }

  std::map<std::pair<Id, Id>, std::vector<std::pair<Id, Id>>> homs;  // (src,tgt) -> [(mor id, d1 mor)]
  for (const auto& src : c.objects)
    for (const auto& tgt : c.objects) {
      const DescentPair& p = out.pair_of.at(src);
      const DescentPair& q = out.pair_of.at(tgt);
      for (const auto& m : d.d1->hom(p.object, q.object)) {
        Id lhs = compose(*d.d2, d.f_d1.mor(m), p.xi);
        Id rhs = compose(*d.d2, q.xi, d.f_d0.mor(m));
        if (lhs != rhs) continue;
        Id mid = combine_ids({m, src, tgt});
        c.morphisms.push_back({mid, src, tgt});
        out.morphism_to_d1[mid] = m;
        homs[{src, tgt}].push_back({mid, m});
      }
    }

  for (const auto& oid : c.objects) c.identity[oid] = combine_ids({d.d1->id_of(out.pair_of.at(oid).object), oid, oid});

  for (const auto& g : c.morphisms)
    for (const auto& f : c.morphisms) {
      if (f.tgt != g.src) continue;
      Id comp = compose(*d.d1, out.morphism_to_d1.at(g.id), out.morphism_to_d1.at(f.id));
      c.table[{g.id, f.id}] = combine_ids({comp, f.src, g.tgt});
    }

  out.cat = catkit::fincat::make_cat(std::move(c));
  ValidationReport check = catkit::fincat::validate_category(*out.cat);
  if (!check.ok()) throw Error(errc::invalid_input, "descent category failed validation: " + check.violations.front().kind);
  return out;
}

}  // namespace detail

// Objects are pairs (f, xi) satisfying the associativity and identity
// equations; morphisms are d1-morphisms compatible with the structure maps.
inline DescentCategory colax_descent_category(const DescentInput& d) { return detail::build_descent_category(d, false); }

// Full subcategory of the colax descent category on the pairs whose xi is
// invertible in d2.
inline DescentCategory descent_category(const DescentInput& d) { return detail::build_descent_category(d, true); }

// ------------------------------------------------------------------ monads

struct FinMonad {
  CatPtr base;
  Functor endo;   // T : base -> base
  NatTrans mult;  // T T => T
  NatTrans unit;  // Id => T
};

inline ValidationReport check_monad(const FinMonad& m) {
  using catkit::fincat::check_functor;
  using catkit::fincat::check_nat;
  using catkit::fincat::compose_functors;
  using catkit::fincat::functor_eq;
  using catkit::fincat::identity_functor;
  using catkit::fincat::same_cat;

  ValidationReport rep;
  if (!same_cat(m.endo.dom, m.base) || !same_cat(m.endo.cod, m.base)) {
    rep.add("monad-boundary", "endofunctor must live on the base");
    return rep;
  }
  for (const auto& v : check_functor(m.endo).violations) rep.violations.push_back(v);
  if (!rep.ok()) return rep;
  if (!functor_eq(m.mult.dom, compose_functors(m.endo, m.endo)) || !functor_eq(m.mult.cod, m.endo))
    rep.add("mult-boundary", "expected T T => T");
  if (!functor_eq(m.unit.dom, identity_functor(m.base)) || !functor_eq(m.unit.cod, m.endo))
    rep.add("unit-boundary", "expected Id => T");
  if (!rep.ok()) return rep;
  for (const auto* t : {&m.mult, &m.unit})
    for (const auto& v : check_nat(*t).violations) rep.violations.push_back(v);
  if (!rep.ok()) return rep;

  const FinCat& c = *m.base;
  for (const auto& x : c.objects) {
    Id left = compose(c, m.mult(x), m.endo.mor(m.mult(x)));
    Id right = compose(c, m.mult(x), m.mult(m.endo.ob(x)));
    if (left != right) rep.add("monad-associativity", "at '" + x + "'");
    if (compose(c, m.mult(x), m.endo.mor(m.unit(x))) != c.id_of(m.endo.ob(x)))
      rep.add("monad-unit-left", "at '" + x + "'");
    if (compose(c, m.mult(x), m.unit(m.endo.ob(x))) != c.id_of(m.endo.ob(x)))
      rep.add("monad-unit-right", "at '" + x + "'");
  }
  return rep;
}

inline FinMonad identity_monad(const CatPtr& c) {
  Functor idc = catkit::fincat::identity_functor(c);
  return FinMonad{c, idc, catkit::fincat::identity_nat(idc), catkit::fincat::identity_nat(idc)};
}

// The one-monad instance of the descent shape: d0 and del0 are T, everything
// else is the identity; sigma00 is the multiplication and n0 the unit.
inline DescentInput em_diagram(const FinMonad& m) {
  using catkit::fincat::compose_functors;
  using catkit::fincat::identity_functor;

  ValidationReport rep = check_monad(m);
  if (!rep.ok()) throw Error(errc::not_a_monad, rep.violations.front().kind + " " + rep.violations.front().detail);

  Functor idb = identity_functor(m.base);
  DescentInput d;
  d.d1 = d.d2 = d.d3 = m.base;
  d.f_d0 = m.endo;
  d.f_d1 = idb;
  d.f_s0 = idb;
  d.f_del0 = m.endo;
  d.f_del1 = idb;
  d.f_del2 = idb;

  d.sigma00 = NatTrans{compose_functors(d.f_del0, d.f_d0), compose_functors(d.f_del1, d.f_d0), m.mult.at};
  d.sigma01 = NatTrans{compose_functors(d.f_del0, d.f_d1), compose_functors(d.f_del2, d.f_d0), {}};
  for (const auto& x : m.base->objects) d.sigma01.at[x] = m.base->id_of(m.endo.ob(x));
  d.sigma21 = NatTrans{compose_functors(d.f_del2, d.f_d1), compose_functors(d.f_del1, d.f_d1), {}};
  for (const auto& x : m.base->objects) d.sigma21.at[x] = m.base->id_of(x);
  d.n0 = NatTrans{idb, compose_functors(d.f_s0, d.f_d0), m.unit.at};
  d.n1 = NatTrans{idb, compose_functors(d.f_s0, d.f_d1), {}};
  for (const auto& x : m.base->objects) d.n1.at[x] = m.base->id_of(x);
  return d;
}

// ------------------------------------------------------- Eilenberg-Moore

struct AlgebraPair {
  Id carrier;  // object x
  Id action;   // a : T x -> x
  friend bool operator==(const AlgebraPair&, const AlgebraPair&) = default;
};

struct EmCategory {
  CatPtr cat;
  std::vector<AlgebraPair> algebras;
  std::map<Id, AlgebraPair> algebra_of;
  std::map<Id, Id> morphism_to_base;
};

// Direct exhaustive enumeration of algebras (x, a) with a . T a = a . mult
// and a . unit = id, independent of the descent engine.
inline EmCategory eilenberg_moore(const FinMonad& m) {
  ValidationReport rep = check_monad(m);
  if (!rep.ok()) throw Error(errc::not_a_monad, rep.violations.front().kind);

  const FinCat& c = *m.base;
  EmCategory out;
  FinCat em;
  for (const auto& x : c.objects)
    for (const auto& a : c.hom(m.endo.ob(x), x)) {
      if (compose(c, a, m.endo.mor(a)) != compose(c, a, m.mult(x))) continue;
      if (compose(c, a, m.unit(x)) != c.id_of(x)) continue;
      Id oid = combine_ids({x, a});
      em.objects.push_back(oid);
      out.algebras.push_back({x, a});
      out.algebra_of[oid] = {x, a};
    }

  for (const auto& src : em.objects)
    for (const auto& tgt : em.objects) {
      const AlgebraPair& p = out.algebra_of.at(src);
      const AlgebraPair& q = out.algebra_of.at(tgt);
      for (const auto& h : c.hom(p.carrier, q.carrier)) {
        if (compose(c, h, p.action) != compose(c, q.action, m.endo.mor(h))) continue;
        Id mid = combine_ids({h, src, tgt});
        em.morphisms.push_back({mid, src, tgt});
        out.morphism_to_base[mid] = h;
      }
    }
  for (const auto& oid : em.objects) em.identity[oid] = combine_ids({c.id_of(out.algebra_of.at(oid).carrier), oid, oid});
  for (const auto& g : em.morphisms)
    for (const auto& f : em.morphisms) {
      if (f.tgt != g.src) continue;
      Id comp = compose(c, out.morphism_to_base.at(g.id), out.morphism_to_base.at(f.id));
      em.table[{g.id, f.id}] = combine_ids({comp, f.src, g.tgt});
    }
  out.cat = catkit::fincat::make_cat(std::move(em));
  ValidationReport check = catkit::fincat::validate_category(*out.cat);
  if (!check.ok()) throw Error(errc::invalid_input, "EM category failed validation");
  return out;
}

// The Eilenberg-Moore category and the colax descent category of the induced
// diagram are isomorphic; the isomorphism is found by exhaustive search.
inline Isomorphism em_equivalence_check(const FinMonad& m, const Budget& budget = Budget::from_env()) {
  EmCategory em = eilenberg_moore(m);
  DescentCategory dc = colax_descent_category(em_diagram(m));
  auto iso = catkit::fincat::iso_search(em.cat, dc.cat, budget);
  if (!iso) throw Error(errc::invalid_input, "Eilenberg-Moore and colax descent categories are not isomorphic");
  return *iso;
}

// (Y, g f, g . counit . f, unit): the monad induced by an adjunction.
inline FinMonad monad_from_adjunction(const catkit::mates::AdjunctionData& adj) {
  ValidationReport rep = catkit::mates::check_adjunction(adj);
  if (!rep.ok()) throw Error(errc::not_an_adjunction, rep.violations.front().kind + " " + rep.violations.front().detail);

  using catkit::fincat::compose_functors;
  FinMonad m;
  m.base = adj.dom();
  m.endo = compose_functors(adj.right, adj.left);
  m.mult = NatTrans{compose_functors(m.endo, m.endo), m.endo, {}};
  for (const auto& y : m.base->objects) m.mult.at[y] = adj.right.mor(adj.counit(adj.left.ob(y)));
  m.unit = NatTrans{catkit::fincat::identity_functor(m.base), m.endo, adj.unit.at};

  ValidationReport laws = check_monad(m);
  if (!laws.ok()) throw Error(errc::not_a_monad, "induced data fails: " + laws.violations.front().kind);
  return m;
}

// -------------------------------------------------- monad morphism homs

// A colax morphism of monads: phi : f . T_Y => T_Z . f compatible with the
// multiplications and units.
struct MonadMorphism {
  Functor f;
  NatTrans phi;
};

struct MonadMorphismCategory {
  CatPtr cat;
  std::vector<MonadMorphism> objects;
  std::map<Id, std::size_t> object_index;
  std::vector<NatTrans> transformations;
  std::map<Id, std::size_t> morphism_index;
};

inline bool monad_morphism_equations_hold(const FinMonad& y, const FinMonad& z, const Functor& f, const NatTrans& phi) {
  const FinCat& zc = *z.base;
  for (const auto& x : y.base->objects) {
    Id lhs = compose(zc, z.mult(f.ob(x)), compose(zc, z.endo.mor(phi(x)), phi(y.endo.ob(x))));
    Id rhs = compose(zc, phi(x), f.mor(y.mult(x)));
    if (lhs != rhs) return false;
    if (compose(zc, phi(x), f.mor(y.unit(x))) != z.unit(f.ob(x))) return false;
  }
  return true;
}

// Objects: pairs (f, phi) satisfying the colax-morphism equations with all
// pseudomonad constraints at identities.  Morphisms: transformations
// m : f => h with (T_Z . m) after phi_f  =  phi_h after (m . T_Y).
inline MonadMorphismCategory monad_morphism_category(const FinMonad& y, const FinMonad& z,
                                                     const Budget& budget = Budget::from_env()) {
  using catkit::fincat::compose_functors;
  using catkit::fincat::enumerate_functors;
  using catkit::fincat::enumerate_nat_trans;

  for (const auto* m : {&y, &z}) {
    ValidationReport rep = check_monad(*m);
    if (!rep.ok()) throw Error(errc::not_a_monad, rep.violations.front().kind);
  }

  MonadMorphismCategory out;
  for (const auto& f : enumerate_functors(y.base, z.base, budget)) {
    Functor dom = compose_functors(f, y.endo);
    Functor cod = compose_functors(z.endo, f);
    for (const auto& phi : enumerate_nat_trans(dom, cod))
      if (monad_morphism_equations_hold(y, z, f, phi)) out.objects.push_back({f, phi});
  }
  budget.check_objects(out.objects.size(), "monad_morphism_category");

  FinCat c;
  for (std::size_t i = 0; i < out.objects.size(); ++i) {
    Id oid = "M" + catkit::fincat::detail::padded_index(i, out.objects.size());
    c.objects.push_back(oid);
    out.object_index[oid] = i;
  }

  struct Pending {
    std::size_t si, ti;
    NatTrans t;
  };
  std::vector<Pending> pend;
  for (std::size_t si = 0; si < out.objects.size(); ++si)
    for (std::size_t ti = 0; ti < out.objects.size(); ++ti) {
      const MonadMorphism& p = out.objects[si];
      const MonadMorphism& q = out.objects[ti];
      for (auto& t : enumerate_nat_trans(p.f, q.f)) {
        bool ok = true;
        for (const auto& x : y.base->objects) {
          Id lhs = compose(*z.base, z.endo.mor(t(x)), p.phi(x));
          Id rhs = compose(*z.base, q.phi(x), t(y.endo.ob(x)));
          if (lhs != rhs) {
            ok = false;
            break;
          }
        }
        if (ok) pend.push_back({si, ti, std::move(t)});
      }
    }
  budget.check_morphisms(pend.size(), "monad_morphism_category");

  std::map<std::pair<std::pair<std::size_t, std::size_t>, std::string>, Id> lookup;
  for (std::size_t k = 0; k < pend.size(); ++k) {
    Id mid = "h" + catkit::fincat::detail::padded_index(k, pend.size());
    Id sobj = "M" + catkit::fincat::detail::padded_index(pend[k].si, out.objects.size());
    Id tobj = "M" + catkit::fincat::detail::padded_index(pend[k].ti, out.objects.size());
    c.morphisms.push_back({mid, sobj, tobj});
    out.transformations.push_back(pend[k].t);
    out.morphism_index[mid] = k;
    lookup[{{pend[k].si, pend[k].ti}, catkit::fincat::detail::serialize_map(pend[k].t.at)}] = mid;
  }
  for (std::size_t i = 0; i < out.objects.size(); ++i) {
    NatTrans idt = catkit::fincat::identity_nat(out.objects[i].f);
    c.identity["M" + catkit::fincat::detail::padded_index(i, out.objects.size())] =
        lookup.at({{i, i}, catkit::fincat::detail::serialize_map(idt.at)});
  }
  for (std::size_t gi = 0; gi < pend.size(); ++gi)
    for (std::size_t fi = 0; fi < pend.size(); ++fi) {
      if (pend[fi].ti != pend[gi].si) continue;
      NatTrans comp = catkit::fincat::vcompose(pend[gi].t, pend[fi].t);
      c.table[{"h" + catkit::fincat::detail::padded_index(gi, pend.size()),
               "h" + catkit::fincat::detail::padded_index(fi, pend.size())}] =
          lookup.at({{pend[fi].si, pend[gi].ti}, catkit::fincat::detail::serialize_map(comp.at)});
    }
  out.cat = catkit::fincat::make_cat(std::move(c));
  return out;
}

// The hom diagram of the two monads, instantiated over the functor category
// Cat[Y, Z].  Pinned so that its colax descent pairs (f, xi) are exactly the
// colax monad morphisms: d0 acts by precomposition with T_Y and d1 by
// postcomposition with T_Z, so xi : f T_Y => T_Z f.
inline DescentInput monad_hom_diagram(const FinMonad& y, const FinMonad& z, const Budget& budget = Budget::from_env()) {
  using catkit::fincat::FunctorCategory;
  using catkit::fincat::compose_functors;
  using catkit::fincat::functor_category;
  using catkit::fincat::identity_functor;
  using catkit::fincat::whisker_left;
  using catkit::fincat::whisker_right;

  FunctorCategory fc = functor_category(y.base, z.base, budget);

  std::map<std::string, Id> obj_by_key;
  for (const auto& [oid, ix] : fc.object_index)
    obj_by_key[catkit::fincat::detail::functor_key(fc.objects[ix])] = oid;
  auto obj_of = [&](const Functor& f) { return obj_by_key.at(catkit::fincat::detail::functor_key(f)); };

  auto induced = [&](auto&& on_obj, auto&& on_nat) {
    Functor g{fc.cat, fc.cat, {}, {}};
    for (const auto& [oid, ix] : fc.object_index) g.omap[oid] = obj_of(on_obj(fc.objects[ix]));
    for (const auto& [mid, ix] : fc.morphism_index) g.mmap[mid] = fc.id_of_nat(on_nat(fc.morphisms[ix]));
    return g;
  };

  Functor pre_ty = induced([&](const Functor& f) { return compose_functors(f, y.endo); },
                           [&](const NatTrans& t) { return whisker_right(t, y.endo); });
  Functor post_tz = induced([&](const Functor& f) { return compose_functors(z.endo, f); },
                            [&](const NatTrans& t) { return whisker_left(z.endo, t); });

  DescentInput d;
  d.d1 = d.d2 = d.d3 = fc.cat;
  d.f_d0 = pre_ty;
  d.f_d1 = post_tz;
  d.f_s0 = identity_functor(fc.cat);
  d.f_del0 = pre_ty;
  d.f_del1 = identity_functor(fc.cat);
  d.f_del2 = post_tz;

  d.sigma00 = NatTrans{compose_functors(d.f_del0, d.f_d0), compose_functors(d.f_del1, d.f_d0), {}};
  d.sigma01 = NatTrans{compose_functors(d.f_del0, d.f_d1), compose_functors(d.f_del2, d.f_d0), {}};
  d.sigma21 = NatTrans{compose_functors(d.f_del2, d.f_d1), compose_functors(d.f_del1, d.f_d1), {}};
  d.n0 = NatTrans{identity_functor(fc.cat), compose_functors(d.f_s0, d.f_d0), {}};
  d.n1 = NatTrans{identity_functor(fc.cat), compose_functors(d.f_s0, d.f_d1), {}};
  for (const auto& [oid, ix] : fc.object_index) {
    const Functor& f = fc.objects[ix];
    d.sigma00.at[oid] = fc.id_of_nat(whisker_left(f, y.mult));
    d.sigma01.at[oid] = fc.cat->id_of(obj_of(compose_functors(z.endo, compose_functors(f, y.endo))));
    d.sigma21.at[oid] = fc.id_of_nat(whisker_right(z.mult, f));
    d.n0.at[oid] = fc.id_of_nat(whisker_left(f, y.unit));
    d.n1.at[oid] = fc.id_of_nat(whisker_right(z.unit, f));
  }
  return d;
}

}  // namespace catkit::descent

#endif
