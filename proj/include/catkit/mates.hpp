#ifndef CATKIT_MATES_HPP
#define CATKIT_MATES_HPP

#include <optional>
#include <string>

#include "catkit/core.hpp"
#include "catkit/fincat.hpp"

// Adjunctions between finite categories with explicit unit and counit, their
// composition, the mate correspondence and the Beck-Chevalley check.
namespace catkit::mates {

using catkit::Error;
using catkit::Id;
using catkit::errc;
using catkit::fincat::CatPtr;
using catkit::fincat::Functor;
using catkit::fincat::NatTrans;
using catkit::fincat::ValidationReport;

// left : Y -> Z, right : Z -> Y, counit : left . right => Id_Z,
// unit : Id_Y => right . left.
struct AdjunctionData {
  Functor left, right;
  NatTrans counit, unit;

  const CatPtr& dom() const { return left.dom; }  // Y
  const CatPtr& cod() const { return left.cod; }  // Z
};

inline ValidationReport check_adjunction(const AdjunctionData& a) {
  ValidationReport rep;
  if (!catkit::fincat::same_cat(a.left.dom, a.right.cod) || !catkit::fincat::same_cat(a.left.cod, a.right.dom)) {
    rep.add("adjunction-boundary", "left and right functors are not opposed");
    return rep;
  }
  for (const auto* f : {&a.left, &a.right})
    for (const auto& v : check_functor(*f).violations) rep.violations.push_back(v);
  if (!rep.ok()) return rep;

  Functor idY = identity_functor(a.left.dom);
  Functor idZ = identity_functor(a.left.cod);
  if (!functor_eq(a.counit.dom, compose_functors(a.left, a.right)) || !functor_eq(a.counit.cod, idZ))
    rep.add("counit-boundary", "expected left . right => Id");
  if (!functor_eq(a.unit.dom, idY) || !functor_eq(a.unit.cod, compose_functors(a.right, a.left)))
    rep.add("unit-boundary", "expected Id => right . left");
  if (!rep.ok()) return rep;
  for (const auto* t : {&a.counit, &a.unit})
    for (const auto& v : check_nat(*t).violations) rep.violations.push_back(v);
  if (!rep.ok()) return rep;

  const auto& y = *a.left.dom;
  const auto& z = *a.left.cod;
  for (const auto& obj : y.objects) {
    Id lhs = compose(z, a.counit(a.left.ob(obj)), a.left.mor(a.unit(obj)));
    if (lhs != z.id_of(a.left.ob(obj))) rep.add("triangle-left", "at '" + obj + "'");
  }
  for (const auto& obj : z.objects) {
    Id lhs = compose(y, a.right.mor(a.counit(obj)), a.unit(a.right.ob(obj)));
    if (lhs != y.id_of(a.right.ob(obj))) rep.add("triangle-right", "at '" + obj + "'");
  }
  return rep;
}

inline AdjunctionData identity_adjunction(const CatPtr& c) {
  Functor idc = identity_functor(c);
  return AdjunctionData{idc, idc, identity_nat(idc), identity_nat(idc)};
}

// (f2 f1 -| g1 g2) with counit e2 . f2(e1 at g2 -) and unit g1(n2 at f1 -) . n1.
inline AdjunctionData compose_adjunctions(const AdjunctionData& a2, const AdjunctionData& a1) {
  if (!catkit::fincat::same_cat(a1.cod(), a2.dom()))
    throw Error(errc::not_composable, "adjunction composition boundary mismatch");
  AdjunctionData out;
  out.left = compose_functors(a2.left, a1.left);
  out.right = compose_functors(a1.right, a2.right);

  const auto& z = *a2.cod();
  const auto& x = *a1.dom();
  out.counit = NatTrans{compose_functors(out.left, out.right), identity_functor(a2.cod()), {}};
  for (const auto& obj : z.objects)
    out.counit.at[obj] = compose(z, a2.counit(obj), a2.left.mor(a1.counit(a2.right.ob(obj))));
  out.unit = NatTrans{identity_functor(a1.dom()), compose_functors(out.right, out.left), {}};
  for (const auto& obj : x.objects)
    out.unit.at[obj] = compose(x, a1.right.mor(a2.unit(a1.left.ob(obj))), a1.unit(obj));

  ValidationReport rep = check_adjunction(out);
  if (!rep.ok()) throw Error(errc::not_an_adjunction, "composite fails: " + rep.violations.front().kind);
  return out;
}

// The square of the mate correspondence:
//   adj_lu : l -| u with l : W -> X,   adj_fg : f -| g with f : Z -> Y,
//   m : X -> Y,  n : W -> Z,  alpha : n . u => g . m.
struct MateSquare {
  AdjunctionData adj_lu, adj_fg;
  Functor m, n;
  NatTrans alpha;
};

inline ValidationReport check_mate_square(const MateSquare& sq) {
  ValidationReport rep;
  for (const auto& v : check_adjunction(sq.adj_lu).violations) rep.violations.push_back(v);
  for (const auto& v : check_adjunction(sq.adj_fg).violations) rep.violations.push_back(v);
  if (!rep.ok()) return rep;
  if (!catkit::fincat::same_cat(sq.m.dom, sq.adj_lu.cod()) || !catkit::fincat::same_cat(sq.m.cod, sq.adj_fg.cod()))
    rep.add("square-boundary", "m must run from X to Y");
  if (!catkit::fincat::same_cat(sq.n.dom, sq.adj_lu.dom()) || !catkit::fincat::same_cat(sq.n.cod, sq.adj_fg.dom()))
    rep.add("square-boundary", "n must run from W to Z");
  if (!rep.ok()) return rep;
  if (!functor_eq(sq.alpha.dom, compose_functors(sq.n, sq.adj_lu.right)) ||
      !functor_eq(sq.alpha.cod, compose_functors(sq.adj_fg.right, sq.m)))
    rep.add("square-boundary", "alpha must run n . u => g . m");
  if (!rep.ok()) return rep;
  for (const auto& v : check_nat(sq.alpha).violations) rep.violations.push_back(v);
  return rep;
}

// Mate of alpha: the pasting with the unit of l -| u and the counit of
// f -| g, componentwise at w:
//   counit_fg at m(l w)  .  f(alpha at l w)  .  f(n(unit_lu at w)).
inline NatTrans mate(const MateSquare& sq) {
  ValidationReport rep = check_mate_square(sq);
  if (!rep.ok()) throw Error(errc::boundary_mismatch, "mate: " + rep.violations.front().kind + " " + rep.violations.front().detail);

  const Functor& f = sq.adj_fg.left;
  const Functor& l = sq.adj_lu.left;
  const auto& ycat = *sq.adj_fg.cod();

  NatTrans out{compose_functors(f, sq.n), compose_functors(sq.m, l), {}};
  for (const auto& w : sq.n.dom->objects) {
    Id step1 = f.mor(sq.n.mor(sq.adj_lu.unit(w)));
    Id step2 = f.mor(sq.alpha(l.ob(w)));
    Id step3 = sq.adj_fg.counit(sq.m.ob(l.ob(w)));
    out.at[w] = compose(ycat, step3, compose(ycat, step2, step1));
  }
  if (!check_nat(out).ok()) throw Error(errc::invalid_input, "mate is not natural");
  return out;
}

// Inverse direction: beta : f . n => m . l goes back to n . u => g . m,
// componentwise at x:
//   g(m(counit_lu at x))  .  g(beta at u x)  .  unit_fg at n(u x).
inline NatTrans mate_inverse(const MateSquare& sq, const NatTrans& beta) {
  ValidationReport rep = check_mate_square(sq);
  if (!rep.ok()) throw Error(errc::boundary_mismatch, "mate_inverse: " + rep.violations.front().kind);
  if (!functor_eq(beta.dom, compose_functors(sq.adj_fg.left, sq.n)) ||
      !functor_eq(beta.cod, compose_functors(sq.m, sq.adj_lu.left)))
    throw Error(errc::boundary_mismatch, "mate_inverse: beta must run f . n => m . l");

  const Functor& g = sq.adj_fg.right;
  const Functor& u = sq.adj_lu.right;
  const auto& zcat = *sq.adj_fg.dom();

  NatTrans out{compose_functors(sq.n, u), compose_functors(g, sq.m), {}};
  for (const auto& x : u.dom->objects) {
    Id step1 = sq.adj_fg.unit(sq.n.ob(u.ob(x)));
    Id step2 = g.mor(beta(u.ob(x)));
    Id step3 = g.mor(sq.m.mor(sq.adj_lu.counit(x)));
    out.at[x] = compose(zcat, step3, compose(zcat, step2, step1));
  }
  if (!check_nat(out).ok()) throw Error(errc::invalid_input, "mate_inverse is not natural");
  return out;
}

struct BeckChevalley {
  bool satisfied = false;
  Id witness_object;     // first object (lex order) whose mate component fails
  Id witness_component;  // the non-invertible morphism
};

// Satisfied iff every component of the mate is invertible in its hom-set.
inline BeckChevalley beck_chevalley(const MateSquare& sq) {
  NatTrans m = mate(sq);
  const auto& ycat = *sq.adj_fg.cod();
  for (const auto& w : sq.n.dom->objects)
    if (!catkit::fincat::is_invertible(ycat, m(w))) return BeckChevalley{false, w, m(w)};
  return BeckChevalley{true, {}, {}};
}

}  // namespace catkit::mates

#endif
