#ifndef CATKIT_BICAT_HPP
#define CATKIT_BICAT_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "catkit/core.hpp"
#include "catkit/fincat.hpp"

// Spans and set-matrices over finite sets, their compositions, the canonical
// constraint bijections, and the round trips between small categories and
// monads in either bicategory.  The canonical pullback is the subset of the
// cartesian product in lexicographic element order, which makes the
// up-to-iso laws checkable as concrete bijection equations.
namespace catkit::bicat {

using catkit::Error;
using catkit::Id;
using catkit::errc;
using catkit::fincat::CatPtr;
using catkit::fincat::FinCat;
using catkit::fincat::ValidationReport;

// ------------------------------------------------------------------ spans

struct FinSpan {
  std::vector<Id> left, mid, right;
  std::map<Id, Id> leg_left;   // mid -> left
  std::map<Id, Id> leg_right;  // mid -> right
  friend bool operator==(const FinSpan&, const FinSpan&) = default;
};

inline void validate_span(const FinSpan& s) {
  auto check_set = [](const std::vector<Id>& v, const char* what) {
    std::set<Id> seen;
    for (const auto& x : v)
      if (!seen.insert(x).second) throw Error(errc::malformed_input, std::string("duplicate ") + what + " element '" + x + "'");
  };
  check_set(s.left, "left");
  check_set(s.mid, "mid");
  check_set(s.right, "right");
  for (const auto& x : s.mid) {
    auto l = s.leg_left.find(x);
    auto r = s.leg_right.find(x);
    if (l == s.leg_left.end() || r == s.leg_right.end())
      throw Error(errc::malformed_input, "legs must be total ('" + x + "')");
    if (std::find(s.left.begin(), s.left.end(), l->second) == s.left.end())
      throw Error(errc::malformed_input, "left leg of '" + x + "' dangles");
    if (std::find(s.right.begin(), s.right.end(), r->second) == s.right.end())
      throw Error(errc::malformed_input, "right leg of '" + x + "' dangles");
  }
}

inline FinSpan identity_span(const std::vector<Id>& a) {
  FinSpan s;
  s.left = s.mid = s.right = a;
  for (const auto& x : a) {
    s.leg_left[x] = x;
    s.leg_right[x] = x;
  }
  return s;
}

// m : A -> B then n : B -> C; mid is the canonical pullback
// {(p,q) | legR_m(p) = legL_n(q)} with elements named (p,q).
inline FinSpan span_compose(const FinSpan& n, const FinSpan& m) {
  validate_span(m);
  validate_span(n);
  if (m.right != n.left) throw Error(errc::boundary_mismatch, "span composition needs m.right == n.left");
  FinSpan out;
  out.left = m.left;
  out.right = n.right;
  for (const auto& p : m.mid)
    for (const auto& q : n.mid) {
      if (m.leg_right.at(p) != n.leg_left.at(q)) continue;
      Id e = combine_ids({p, q});
      out.mid.push_back(e);
      out.leg_left[e] = m.leg_left.at(p);
      out.leg_right[e] = n.leg_right.at(q);
    }
  std::sort(out.mid.begin(), out.mid.end());
  return out;
}

// A 2-cell of spans is a mid map commuting with both legs; bijective 2-cells
// are the constraint isomorphisms.
inline bool is_span_iso(const FinSpan& a, const FinSpan& b, const std::map<Id, Id>& f) {
  if (a.left != b.left || a.right != b.right) return false;
  if (f.size() != a.mid.size() || a.mid.size() != b.mid.size()) return false;
  std::set<Id> image;
  for (const auto& x : a.mid) {
    auto it = f.find(x);
    if (it == f.end()) return false;
    if (std::find(b.mid.begin(), b.mid.end(), it->second) == b.mid.end()) return false;
    if (!image.insert(it->second).second) return false;
    if (a.leg_left.at(x) != b.leg_left.at(it->second)) return false;
    if (a.leg_right.at(x) != b.leg_right.at(it->second)) return false;
  }
  return true;
}

// Reassociation (p . (n . m)) -> ((p . n) . m) read off the compatible
// triples; with the naming convention this is
// ((x,y),z) |-> (x,(y,z)).
inline std::map<Id, Id> span_associator(const FinSpan& p, const FinSpan& n, const FinSpan& m) {
  std::map<Id, Id> f;
  for (const auto& x : m.mid)
    for (const auto& y : n.mid) {
      if (m.leg_right.at(x) != n.leg_left.at(y)) continue;
      for (const auto& z : p.mid) {
        if (n.leg_right.at(y) != p.leg_left.at(z)) continue;
        f[combine_ids({combine_ids({x, y}), z})] = combine_ids({x, combine_ids({y, z})});
      }
    }
  return f;
}

// (id_B . m) -> m and (m . id_A) -> m.
inline std::map<Id, Id> span_left_unitor(const FinSpan& m) {
  std::map<Id, Id> f;
  for (const auto& x : m.mid) f[combine_ids({x, m.leg_right.at(x)})] = x;
  return f;
}

inline std::map<Id, Id> span_right_unitor(const FinSpan& m) {
  std::map<Id, Id> f;
  for (const auto& x : m.mid) f[combine_ids({m.leg_left.at(x), x})] = x;
  return f;
}

// --------------------------------------------------------------- matrices

struct FinMatrix {
  std::vector<Id> rows, cols;
  std::map<std::pair<Id, Id>, std::vector<Id>> entry;
  friend bool operator==(const FinMatrix&, const FinMatrix&) = default;

  const std::vector<Id>& at(const Id& r, const Id& c) const {
    static const std::vector<Id> empty;
    auto it = entry.find({r, c});
    return it == entry.end() ? empty : it->second;
  }
};

inline void validate_matrix(const FinMatrix& m) {
  std::set<Id> rset(m.rows.begin(), m.rows.end()), cset(m.cols.begin(), m.cols.end());
  if (rset.size() != m.rows.size() || cset.size() != m.cols.size())
    throw Error(errc::malformed_input, "duplicate index element");
  for (const auto& [rc, elems] : m.entry) {
    if (!rset.count(rc.first) || !cset.count(rc.second))
      throw Error(errc::malformed_input, "entry outside the index sets");
    std::set<Id> seen;
    for (const auto& e : elems)
      if (!seen.insert(e).second) throw Error(errc::malformed_input, "duplicate element '" + e + "' in an entry");
  }
}

inline FinMatrix identity_matrix(const std::vector<Id>& a) {
  FinMatrix m;
  m.rows = m.cols = a;
  for (const auto& i : a)
    for (const auto& j : a)
      if (i == j) m.entry[{i, j}] = {"I"};
  return m;
}

// Sum-of-products: entry (i,j) of n . m is the disjoint union over k of
// m(i,k) x n(k,j), with elements tagged (k,x,y).
inline FinMatrix mat_compose(const FinMatrix& n, const FinMatrix& m) {
  validate_matrix(m);
  validate_matrix(n);
  if (m.cols != n.rows) throw Error(errc::boundary_mismatch, "matrix composition needs m.cols == n.rows");
  FinMatrix out;
  out.rows = m.rows;
  out.cols = n.cols;
  for (const auto& i : m.rows)
    for (const auto& j : n.cols) {
      std::vector<Id> elems;
      for (const auto& k : m.cols)
        for (const auto& x : m.at(i, k))
          for (const auto& y : n.at(k, j)) elems.push_back(combine_ids({k, x, y}));
      std::sort(elems.begin(), elems.end());
      out.entry[{i, j}] = std::move(elems);
    }
  return out;
}

using MatrixCellMap = std::map<std::pair<Id, Id>, std::map<Id, Id>>;

inline bool is_matrix_iso(const FinMatrix& a, const FinMatrix& b, const MatrixCellMap& f) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (const auto& i : a.rows)
    for (const auto& j : a.cols) {
      const auto& ae = a.at(i, j);
      const auto& be = b.at(i, j);
      if (ae.size() != be.size()) return false;
      std::map<Id, Id> cell;
      auto it = f.find({i, j});
      if (it != f.end()) cell = it->second;
      if (cell.size() != ae.size()) return false;
      std::set<Id> image;
      for (const auto& x : ae) {
        auto ix = cell.find(x);
        if (ix == cell.end()) return false;
        if (std::find(be.begin(), be.end(), ix->second) == be.end()) return false;
        if (!image.insert(ix->second).second) return false;
      }
    }
  return true;
}

// (p . (n . m)) -> ((p . n) . m) per entry: (l,(k,x,y),z) |-> (k,x,(l,y,z)).
inline MatrixCellMap mat_associator(const FinMatrix& p, const FinMatrix& n, const FinMatrix& m) {
  MatrixCellMap f;
  for (const auto& i : m.rows)
    for (const auto& j : p.cols) {
      std::map<Id, Id> cell;
      for (const auto& k : m.cols)
        for (const auto& l : n.cols)
          for (const auto& x : m.at(i, k))
            for (const auto& y : n.at(k, l))
              for (const auto& z : p.at(l, j))
                cell[combine_ids({l, combine_ids({k, x, y}), z})] = combine_ids({k, x, combine_ids({l, y, z})});
      f[{i, j}] = std::move(cell);
    }
  return f;
}

inline MatrixCellMap mat_left_unitor(const FinMatrix& m) {  // id_B . m -> m
  MatrixCellMap f;
  for (const auto& i : m.rows)
    for (const auto& j : m.cols) {
      std::map<Id, Id> cell;
      for (const auto& x : m.at(i, j)) cell[combine_ids({j, x, "I"})] = x;
      f[{i, j}] = std::move(cell);
    }
  return f;
}

inline MatrixCellMap mat_right_unitor(const FinMatrix& m) {  // m . id_A -> m
  MatrixCellMap f;
  for (const auto& i : m.rows)
    for (const auto& j : m.cols) {
      std::map<Id, Id> cell;
      for (const auto& x : m.at(i, j)) cell[combine_ids({i, "I", x})] = x;
      f[{i, j}] = std::move(cell);
    }
  return f;
}

// ------------------------------------------------------------ span monads

// An internal category presented as a span with multiplication and identity:
// dom and cod are the legs, comp is defined on the canonical pullback
// {(p,q) | cod p = dom q} and ident picks identities.
struct SpanMonad {
  std::vector<Id> objset, morset;
  std::map<Id, Id> dom, cod;               // morset -> objset
  std::map<std::pair<Id, Id>, Id> comp;    // (p, q) with cod p = dom q -> "q after p"
  std::map<Id, Id> ident;                  // objset -> morset
  friend bool operator==(const SpanMonad&, const SpanMonad&) = default;
};

inline ValidationReport check_span_monad(const SpanMonad& s) {
  ValidationReport rep;
  std::set<Id> objs(s.objset.begin(), s.objset.end()), mors(s.morset.begin(), s.morset.end());
  if (objs.size() != s.objset.size() || mors.size() != s.morset.size()) {
    rep.add("duplicate-id", "");
    return rep;
  }
  for (const auto& m : s.morset) {
    if (!s.dom.count(m) || !objs.count(s.dom.at(m))) rep.add("dom-missing", "'" + m + "'");
    if (!s.cod.count(m) || !objs.count(s.cod.at(m))) rep.add("cod-missing", "'" + m + "'");
  }
  for (const auto& x : s.objset) {
    auto it = s.ident.find(x);
    if (it == s.ident.end() || !mors.count(it->second)) {
      rep.add("ident-missing", "'" + x + "'");
      continue;
    }
    if (s.dom.at(it->second) != x || s.cod.at(it->second) != x) rep.add("ident-boundary", "'" + x + "'");
  }
  if (!rep.ok()) return rep;

  for (const auto& p : s.morset)
    for (const auto& q : s.morset) {
      bool pullback = s.cod.at(p) == s.dom.at(q);
      auto it = s.comp.find({p, q});
      if (!pullback) {
        if (it != s.comp.end()) rep.add("comp-spurious", "(" + p + "," + q + ")");
        continue;
      }
      if (it == s.comp.end()) {
        rep.add("comp-missing", "(" + p + "," + q + ")");
        continue;
      }
      if (!mors.count(it->second)) {
        rep.add("comp-dangling", "(" + p + "," + q + ")");
        continue;
      }
      if (s.dom.at(it->second) != s.dom.at(p) || s.cod.at(it->second) != s.cod.at(q))
        rep.add("comp-boundary", "(" + p + "," + q + ")");
    }
  if (!rep.ok()) return rep;

  for (const auto& p : s.morset) {
    if (s.comp.at({s.ident.at(s.dom.at(p)), p}) != p) rep.add("unit-square", "left unit at '" + p + "'");
    if (s.comp.at({p, s.ident.at(s.cod.at(p))}) != p) rep.add("unit-square", "right unit at '" + p + "'");
  }
  for (const auto& p : s.morset)
    for (const auto& q : s.morset) {
      if (s.cod.at(p) != s.dom.at(q)) continue;
      for (const auto& r : s.morset) {
        if (s.cod.at(q) != s.dom.at(r)) continue;
        Id left = s.comp.at({s.comp.at({p, q}), r});
        Id right = s.comp.at({p, s.comp.at({q, r})});
        if (left != right) rep.add("associativity-square", "(" + p + "," + q + "," + r + ")");
      }
    }
  return rep;
}

inline SpanMonad cat_to_span_monad(const FinCat& c) {
  ValidationReport rep = catkit::fincat::validate_category(c);
  if (!rep.ok()) throw Error(errc::invalid_input, "not a category: " + rep.violations.front().kind);
  SpanMonad s;
  s.objset = c.objects;
  for (const auto& m : c.morphisms) {
    s.morset.push_back(m.id);
    s.dom[m.id] = m.src;
    s.cod[m.id] = m.tgt;
  }
  s.ident = c.identity;
  for (const auto& [gf, h] : c.table) s.comp[{gf.second, gf.first}] = h;
  ValidationReport check = check_span_monad(s);
  if (!check.ok()) throw Error(errc::not_a_monad, check.violations.front().kind);
  return s;
}

inline FinCat span_monad_to_cat(const SpanMonad& s) {
  ValidationReport rep = check_span_monad(s);
  if (!rep.ok())
    throw Error(errc::not_a_monad, rep.violations.front().kind + " " + rep.violations.front().detail);
  FinCat c;
  c.objects = s.objset;
  for (const auto& m : s.morset) c.morphisms.push_back({m, s.dom.at(m), s.cod.at(m)});
  c.identity = s.ident;
  for (const auto& [pq, h] : s.comp) c.table[{pq.second, pq.first}] = h;
  c.normalize();
  ValidationReport check = catkit::fincat::validate_category(c);
  if (!check.ok()) throw Error(errc::not_a_monad, check.violations.front().kind);
  return c;
}

// The underlying span of an internal category, with its composition pullback.
inline FinSpan span_of(const SpanMonad& s) {
  FinSpan sp;
  sp.left = s.objset;
  sp.right = s.objset;
  sp.mid = s.morset;
  for (const auto& m : s.morset) {
    sp.leg_left[m] = s.dom.at(m);
    sp.leg_right[m] = s.cod.at(m);
  }
  return sp;
}

// ------------------------------------------------------------- mat monads

// A category enriched in finite sets: an object set, hom entries, a
// composition family and identity elements.  Entry elements must be globally
// unique so the composition family can be keyed by element pairs.
struct MatMonad {
  std::vector<Id> objset;
  FinMatrix hom;                         // rows = cols = objset
  std::map<std::pair<Id, Id>, Id> comp;  // (g in hom(b,c), f in hom(a,b)) -> element of hom(a,c)
  std::map<Id, Id> ident;                // object -> element of hom(a,a)
  friend bool operator==(const MatMonad&, const MatMonad&) = default;
};

inline ValidationReport check_mat_monad(const MatMonad& m) {
  ValidationReport rep;
  validate_matrix(m.hom);
  if (m.hom.rows != m.objset || m.hom.cols != m.objset) {
    rep.add("hom-index", "hom matrix must be indexed by the object set");
    return rep;
  }
  std::map<Id, std::pair<Id, Id>> where;  // element -> (row, col)
  for (const auto& [rc, elems] : m.hom.entry)
    for (const auto& e : elems) {
      if (where.count(e)) {
        rep.add("element-collision", "'" + e + "' appears in two entries");
        return rep;
      }
      where[e] = rc;
    }
  for (const auto& x : m.objset) {
    auto it = m.ident.find(x);
    if (it == m.ident.end() || !where.count(it->second)) {
      rep.add("ident-missing", "'" + x + "'");
      continue;
    }
    if (where.at(it->second) != std::pair<Id, Id>{x, x}) rep.add("ident-boundary", "'" + x + "'");
  }
  if (!rep.ok()) return rep;

  for (const auto& [g, gw] : where)
    for (const auto& [f, fw] : where) {
      bool composable = fw.second == gw.first;
      auto it = m.comp.find({g, f});
      if (!composable) {
        if (it != m.comp.end()) rep.add("comp-spurious", "(" + g + "," + f + ")");
        continue;
      }
      if (it == m.comp.end()) {
        rep.add("comp-missing", "(" + g + "," + f + ")");
        continue;
      }
      auto rw = where.find(it->second);
      if (rw == where.end() || rw->second != std::pair<Id, Id>{fw.first, gw.second})
        rep.add("comp-boundary", "(" + g + "," + f + ")");
    }
  if (!rep.ok()) return rep;

  for (const auto& [f, fw] : where) {
    if (m.comp.at({f, m.ident.at(fw.first)}) != f) rep.add("unit-law", "'" + f + "' . id");
    if (m.comp.at({m.ident.at(fw.second), f}) != f) rep.add("unit-law", "id . '" + f + "'");
  }
  for (const auto& [h, hw] : where)
    for (const auto& [g, gw] : where) {
      if (gw.second != hw.first) continue;
      for (const auto& [f, fw] : where) {
        if (fw.second != gw.first) continue;
        if (m.comp.at({h, m.comp.at({g, f})}) != m.comp.at({m.comp.at({h, g}), f}))
          rep.add("associativity", "(" + h + "," + g + "," + f + ")");
      }
    }
  return rep;
}

inline MatMonad cat_to_mat_monad(const FinCat& c) {
  ValidationReport rep = catkit::fincat::validate_category(c);
  if (!rep.ok()) throw Error(errc::invalid_input, "not a category: " + rep.violations.front().kind);
  MatMonad m;
  m.objset = c.objects;
  m.hom.rows = m.hom.cols = c.objects;
  for (const auto& a : c.objects)
    for (const auto& b : c.objects) m.hom.entry[{a, b}] = c.hom(a, b);
  m.ident = c.identity;
  for (const auto& [gf, h] : c.table) m.comp[{gf.first, gf.second}] = h;
  ValidationReport check = check_mat_monad(m);
  if (!check.ok()) throw Error(errc::not_a_monad, check.violations.front().kind);
  return m;
}

inline FinCat mat_monad_to_cat(const MatMonad& m) {
  ValidationReport rep = check_mat_monad(m);
  if (!rep.ok()) throw Error(errc::not_a_monad, rep.violations.front().kind + " " + rep.violations.front().detail);
  FinCat c;
  c.objects = m.objset;
  for (const auto& [rc, elems] : m.hom.entry)
    for (const auto& e : elems) c.morphisms.push_back({e, rc.first, rc.second});
  c.identity = m.ident;
  for (const auto& [gf, h] : m.comp) c.table[{gf.first, gf.second}] = h;
  c.normalize();
  ValidationReport check = catkit::fincat::validate_category(c);
  if (!check.ok()) throw Error(errc::not_a_monad, check.violations.front().kind);
  return c;
}

}  // namespace catkit::bicat

#endif
