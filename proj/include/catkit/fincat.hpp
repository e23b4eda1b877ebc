#ifndef CATKIT_FINCAT_HPP
#define CATKIT_FINCAT_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catkit/core.hpp"

// Finite categories with explicit composition tables, functors, natural
// transformations, paths, limits, pointwise right Kan extensions and
// exhaustive isomorphism search.  Everything is immutable after construction
// and every enumeration is emitted in lexicographic id order.
namespace catkit::fincat {

using catkit::Budget;
using catkit::Error;
using catkit::Id;
using catkit::errc;

// ---------------------------------------------------------------- graphs

struct Edge {
  Id id, src, tgt;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct FinGraph {
  std::vector<Id> nodes;
  std::vector<Edge> edges;

  void normalize() {
    std::sort(nodes.begin(), nodes.end());
    std::sort(edges.begin(), edges.end());
  }

  bool has_node(const Id& n) const {
    return std::binary_search(nodes.begin(), nodes.end(), n) ||
           std::find(nodes.begin(), nodes.end(), n) != nodes.end();
  }

  const Edge* find_edge(const Id& e) const {
    for (const auto& ed : edges)
      if (ed.id == e) return &ed;
    return nullptr;
  }

  friend bool operator==(const FinGraph&, const FinGraph&) = default;
};

inline void validate_graph(const FinGraph& g) {
  std::set<Id> seen;
  for (const auto& n : g.nodes)
    if (!seen.insert(n).second) throw Error(errc::malformed_input, "duplicate node id '" + n + "'");
  std::set<Id> eseen;
  for (const auto& e : g.edges) {
    if (!eseen.insert(e.id).second) throw Error(errc::malformed_input, "duplicate edge id '" + e.id + "'");
    if (!g.has_node(e.src)) throw Error(errc::malformed_input, "edge '" + e.id + "' has unknown source '" + e.src + "'");
    if (!g.has_node(e.tgt)) throw Error(errc::malformed_input, "edge '" + e.id + "' has unknown target '" + e.tgt + "'");
  }
}

struct Path {
  Id start;
  std::vector<Id> steps;  // edge ids, first traversed first
  friend bool operator==(const Path&, const Path&) = default;
};

inline Id path_target(const FinGraph& g, const Path& p) {
  Id at = p.start;
  for (const auto& s : p.steps) {
    const Edge* e = g.find_edge(s);
    if (!e) throw Error(errc::malformed_input, "path uses unknown edge '" + s + "'");
    if (e->src != at) throw Error(errc::malformed_input, "path step '" + s + "' starts at '" + e->src + "', expected '" + at + "'");
    at = e->tgt;
  }
  return at;
}

inline Path concat_paths(const FinGraph& g, const Path& p, const Path& q) {
  if (path_target(g, p) != q.start)
    throw Error(errc::not_composable, "path ending at '" + path_target(g, p) + "' cannot continue at '" + q.start + "'");
  Path r = p;
  r.steps.insert(r.steps.end(), q.steps.begin(), q.steps.end());
  return r;
}

// All composable paths a -> b of length <= maxlen, in lexicographic order on
// the step sequence (so the empty path comes first when a == b).
inline std::vector<Path> enumerate_paths(const FinGraph& g, const Id& a, const Id& b, int maxlen) {
  validate_graph(g);
  if (!g.has_node(a)) throw Error(errc::unknown_node, "'" + a + "'");
  if (!g.has_node(b)) throw Error(errc::unknown_node, "'" + b + "'");
  if (maxlen < 0) throw Error(errc::malformed_input, "maxlen must be >= 0");

  std::vector<Edge> sorted = g.edges;
  std::sort(sorted.begin(), sorted.end(), [](const Edge& x, const Edge& y) { return x.id < y.id; });

  std::vector<Path> out;
  Path cur{a, {}};
  auto dfs = [&](auto&& self, const Id& at, int rem) -> void {
    if (at == b) out.push_back(cur);
    if (rem == 0) return;
    for (const auto& e : sorted) {
      if (e.src != at) continue;
      cur.steps.push_back(e.id);
      self(self, e.tgt, rem - 1);
      cur.steps.pop_back();
    }
  };
  dfs(dfs, a, maxlen);
  return out;
}

// ------------------------------------------------------------- categories

struct MorDecl {
  Id id, src, tgt;
  friend bool operator==(const MorDecl&, const MorDecl&) = default;
  friend auto operator<=>(const MorDecl&, const MorDecl&) = default;
};

struct FinCat {
  std::vector<Id> objects;
  std::vector<MorDecl> morphisms;
  std::map<Id, Id> identity;               // object -> identity morphism
  std::map<std::pair<Id, Id>, Id> table;   // (g, f) -> g . f  (tgt f = src g)

  void normalize() {
    std::sort(objects.begin(), objects.end());
    std::sort(morphisms.begin(), morphisms.end());
  }

  bool has_object(const Id& x) const { return std::find(objects.begin(), objects.end(), x) != objects.end(); }

  const MorDecl* find_morphism(const Id& m) const {
    for (const auto& d : morphisms)
      if (d.id == m) return &d;
    return nullptr;
  }

  const MorDecl& morphism(const Id& m) const {
    const MorDecl* d = find_morphism(m);
    if (!d) throw Error(errc::malformed_input, "unknown morphism '" + m + "'");
    return *d;
  }

  Id src(const Id& m) const { return morphism(m).src; }
  Id tgt(const Id& m) const { return morphism(m).tgt; }

  Id id_of(const Id& x) const {
    auto it = identity.find(x);
    if (it == identity.end()) throw Error(errc::malformed_input, "object '" + x + "' has no identity");
    return it->second;
  }

  std::vector<Id> hom(const Id& x, const Id& y) const {
    std::vector<Id> out;
    for (const auto& d : morphisms)
      if (d.src == x && d.tgt == y) out.push_back(d.id);
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const FinCat&, const FinCat&) = default;
};

using CatPtr = std::shared_ptr<const FinCat>;

inline CatPtr make_cat(FinCat c) {
  c.normalize();
  return std::make_shared<const FinCat>(std::move(c));
}

inline bool same_cat(const CatPtr& a, const CatPtr& b) { return a == b || (a && b && *a == *b); }

struct Violation {
  std::string kind;
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string kind, std::string detail) { violations.push_back({std::move(kind), std::move(detail)}); }
};

// Throws MalformedInput on duplicate or dangling ids and SizeLimitExceeded
// above the configured budget; every law failure (boundary, unit,
// associativity) becomes a report entry instead.
inline ValidationReport validate_category(const FinCat& c, const Budget& budget = Budget::from_env()) {
  budget.check_objects(c.objects.size(), "validate_category");
  budget.check_morphisms(c.morphisms.size(), "validate_category");
  {
    std::set<Id> seen;
    for (const auto& x : c.objects)
      if (!seen.insert(x).second) throw Error(errc::malformed_input, "duplicate object id '" + x + "'");
    std::set<Id> mseen;
    for (const auto& m : c.morphisms) {
      if (!mseen.insert(m.id).second) throw Error(errc::malformed_input, "duplicate morphism id '" + m.id + "'");
      if (!c.has_object(m.src)) throw Error(errc::malformed_input, "morphism '" + m.id + "' has unknown source '" + m.src + "'");
      if (!c.has_object(m.tgt)) throw Error(errc::malformed_input, "morphism '" + m.id + "' has unknown target '" + m.tgt + "'");
    }
    for (const auto& [x, i] : c.identity) {
      if (!c.has_object(x)) throw Error(errc::malformed_input, "identity declared for unknown object '" + x + "'");
      if (!mseen.count(i)) throw Error(errc::malformed_input, "identity of '" + x + "' is unknown morphism '" + i + "'");
    }
    for (const auto& [gf, h] : c.table) {
      if (!mseen.count(gf.first)) throw Error(errc::malformed_input, "compose entry uses unknown morphism '" + gf.first + "'");
      if (!mseen.count(gf.second)) throw Error(errc::malformed_input, "compose entry uses unknown morphism '" + gf.second + "'");
      if (!mseen.count(h)) throw Error(errc::malformed_input, "compose result is unknown morphism '" + h + "'");
    }
  }

  ValidationReport rep;
  for (const auto& x : c.objects) {
    auto it = c.identity.find(x);
    if (it == c.identity.end()) {
      rep.add("identity-missing", "object '" + x + "'");
      continue;
    }
    const MorDecl& m = c.morphism(it->second);
    if (m.src != x || m.tgt != x)
      rep.add("identity-boundary", "id of '" + x + "' is '" + m.id + "': " + m.src + " -> " + m.tgt);
  }

  auto entry = [&](const Id& g, const Id& f) -> const Id* {
    auto it = c.table.find({g, f});
    return it == c.table.end() ? nullptr : &it->second;
  };

  for (const auto& g : c.morphisms)
    for (const auto& f : c.morphisms) {
      const Id* h = entry(g.id, f.id);
      if (f.tgt != g.src) {
        if (h) rep.add("compose-spurious", "(" + g.id + "," + f.id + ") not composable but tabled");
        continue;
      }
      if (!h) {
        rep.add("compose-missing", "(" + g.id + "," + f.id + ")");
        continue;
      }
      const MorDecl& hm = c.morphism(*h);
      if (hm.src != f.src || hm.tgt != g.tgt)
        rep.add("compose-boundary",
                "(" + g.id + "," + f.id + ") = '" + *h + "': " + hm.src + " -> " + hm.tgt + ", expected " + f.src +
                    " -> " + g.tgt);
    }

  for (const auto& f : c.morphisms) {
    auto is = c.identity.find(f.src);
    auto it = c.identity.find(f.tgt);
    if (is != c.identity.end()) {
      const Id* h = entry(f.id, is->second);
      if (h && *h != f.id) rep.add("unit-law", "'" + f.id + "' . id_" + f.src + " = '" + *h + "'");
    }
    if (it != c.identity.end()) {
      const Id* h = entry(it->second, f.id);
      if (h && *h != f.id) rep.add("unit-law", "id_" + f.tgt + " . '" + f.id + "' = '" + *h + "'");
    }
  }

  for (const auto& h : c.morphisms)
    for (const auto& g : c.morphisms) {
      if (g.tgt != h.src) continue;
      for (const auto& f : c.morphisms) {
        if (f.tgt != g.src) continue;
        const Id* gf = entry(g.id, f.id);
        const Id* hg = entry(h.id, g.id);
        if (!gf || !hg) continue;
        const Id* l = entry(h.id, *gf);
        const Id* r = entry(*hg, f.id);
        if (l && r && *l != *r)
          rep.add("associativity", "h=" + h.id + " g=" + g.id + " f=" + f.id + ": " + *l + " != " + *r);
      }
    }

  return rep;
}

inline Id compose(const FinCat& c, const Id& g, const Id& f) {
  const MorDecl& gm = c.morphism(g);
  const MorDecl& fm = c.morphism(f);
  if (fm.tgt != gm.src)
    throw Error(errc::not_composable, "'" + g + "' . '" + f + "': " + fm.tgt + " != " + gm.src);
  auto it = c.table.find({g, f});
  if (it == c.table.end()) throw Error(errc::malformed_input, "missing compose entry (" + g + "," + f + ")");
  return it->second;
}

// Composite of a chain given in application order: ids = {m1, m2, ..., mk}
// stands for mk . ... . m2 . m1.  Empty chain yields id_at.
inline Id compose_chain(const FinCat& c, const Id& at, const std::vector<Id>& ids) {
  Id acc = c.id_of(at);
  for (const auto& m : ids) acc = compose(c, m, acc);
  return acc;
}

inline bool is_invertible(const FinCat& c, const Id& m) {
  const MorDecl& d = c.morphism(m);
  for (const auto& cand : c.hom(d.tgt, d.src))
    if (compose(c, cand, m) == c.id_of(d.src) && compose(c, m, cand) == c.id_of(d.tgt)) return true;
  return false;
}

// ---------------------------------------------------------------- functors

struct Functor {
  CatPtr dom, cod;
  std::map<Id, Id> omap;  // object map
  std::map<Id, Id> mmap;  // morphism map

  Id ob(const Id& x) const {
    auto it = omap.find(x);
    if (it == omap.end()) throw Error(errc::malformed_input, "functor undefined on object '" + x + "'");
    return it->second;
  }
  Id mor(const Id& m) const {
    auto it = mmap.find(m);
    if (it == mmap.end()) throw Error(errc::malformed_input, "functor undefined on morphism '" + m + "'");
    return it->second;
  }
};

inline bool functor_eq(const Functor& f, const Functor& g) {
  return same_cat(f.dom, g.dom) && same_cat(f.cod, g.cod) && f.omap == g.omap && f.mmap == g.mmap;
}

inline Functor identity_functor(const CatPtr& c) {
  Functor f{c, c, {}, {}};
  for (const auto& x : c->objects) f.omap[x] = x;
  for (const auto& m : c->morphisms) f.mmap[m.id] = m.id;
  return f;
}

inline Functor compose_functors(const Functor& g, const Functor& f) {
  if (!same_cat(f.cod, g.dom)) throw Error(errc::boundary_mismatch, "functor composition boundary mismatch");
  Functor h{f.dom, g.cod, {}, {}};
  for (const auto& [x, y] : f.omap) h.omap[x] = g.ob(y);
  for (const auto& [m, n] : f.mmap) h.mmap[m] = g.mor(n);
  return h;
}

// Exhaustive functoriality check: boundaries, identities, composition.
inline ValidationReport check_functor(const Functor& f) {
  ValidationReport rep;
  for (const auto& x : f.dom->objects) {
    auto it = f.omap.find(x);
    if (it == f.omap.end()) {
      rep.add("functor-object-missing", "'" + x + "'");
      continue;
    }
    if (!f.cod->has_object(it->second)) rep.add("functor-object-dangling", "'" + x + "' -> '" + it->second + "'");
  }
  for (const auto& m : f.dom->morphisms) {
    auto it = f.mmap.find(m.id);
    if (it == f.mmap.end()) {
      rep.add("functor-morphism-missing", "'" + m.id + "'");
      continue;
    }
    const MorDecl* im = f.cod->find_morphism(it->second);
    if (!im) {
      rep.add("functor-morphism-dangling", "'" + m.id + "' -> '" + it->second + "'");
      continue;
    }
    if (im->src != f.ob(m.src) || im->tgt != f.ob(m.tgt))
      rep.add("functor-boundary", "'" + m.id + "' -> '" + it->second + "'");
  }
  if (!rep.ok()) return rep;
  for (const auto& x : f.dom->objects)
    if (f.mor(f.dom->id_of(x)) != f.cod->id_of(f.ob(x))) rep.add("functor-identity", "at '" + x + "'");
  for (const auto& [gf, h] : f.dom->table) {
    Id lhs = f.mor(h);
    Id rhs = compose(*f.cod, f.mor(gf.first), f.mor(gf.second));
    if (lhs != rhs) rep.add("functor-composition", "(" + gf.first + "," + gf.second + ")");
  }
  return rep;
}

// ------------------------------------------------- natural transformations

struct NatTrans {
  Functor dom, cod;        // parallel functors
  std::map<Id, Id> at;     // object of dom category -> morphism of cod category

  Id operator()(const Id& x) const {
    auto it = at.find(x);
    if (it == at.end()) throw Error(errc::malformed_input, "transformation undefined at '" + x + "'");
    return it->second;
  }
};

inline bool nat_eq(const NatTrans& a, const NatTrans& b) { return a.at == b.at; }

inline NatTrans identity_nat(const Functor& f) {
  NatTrans t{f, f, {}};
  for (const auto& x : f.dom->objects) t.at[x] = f.cod->id_of(f.ob(x));
  return t;
}

inline ValidationReport check_nat(const NatTrans& t) {
  ValidationReport rep;
  if (!same_cat(t.dom.dom, t.cod.dom) || !same_cat(t.dom.cod, t.cod.cod)) {
    rep.add("nat-not-parallel", "");
    return rep;
  }
  const FinCat& c = *t.dom.cod;
  for (const auto& x : t.dom.dom->objects) {
    auto it = t.at.find(x);
    if (it == t.at.end()) {
      rep.add("nat-component-missing", "'" + x + "'");
      continue;
    }
    const MorDecl* m = c.find_morphism(it->second);
    if (!m || m->src != t.dom.ob(x) || m->tgt != t.cod.ob(x)) rep.add("nat-boundary", "at '" + x + "'");
  }
  if (!rep.ok()) return rep;
  for (const auto& m : t.dom.dom->morphisms) {
    Id lhs = compose(c, t(m.tgt), t.dom.mor(m.id));
    Id rhs = compose(c, t.cod.mor(m.id), t(m.src));
    if (lhs != rhs) rep.add("nat-naturality", "at '" + m.id + "'");
  }
  return rep;
}

inline NatTrans vcompose(const NatTrans& b, const NatTrans& a) {
  if (!functor_eq(a.cod, b.dom)) throw Error(errc::boundary_mismatch, "vertical composition boundary mismatch");
  NatTrans t{a.dom, b.cod, {}};
  for (const auto& x : a.dom.dom->objects) t.at[x] = compose(*a.dom.cod, b(x), a(x));
  return t;
}

// H . a : H F => H G for a : F => G, H out of the shared codomain.
inline NatTrans whisker_left(const Functor& h, const NatTrans& a) {
  NatTrans t{compose_functors(h, a.dom), compose_functors(h, a.cod), {}};
  for (const auto& [x, m] : a.at) t.at[x] = h.mor(m);
  return t;
}

// a . K : F K => G K for a : F => G, K into the shared domain.
inline NatTrans whisker_right(const NatTrans& a, const Functor& k) {
  NatTrans t{compose_functors(a.dom, k), compose_functors(a.cod, k), {}};
  for (const auto& x : k.dom->objects) t.at[x] = a(k.ob(x));
  return t;
}

// ------------------------------------------------------------ enumeration

namespace detail {

inline std::string serialize_map(const std::map<Id, Id>& m) {
  std::string s;
  for (const auto& [k, v] : m) s += escape_id(k) + ">" + escape_id(v) + ";";
  return s;
}

inline std::string functor_key(const Functor& f) {
  return serialize_map(f.omap) + "|" + serialize_map(f.mmap);
}

inline std::string padded_index(std::size_t i, std::size_t total) {
  std::size_t width = 1;
  for (std::size_t t = total > 0 ? total - 1 : 0; t >= 10; t /= 10) ++width;
  std::string s = std::to_string(i);
  while (s.size() < width) s.insert(s.begin(), '0');
  return s;
}

}  // namespace detail

// All functors a -> b in lexicographic order of their graph.
inline std::vector<Functor> enumerate_functors(const CatPtr& a, const CatPtr& b, const Budget& budget = Budget::from_env()) {
  {
    // refuse |b|^|a| object maps up front instead of grinding through them
    double est = 1;
    for (std::size_t i = 0; i < a->objects.size() && est <= budget.max_morphisms; ++i)
      est *= static_cast<double>(std::max<std::size_t>(b->objects.size(), 1));
    if (est > budget.max_morphisms)
      throw Error(errc::size_limit_exceeded, "enumerate_functors: object-map space exceeds budget");
  }
  std::vector<Functor> out;
  std::vector<Id> aobj = a->objects;  // normalized: already sorted
  std::vector<MorDecl> nonid;
  std::set<Id> ids;
  for (const auto& [x, i] : a->identity) ids.insert(i);
  for (const auto& m : a->morphisms)
    if (!ids.count(m.id)) nonid.push_back(m);

  std::map<Id, Id> omap, mmap;

  auto morph_backtrack = [&](auto&& self, std::size_t k) -> void {
    if (k == nonid.size()) {
      Functor f{a, b, omap, mmap};
      for (const auto& x : aobj) f.mmap[a->id_of(x)] = b->id_of(omap.at(x));
      if (check_functor(f).ok()) out.push_back(std::move(f));
      return;
    }
    const MorDecl& m = nonid[k];
    for (const auto& cand : b->hom(omap.at(m.src), omap.at(m.tgt))) {
      mmap[m.id] = cand;
      self(self, k + 1);
      mmap.erase(m.id);
    }
  };

  auto obj_backtrack = [&](auto&& self, std::size_t k) -> void {
    if (k == aobj.size()) {
      morph_backtrack(morph_backtrack, 0);
      return;
    }
    for (const auto& y : b->objects) {
      omap[aobj[k]] = y;
      self(self, k + 1);
      omap.erase(aobj[k]);
    }
  };

  obj_backtrack(obj_backtrack, 0);
  budget.check_objects(out.size(), "enumerate_functors");
  return out;
}

// All natural transformations f => g in lexicographic component order.
inline std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g) {
  std::vector<NatTrans> out;
  const std::vector<Id>& obj = f.dom->objects;
  const FinCat& c = *f.cod;
  std::map<Id, Id> at;

  auto natural_so_far = [&](std::size_t k) {
    for (const auto& m : f.dom->morphisms) {
      auto is = at.find(m.src);
      auto it = at.find(m.tgt);
      if (is == at.end() || it == at.end()) continue;
      if (compose(c, it->second, f.mor(m.id)) != compose(c, g.mor(m.id), is->second)) return false;
    }
    (void)k;
    return true;
  };

  auto backtrack = [&](auto&& self, std::size_t k) -> void {
    if (k == obj.size()) {
      out.push_back(NatTrans{f, g, at});
      return;
    }
    for (const auto& cand : c.hom(f.ob(obj[k]), g.ob(obj[k]))) {
      at[obj[k]] = cand;
      if (natural_so_far(k)) self(self, k + 1);
      at.erase(obj[k]);
    }
  };
  backtrack(backtrack, 0);
  return out;
}

// The category of functors a -> b with natural transformations as morphisms,
// together with the dictionaries back to the enumerated data.
struct FunctorCategory {
  CatPtr cat;
  std::vector<Functor> objects;    // index aligned with object ids
  std::vector<NatTrans> morphisms; // index aligned with morphism ids
  std::map<Id, std::size_t> object_index;
  std::map<Id, std::size_t> morphism_index;
  std::map<std::string, Id> nat_index;  // (dom key, cod key, components) -> morphism id

  static std::string nat_key(const NatTrans& t) {
    return detail::functor_key(t.dom) + "=>" + detail::functor_key(t.cod) + "|" + detail::serialize_map(t.at);
  }

  const Functor& functor_of(const Id& obj) const { return objects.at(object_index.at(obj)); }
  const NatTrans& nat_of(const Id& mor) const { return morphisms.at(morphism_index.at(mor)); }

  // Morphism id of a transformation with the given boundary and components.
  Id id_of_nat(const NatTrans& t) const {
    auto it = nat_index.find(nat_key(t));
    if (it == nat_index.end()) throw Error(errc::invalid_input, "transformation not found in functor category");
    return it->second;
  }
};

inline FunctorCategory functor_category(const CatPtr& a, const CatPtr& b, const Budget& budget = Budget::from_env()) {
  FunctorCategory fc;
  fc.objects = enumerate_functors(a, b, budget);
  std::sort(fc.objects.begin(), fc.objects.end(),
            [](const Functor& x, const Functor& y) { return detail::functor_key(x) < detail::functor_key(y); });

  FinCat c;
  for (std::size_t i = 0; i < fc.objects.size(); ++i) {
    Id oid = "F" + detail::padded_index(i, fc.objects.size());
    c.objects.push_back(oid);
    fc.object_index[oid] = i;
  }

  struct Pending {
    std::size_t si, ti;
    NatTrans t;
  };
  std::vector<Pending> pend;
  for (std::size_t si = 0; si < fc.objects.size(); ++si)
    for (std::size_t ti = 0; ti < fc.objects.size(); ++ti)
      for (auto& t : enumerate_nat_trans(fc.objects[si], fc.objects[ti])) pend.push_back({si, ti, std::move(t)});
  budget.check_morphisms(pend.size(), "functor_category");

  std::map<std::pair<std::pair<std::size_t, std::size_t>, std::string>, Id> lookup;
  for (std::size_t k = 0; k < pend.size(); ++k) {
    Id mid = "t" + detail::padded_index(k, pend.size());
    Id sobj = "F" + detail::padded_index(pend[k].si, fc.objects.size());
    Id tobj = "F" + detail::padded_index(pend[k].ti, fc.objects.size());
    c.morphisms.push_back({mid, sobj, tobj});
    fc.morphisms.push_back(pend[k].t);
    fc.morphism_index[mid] = k;
    fc.nat_index[FunctorCategory::nat_key(pend[k].t)] = mid;
    lookup[{{pend[k].si, pend[k].ti}, detail::serialize_map(pend[k].t.at)}] = mid;
  }

  for (std::size_t i = 0; i < fc.objects.size(); ++i) {
    NatTrans idt = identity_nat(fc.objects[i]);
    c.identity["F" + detail::padded_index(i, fc.objects.size())] = lookup.at({{i, i}, detail::serialize_map(idt.at)});
  }

  for (std::size_t gi = 0; gi < pend.size(); ++gi)
    for (std::size_t fi = 0; fi < pend.size(); ++fi) {
      if (pend[fi].ti != pend[gi].si) continue;
      NatTrans comp = vcompose(pend[gi].t, pend[fi].t);
      Id gid = "t" + detail::padded_index(gi, pend.size());
      Id fid = "t" + detail::padded_index(fi, pend.size());
      c.table[{gid, fid}] = lookup.at({{pend[fi].si, pend[gi].ti}, detail::serialize_map(comp.at)});
    }

  fc.cat = make_cat(std::move(c));
  return fc;
}

// ---------------------------------------------------------------- limits

struct Cone {
  Id apex;
  std::map<Id, Id> legs;  // object of the shape -> morphism of the target
  friend bool operator==(const Cone&, const Cone&) = default;
};

inline std::vector<Cone> enumerate_cones(const Functor& d) {
  const FinCat& j = *d.dom;
  const FinCat& c = *d.cod;
  std::vector<Cone> out;
  for (const auto& apex : c.objects) {
    std::map<Id, Id> legs;
    auto ok_so_far = [&]() {
      for (const auto& m : j.morphisms) {
        auto is = legs.find(m.src);
        auto it = legs.find(m.tgt);
        if (is == legs.end() || it == legs.end()) continue;
        if (compose(c, d.mor(m.id), is->second) != it->second) return false;
      }
      return true;
    };
    auto backtrack = [&](auto&& self, std::size_t k) -> void {
      if (k == j.objects.size()) {
        out.push_back(Cone{apex, legs});
        return;
      }
      const Id& jx = j.objects[k];
      for (const auto& leg : c.hom(apex, d.ob(jx))) {
        legs[jx] = leg;
        if (ok_so_far()) self(self, k + 1);
        legs.erase(jx);
      }
    };
    backtrack(backtrack, 0);
  }
  return out;
}

// Morphisms u : from.apex -> to.apex with to.legs . u = from.legs.
inline std::vector<Id> cone_factorizations(const Functor& d, const Cone& to, const Cone& from) {
  const FinCat& c = *d.cod;
  std::vector<Id> out;
  for (const auto& u : c.hom(from.apex, to.apex)) {
    bool ok = true;
    for (const auto& [jx, leg] : to.legs)
      if (compose(c, leg, u) != from.legs.at(jx)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(u);
  }
  return out;
}

// Limiting cone of a finite diagram, verified universal against every
// competing cone; nullopt when no cone is universal.
inline std::optional<Cone> limit(const Functor& d) {
  std::vector<Cone> cones = enumerate_cones(d);
  for (const auto& cand : cones) {
    bool universal = true;
    for (const auto& other : cones)
      if (cone_factorizations(d, cand, other).size() != 1) {
        universal = false;
        break;
      }
    if (universal) return cand;
  }
  return std::nullopt;
}

// ------------------------------------------------------- Kan extensions

namespace detail {

struct CommaCategory {
  CatPtr cat;
  // comma object id -> (object of A, morphism b -> k(a) of B)
  std::map<Id, std::pair<Id, Id>> decode;
};

// The comma category (b | k) for k : A -> B.
inline CommaCategory comma_under(const Functor& k, const Id& b) {
  const FinCat& acat = *k.dom;
  const FinCat& bcat = *k.cod;
  CommaCategory cc;
  FinCat c;
  std::vector<std::pair<Id, Id>> objs;
  for (const auto& a : acat.objects)
    for (const auto& m : bcat.hom(b, k.ob(a))) objs.push_back({a, m});
  std::sort(objs.begin(), objs.end());
  for (const auto& [a, m] : objs) {
    Id oid = combine_ids({a, m});
    c.objects.push_back(oid);
    cc.decode[oid] = {a, m};
  }
  for (const auto& [sid, sdec] : cc.decode)
    for (const auto& [tid, tdec] : cc.decode)
      for (const auto& u : acat.hom(sdec.first, tdec.first))
        if (compose(bcat, k.mor(u), sdec.second) == tdec.second)
          c.morphisms.push_back({combine_ids({u, sid, tid}), sid, tid});
  for (const auto& [oid, dec] : cc.decode) c.identity[oid] = combine_ids({acat.id_of(dec.first), oid, oid});
  for (const auto& g : c.morphisms)
    for (const auto& f : c.morphisms) {
      if (f.tgt != g.src) continue;
      // recover the A-morphisms from the combined ids
      // stored as (u, src, tgt); decode by splitting is avoided: recompute
      // from decode maps instead.
      // Composition in the comma category is composition in A.
      // Find u for f and g by searching A-homs again.
      // (ids are injective, so this lookup is unambiguous)
      Id fu, gu;
      for (const auto& u : acat.hom(cc.decode.at(f.src).first, cc.decode.at(f.tgt).first))
        if (combine_ids({u, f.src, f.tgt}) == f.id) fu = u;
      for (const auto& u : acat.hom(cc.decode.at(g.src).first, cc.decode.at(g.tgt).first))
        if (combine_ids({u, g.src, g.tgt}) == g.id) gu = u;
      c.table[{g.id, f.id}] = combine_ids({compose(acat, gu, fu), f.src, g.tgt});
    }
  cc.cat = make_cat(std::move(c));
  return cc;
}

}  // namespace detail

struct RightKan {
  Functor ran;      // Ran_k f : B -> C
  NatTrans counit;  // (Ran_k f) . k => f
};

// Pointwise right Kan extension: Ran_k f (b) = lim of the (b | k)-diagram.
// Returns nullopt when some pointwise limit is missing.
inline std::optional<RightKan> right_kan_extension(const Functor& k, const Functor& f) {
  if (!same_cat(k.dom, f.dom)) throw Error(errc::boundary_mismatch, "Kan extension: functors must share their domain");
  const CatPtr& bcat = k.cod;
  const CatPtr& ccat = f.cod;

  std::map<Id, detail::CommaCategory> commas;
  std::map<Id, Cone> cones;
  Functor ran{bcat, ccat, {}, {}};
  for (const auto& b : bcat->objects) {
    detail::CommaCategory cc = detail::comma_under(k, b);
    Functor diag{cc.cat, ccat, {}, {}};
    for (const auto& [oid, dec] : cc.decode) diag.omap[oid] = f.ob(dec.first);
    for (const auto& m : cc.cat->morphisms) {
      // morphism of the comma category projects to its A-morphism
      Id u;
      const auto& sdec = cc.decode.at(m.src);
      const auto& tdec = cc.decode.at(m.tgt);
      for (const auto& cand : k.dom->hom(sdec.first, tdec.first))
        if (combine_ids({cand, m.src, m.tgt}) == m.id) u = cand;
      diag.mmap[m.id] = f.mor(u);
    }
    std::optional<Cone> lim = limit(diag);
    if (!lim) return std::nullopt;
    ran.omap[b] = lim->apex;
    cones[b] = *lim;
    commas.emplace(b, std::move(cc));
  }

  for (const auto& beta : bcat->morphisms) {
    const Cone& src_cone = cones.at(beta.src);
    const Cone& tgt_cone = cones.at(beta.tgt);
    const detail::CommaCategory& tgt_comma = commas.at(beta.tgt);
    // Restrict the source cone along (a, m) -> (a, m . beta) and factor.
    Cone restricted{src_cone.apex, {}};
    for (const auto& [oid, dec] : tgt_comma.decode) {
      Id pulled = compose(*bcat, dec.second, beta.id);
      restricted.legs[oid] = src_cone.legs.at(combine_ids({dec.first, pulled}));
    }
    Functor tgt_diag{tgt_comma.cat, ccat, {}, {}};
    for (const auto& [oid, dec] : tgt_comma.decode) tgt_diag.omap[oid] = f.ob(dec.first);
    for (const auto& m : tgt_comma.cat->morphisms) {
      Id u;
      const auto& sdec = tgt_comma.decode.at(m.src);
      const auto& tdec = tgt_comma.decode.at(m.tgt);
      for (const auto& cand : k.dom->hom(sdec.first, tdec.first))
        if (combine_ids({cand, m.src, m.tgt}) == m.id) u = cand;
      tgt_diag.mmap[m.id] = f.mor(u);
    }
    std::vector<Id> us = cone_factorizations(tgt_diag, tgt_cone, restricted);
    if (us.size() != 1) throw Error(errc::invalid_input, "limit factorization not unique in Kan extension");
    ran.mmap[beta.id] = us.front();
  }

  ValidationReport rep = check_functor(ran);
  if (!rep.ok()) throw Error(errc::invalid_input, "Kan extension produced a non-functor");

  NatTrans counit{compose_functors(ran, k), f, {}};
  for (const auto& a : k.dom->objects) {
    Id b = k.ob(a);
    counit.at[a] = cones.at(b).legs.at(combine_ids({a, bcat->id_of(b)}));
  }
  if (!check_nat(counit).ok()) throw Error(errc::invalid_input, "Kan counit is not natural");

  return RightKan{std::move(ran), std::move(counit)};
}

// ------------------------------------------------------------ iso search

struct Isomorphism {
  Functor fwd, bwd;
};

// Backtracking search over object bijections respecting hom-set cardinality,
// then morphism bijections checked against both composition tables.
// Exhaustive at these sizes; nullopt means no isomorphism exists.
inline std::optional<Isomorphism> iso_search(const CatPtr& a, const CatPtr& b, const Budget& budget = Budget::from_env()) {
  budget.check_objects(a->objects.size(), "iso_search");
  budget.check_morphisms(a->morphisms.size(), "iso_search");
  if (a->objects.size() != b->objects.size() || a->morphisms.size() != b->morphisms.size()) return std::nullopt;

  const std::vector<Id>& aobj = a->objects;
  std::map<Id, Id> sigma;
  std::set<Id> used_obj;

  std::map<Id, Id> tau;
  std::set<Id> used_mor;

  auto hom_sizes_match = [&](const Id& x, const Id& y) {
    for (const auto& [ax, bx] : sigma) {
      if (a->hom(x, ax).size() != b->hom(y, bx).size()) return false;
      if (a->hom(ax, x).size() != b->hom(bx, y).size()) return false;
    }
    return a->hom(x, x).size() == b->hom(y, y).size();
  };

  std::vector<MorDecl> nonid;
  std::set<Id> idset;
  for (const auto& [x, i] : a->identity) idset.insert(i);
  for (const auto& m : a->morphisms)
    if (!idset.count(m.id)) nonid.push_back(m);

  auto full_check = [&]() {
    for (const auto& [gf, h] : a->table)
      if (b->table.at({tau.at(gf.first), tau.at(gf.second)}) != tau.at(h)) return false;
    return true;
  };

  std::optional<Isomorphism> found;

  auto mor_backtrack = [&](auto&& self, std::size_t k) -> void {
    if (found) return;
    if (k == nonid.size()) {
      if (!full_check()) return;
      Functor fwd{a, b, sigma, tau};
      Functor bwd{b, a, {}, {}};
      for (const auto& [x, y] : sigma) bwd.omap[y] = x;
      for (const auto& [m, n] : tau) bwd.mmap[n] = m;
      found = Isomorphism{std::move(fwd), std::move(bwd)};
      return;
    }
    const MorDecl& m = nonid[k];
    for (const auto& cand : b->hom(sigma.at(m.src), sigma.at(m.tgt))) {
      if (used_mor.count(cand)) continue;
      tau[m.id] = cand;
      used_mor.insert(cand);
      self(self, k + 1);
      used_mor.erase(cand);
      tau.erase(m.id);
      if (found) return;
    }
  };

  auto obj_backtrack = [&](auto&& self, std::size_t k) -> void {
    if (found) return;
    if (k == aobj.size()) {
      tau.clear();
      used_mor.clear();
      for (const auto& [x, y] : sigma) {
        tau[a->id_of(x)] = b->id_of(y);
        used_mor.insert(b->id_of(y));
      }
      mor_backtrack(mor_backtrack, 0);
      return;
    }
    for (const auto& y : b->objects) {
      if (used_obj.count(y)) continue;
      sigma[aobj[k]] = y;
      if (hom_sizes_match(aobj[k], y)) {
        used_obj.insert(y);
        self(self, k + 1);
        used_obj.erase(y);
      }
      sigma.erase(aobj[k]);
      if (found) return;
    }
  };

  obj_backtrack(obj_backtrack, 0);
  return found;
}

}  // namespace catkit::fincat

#endif
