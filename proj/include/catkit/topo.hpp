#ifndef CATKIT_TOPO_HPP
#define CATKIT_TOPO_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "catkit/core.hpp"
#include "catkit/present.hpp"
#include "catkit/snf.hpp"

// Combinatorial realization of computads as 2-dimensional CW-complexes, with
// Euler characteristic, integer homology and fundamental-groupoid
// presentations.  No point-set topology: cell data only.
namespace catkit::topo {

using catkit::Error;
using catkit::Id;
using catkit::errc;
using catkit::fincat::Edge;
using catkit::fincat::FinGraph;
using catkit::present::Computad2;
using catkit::present::ComponentGroup;
using catkit::present::Letter;
using catkit::present::Presentation;
using catkit::present::Word;

struct Cell2 {
  Id id;
  Id at;  // basepoint vertex of the boundary walk
  std::vector<Letter> boundary;
  friend bool operator==(const Cell2&, const Cell2&) = default;
};

struct CWComplex2 {
  std::vector<Id> cells0;
  std::vector<Edge> cells1;
  std::vector<Cell2> cells2;
  friend bool operator==(const CWComplex2&, const CWComplex2&) = default;

  FinGraph skeleton() const {
    FinGraph g;
    g.nodes = cells0;
    g.edges = cells1;
    return g;
  }
};

inline void validate_complex(const CWComplex2& x) {
  FinGraph g = x.skeleton();
  catkit::fincat::validate_graph(g);
  std::set<Id> seen;
  for (const auto& f : x.cells2) {
    if (!seen.insert(f.id).second) throw Error(errc::malformed_input, "duplicate 2-cell id '" + f.id + "'");
    Word w{f.at, f.boundary};
    if (word_end(g, w) != f.at) throw Error(errc::malformed_input, "boundary of '" + f.id + "' is not a closed walk");
  }
}

// Free reduction followed by cyclic reduction; the basepoint follows the
// trimmed letters.
inline std::pair<Id, std::vector<Letter>> cyclically_reduce(const FinGraph& g, const Word& w) {
  Word r = catkit::present::reduce_word(w);
  Id at = r.start;
  while (r.letters.size() >= 2 && r.letters.front().edge == r.letters.back().edge &&
         r.letters.front().dir == -r.letters.back().dir) {
    const Edge* e = g.find_edge(r.letters.front().edge);
    at = r.letters.front().dir == 1 ? e->tgt : e->src;
    r.letters.erase(r.letters.begin());
    r.letters.pop_back();
    r.start = at;
  }
  return {at, r.letters};
}

// F_Top2 on cells: vertices from nodes, 1-cells from edges, one 2-cell per
// relation with boundary word lhs . rhs^-1, reduced.  Relation-free
// computads land in the image of F_Top1.
inline CWComplex2 realize2(const Computad2& c) {
  catkit::present::validate_computad(c);
  CWComplex2 x;
  x.cells0 = c.graph.nodes;
  x.cells1 = c.graph.edges;
  std::sort(x.cells0.begin(), x.cells0.end());
  std::sort(x.cells1.begin(), x.cells1.end());
  for (const auto& r : c.relations) {
    Word glue{r.lhs.start, r.lhs.letters};
    Word rinv = catkit::present::invert_word(c.graph, r.rhs);
    glue.letters.insert(glue.letters.end(), rinv.letters.begin(), rinv.letters.end());
    auto [at, letters] = cyclically_reduce(c.graph, glue);
    x.cells2.push_back({r.id, at, letters});
  }
  std::sort(x.cells2.begin(), x.cells2.end(), [](const Cell2& a, const Cell2& b) { return a.id < b.id; });
  return x;
}

struct EulerResult {
  std::vector<std::pair<Id, long long>> per_component;  // least vertex -> chi
  long long total = 0;
};

inline EulerResult euler_characteristic(const CWComplex2& x) {
  validate_complex(x);
  std::map<Id, Id> comp = catkit::present::detail::graph_components(x.skeleton());
  std::map<Id, long long> chi;
  for (const auto& v : x.cells0) chi[comp.at(v)] += 1;
  for (const auto& e : x.cells1) chi[comp.at(e.src)] -= 1;
  for (const auto& f : x.cells2) chi[comp.at(f.at)] += 1;
  EulerResult out;
  for (const auto& [c, v] : chi) {
    out.per_component.push_back({c, v});
    out.total += v;
  }
  return out;
}

struct HomologyResult {
  long long h0_rank = 0;
  ComponentGroup h1_total;                    // component field unused ("")
  std::vector<ComponentGroup> h1_by_component;
};

namespace detail {

struct BoundaryMatrices {
  std::vector<Id> vertices, edges, faces;
  IntMatrix d1;  // vertices x edges
  IntMatrix d2;  // edges x faces
};

inline BoundaryMatrices boundary_matrices(const CWComplex2& x, const std::set<Id>& vertex_filter) {
  BoundaryMatrices b;
  for (const auto& v : x.cells0)
    if (vertex_filter.empty() || vertex_filter.count(v)) b.vertices.push_back(v);
  for (const auto& e : x.cells1)
    if (vertex_filter.empty() || vertex_filter.count(e.src)) b.edges.push_back(e.id);
  for (const auto& f : x.cells2)
    if (vertex_filter.empty() || vertex_filter.count(f.at)) b.faces.push_back(f.id);
  std::sort(b.vertices.begin(), b.vertices.end());
  std::sort(b.edges.begin(), b.edges.end());
  std::sort(b.faces.begin(), b.faces.end());

  auto vix = [&](const Id& v) {
    return static_cast<int>(std::lower_bound(b.vertices.begin(), b.vertices.end(), v) - b.vertices.begin());
  };
  auto eix = [&](const Id& e) {
    return static_cast<int>(std::lower_bound(b.edges.begin(), b.edges.end(), e) - b.edges.begin());
  };

  b.d1 = IntMatrix(static_cast<int>(b.vertices.size()), static_cast<int>(b.edges.size()));
  for (const auto& e : x.cells1) {
    if (!vertex_filter.empty() && !vertex_filter.count(e.src)) continue;
    b.d1.at(vix(e.tgt), eix(e.id)) = checked_add(b.d1.at(vix(e.tgt), eix(e.id)), 1);
    b.d1.at(vix(e.src), eix(e.id)) = checked_add(b.d1.at(vix(e.src), eix(e.id)), -1);
  }
  b.d2 = IntMatrix(static_cast<int>(b.edges.size()), static_cast<int>(b.faces.size()));
  int fi = 0;
  for (const auto& fid : b.faces) {
    const Cell2* cell = nullptr;
    for (const auto& f : x.cells2)
      if (f.id == fid) cell = &f;
    for (const auto& l : cell->boundary)
      b.d2.at(eix(l.edge), fi) = checked_add(b.d2.at(eix(l.edge), fi), l.dir);
    ++fi;
  }
  return b;
}

inline ComponentGroup h1_of(const BoundaryMatrices& b, const Id& component) {
  SNFResult s1 = smith_normal_form(b.d1);
  SNFResult s2 = smith_normal_form(b.d2);
  ComponentGroup g;
  g.component = component;
  g.rank = static_cast<long long>(b.edges.size()) - s1.rank - s2.rank;
  for (long long d : s2.diagonal)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

}  // namespace detail

// H0 rank and H1 = ker d1 / im d2 by Smith normal form; the quotient's
// torsion is read off SNF(d2) because ker d1 is a direct summand of the
// edge lattice.
inline HomologyResult homology(const CWComplex2& x) {
  validate_complex(x);
  std::map<Id, Id> comp = catkit::present::detail::graph_components(x.skeleton());
  std::set<Id> comp_ids;
  for (const auto& [v, c] : comp) comp_ids.insert(c);

  HomologyResult out;
  out.h0_rank = static_cast<long long>(comp_ids.size());
  detail::BoundaryMatrices global = detail::boundary_matrices(x, {});
  out.h1_total = detail::h1_of(global, "");

  for (const auto& cid : comp_ids) {
    std::set<Id> verts;
    for (const auto& [v, c] : comp)
      if (c == cid) verts.insert(v);
    out.h1_by_component.push_back(detail::h1_of(detail::boundary_matrices(x, verts), cid));
  }
  return out;
}

// Groupoidal presentation of the fundamental groupoid: all vertices stay as
// objects, all 1-cells as generators, one relation per 2-cell.  Spanning
// edges are not collapsed: the contract is equivalence, not isomorphism.
inline Presentation fundamental_groupoid_presentation(const CWComplex2& x) {
  validate_complex(x);
  Computad2 c;
  c.graph = x.skeleton();
  c.groupoidal = true;
  for (const auto& f : x.cells2) c.relations.push_back({f.id, Word{f.at, f.boundary}, Word{f.at, {}}});
  return catkit::present::make_presentation(std::move(c));
}

}  // namespace catkit::topo

// The chi < 1 criterion is one-directional, and this artifact applies it per
// connected component of the realization.
namespace catkit::present {

inline Thinness thinness_obstruction(const Presentation& p) {
  if (!p.computad.groupoidal) throw Error(errc::not_groupoidal, "thinness_obstruction needs a groupoidal presentation");
  catkit::topo::EulerResult chi = catkit::topo::euler_characteristic(catkit::topo::realize2(p.computad));
  for (const auto& [c, v] : chi.per_component)
    if (v < 1) return Thinness::NotThin;
  return Thinness::Inconclusive;
}

}  // namespace catkit::present

#endif
