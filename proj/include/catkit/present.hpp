#ifndef CATKIT_PRESENT_HPP
#define CATKIT_PRESENT_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "catkit/core.hpp"
#include "catkit/fincat.hpp"
#include "catkit/snf.hpp"

// Computads and presentations of categories and groupoids: the free case,
// coinserters, the bounded word problem and deficiency.
namespace catkit::present {

using catkit::Error;
using catkit::Id;
using catkit::errc;
using catkit::fincat::Edge;
using catkit::fincat::FinGraph;
using catkit::fincat::Functor;

// ------------------------------------------------------------------ words

struct Letter {
  Id edge;
  int dir = 1;  // +1 forward, -1 inverse (groupoidal only)
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct Word {
  Id start;
  std::vector<Letter> letters;
  friend bool operator==(const Word&, const Word&) = default;
};

inline Id word_end(const FinGraph& g, const Word& w) {
  Id at = w.start;
  for (const auto& l : w.letters) {
    const Edge* e = g.find_edge(l.edge);
    if (!e) throw Error(errc::malformed_input, "word uses unknown edge '" + l.edge + "'");
    if (l.dir == 1) {
      if (e->src != at) throw Error(errc::malformed_input, "letter '" + l.edge + "' not composable at '" + at + "'");
      at = e->tgt;
    } else {
      if (e->tgt != at) throw Error(errc::malformed_input, "letter '" + l.edge + "^-1' not composable at '" + at + "'");
      at = e->src;
    }
  }
  return at;
}

inline void validate_word(const FinGraph& g, const Word& w, bool groupoidal) {
  if (!g.has_node(w.start)) throw Error(errc::unknown_node, "'" + w.start + "'");
  for (const auto& l : w.letters) {
    if (l.dir != 1 && l.dir != -1) throw Error(errc::malformed_input, "letter orientation must be +1 or -1");
    if (l.dir == -1 && !groupoidal)
      throw Error(errc::malformed_input, "inverse letter '" + l.edge + "' in a non-groupoidal word");
  }
  word_end(g, w);
}

// Free reduction: cancel adjacent e e^-1 pairs until none remain.
inline Word reduce_word(const Word& w) {
  Word r{w.start, {}};
  for (const auto& l : w.letters) {
    if (!r.letters.empty() && r.letters.back().edge == l.edge && r.letters.back().dir == -l.dir)
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

inline Word invert_word(const FinGraph& g, const Word& w) {
  Word r{word_end(g, w), {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back({it->edge, -it->dir});
  return r;
}

inline std::string word_key(const Word& w) {
  std::string s = escape_id(w.start) + "!";
  for (const auto& l : w.letters) s += (l.dir == 1 ? "+" : "-") + escape_id(l.edge) + ".";
  return s;
}

// -------------------------------------------------------------- computads

struct Relation {
  Id id;
  Word lhs, rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Computad2 {
  FinGraph graph;
  bool groupoidal = false;
  std::vector<Relation> relations;
  friend bool operator==(const Computad2&, const Computad2&) = default;
};

struct Presentation {
  Computad2 computad;
  int bound = 0;  // saturation cap for the word engine
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

inline void validate_computad(const Computad2& c) {
  catkit::fincat::validate_graph(c.graph);
  std::set<Id> seen;
  for (const auto& r : c.relations) {
    if (!seen.insert(r.id).second) throw Error(errc::malformed_input, "duplicate relation id '" + r.id + "'");
    validate_word(c.graph, r.lhs, c.groupoidal);
    validate_word(c.graph, r.rhs, c.groupoidal);
    if (r.lhs.start != r.rhs.start || word_end(c.graph, r.lhs) != word_end(c.graph, r.rhs))
      throw Error(errc::not_parallel, "relation '" + r.id + "' has non-parallel sides");
  }
}

// Relation words are kept freely reduced in groupoidal mode.
inline Computad2 normalize_computad(Computad2 c) {
  c.graph.normalize();
  if (c.groupoidal)
    for (auto& r : c.relations) {
      r.lhs = reduce_word(r.lhs);
      r.rhs = reduce_word(r.rhs);
    }
  std::sort(c.relations.begin(), c.relations.end(), [](const Relation& a, const Relation& b) { return a.id < b.id; });
  return c;
}

inline int max_relation_length(const Computad2& c) {
  std::size_t m = 0;
  for (const auto& r : c.relations) m = std::max({m, r.lhs.letters.size(), r.rhs.letters.size()});
  return static_cast<int>(m);
}

inline Presentation make_presentation(Computad2 c, std::optional<int> bound = std::nullopt) {
  c = normalize_computad(std::move(c));
  validate_computad(c);
  int b = bound.value_or(max_relation_length(c));
  if (b < max_relation_length(c)) throw Error(errc::malformed_input, "bound smaller than a relation side");
  return Presentation{std::move(c), b};
}

inline Presentation presentation_from_graph(const FinGraph& g, bool groupoidal) {
  Computad2 c;
  c.graph = g;
  c.groupoidal = groupoidal;
  return make_presentation(std::move(c));
}

// ------------------------------------------------------------ word engine

enum class WordVerdict { Equal, Distinct, Unknown };

inline const char* to_string(WordVerdict v) {
  switch (v) {
    case WordVerdict::Equal: return "Equal";
    case WordVerdict::Distinct: return "Distinct";
    case WordVerdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace detail {

// Edge coefficient vector of a word (+1 per forward, -1 per inverse letter).
inline std::vector<long long> word_vector(const std::vector<Id>& edge_order, const Word& w) {
  std::vector<long long> v(edge_order.size(), 0);
  for (const auto& l : w.letters) {
    auto it = std::lower_bound(edge_order.begin(), edge_order.end(), l.edge);
    v[static_cast<std::size_t>(it - edge_order.begin())] += l.dir;
  }
  return v;
}

inline std::vector<Id> sorted_edge_ids(const FinGraph& g) {
  std::vector<Id> out;
  for (const auto& e : g.edges) out.push_back(e.id);
  std::sort(out.begin(), out.end());
  return out;
}

// Sound separation: words congruent under the relations have coefficient
// vectors that differ by an integer combination of relation vectors.
inline bool abelianization_separates(const Presentation& p, const Word& w1, const Word& w2) {
  std::vector<Id> edges = sorted_edge_ids(p.computad.graph);
  std::vector<long long> v1 = word_vector(edges, w1);
  std::vector<long long> v2 = word_vector(edges, w2);
  std::vector<long long> diff(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) diff[i] = v1[i] - v2[i];

  catkit::topo::IntMatrix m(static_cast<int>(edges.size()), static_cast<int>(p.computad.relations.size()));
  for (std::size_t r = 0; r < p.computad.relations.size(); ++r) {
    std::vector<long long> lv = word_vector(edges, p.computad.relations[r].lhs);
    std::vector<long long> rv = word_vector(edges, p.computad.relations[r].rhs);
    for (std::size_t i = 0; i < edges.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(r)) = lv[i] - rv[i];
  }
  return !catkit::topo::lattice_contains(m, diff);
}

struct RewriteRule {
  Word pattern, replacement;
};

inline std::vector<RewriteRule> rewrite_rules(const Computad2& c) {
  std::vector<RewriteRule> rules;
  for (const auto& r : c.relations) {
    rules.push_back({r.lhs, r.rhs});
    rules.push_back({r.rhs, r.lhs});
    if (c.groupoidal) {
      Word li = reduce_word(invert_word(c.graph, r.lhs));
      Word ri = reduce_word(invert_word(c.graph, r.rhs));
      rules.push_back({li, ri});
      rules.push_back({ri, li});
    }
  }
  return rules;
}

inline std::vector<Id> nodes_along(const FinGraph& g, const Word& w) {
  std::vector<Id> ns{w.start};
  Id at = w.start;
  for (const auto& l : w.letters) {
    const Edge* e = g.find_edge(l.edge);
    at = l.dir == 1 ? e->tgt : e->src;
    ns.push_back(at);
  }
  return ns;
}

inline std::vector<Word> rewrite_neighbors(const Computad2& c, const std::vector<RewriteRule>& rules, const Word& w,
                                           std::size_t bound) {
  std::vector<Word> out;
  std::vector<Id> ns = nodes_along(c.graph, w);
  for (const auto& rule : rules) {
    const std::size_t plen = rule.pattern.letters.size();
    for (std::size_t i = 0; i + plen <= w.letters.size(); ++i) {
      if (ns[i] != rule.pattern.start) continue;
      bool match = true;
      for (std::size_t k = 0; k < plen; ++k)
        if (!(w.letters[i + k] == rule.pattern.letters[k])) {
          match = false;
          break;
        }
      if (!match) continue;
      Word next{w.start, {}};
      next.letters.insert(next.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<long>(i));
      next.letters.insert(next.letters.end(), rule.replacement.letters.begin(), rule.replacement.letters.end());
      next.letters.insert(next.letters.end(), w.letters.begin() + static_cast<long>(i + plen), w.letters.end());
      if (c.groupoidal) next = reduce_word(next);
      if (next.letters.size() <= bound) out.push_back(std::move(next));
    }
  }
  return out;
}

// Unit edges (a relation says edge == empty path) are erased from all words
// before the saturation runs; iterated until no unit relation remains.
struct UnitNormalization {
  Computad2 computad;
  std::set<Id> unit_edges;

  Word apply(const Word& w) const {
    Word out{w.start, {}};
    for (const auto& l : w.letters)
      if (!unit_edges.count(l.edge)) out.letters.push_back(l);
    if (computad.groupoidal) out = reduce_word(out);
    return out;
  }
};

inline UnitNormalization normalize_unit_edges(const Computad2& c) {
  UnitNormalization un{c, {}};
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Relation> kept;
    for (const auto& r : un.computad.relations) {
      const Word l = un.apply(r.lhs);
      const Word rr = un.apply(r.rhs);
      auto unit_side = [](const Word& a, const Word& b) { return a.letters.size() == 1 && a.letters[0].dir == 1 && b.letters.empty(); };
      if (unit_side(l, rr)) {
        un.unit_edges.insert(l.letters[0].edge);
        changed = true;
      } else if (unit_side(rr, l)) {
        un.unit_edges.insert(rr.letters[0].edge);
        changed = true;
      } else {
        kept.push_back({r.id, l, rr});
      }
    }
    un.computad.relations = kept;
    if (changed)
      for (auto& r : un.computad.relations) {
        r.lhs = un.apply(r.lhs);
        r.rhs = un.apply(r.rhs);
      }
  }
  // drop degenerate relations (both sides now identical)
  std::vector<Relation> kept;
  for (const auto& r : un.computad.relations)
    if (!(r.lhs == r.rhs)) kept.push_back(r);
  un.computad.relations = kept;
  return un;
}

}  // namespace detail

// ------------------------------------------------------------- coinserter

// Presentation of the coinserter of f0, f1 : A -> B in Cat: the graph of B
// with one fresh edge per object of A, relations from B's composition table
// plus one naturality relation per morphism of A.  Identity edges are units
// (e == empty path) and are eliminated before the presentation is returned,
// so the word engine never sees them.
inline Presentation coinserter(const Functor& f0, const Functor& f1) {
  if (!catkit::fincat::same_cat(f0.dom, f1.dom) || !catkit::fincat::same_cat(f0.cod, f1.cod))
    throw Error(errc::boundary_mismatch, "coinserter needs a parallel pair of functors");
  const auto& a = *f0.dom;
  const auto& b = *f0.cod;

  Computad2 c;
  c.groupoidal = false;
  c.graph.nodes = b.objects;
  std::set<Id> taken;
  for (const auto& m : b.morphisms) {
    c.graph.edges.push_back({m.id, m.src, m.tgt});
    taken.insert(m.id);
  }
  std::map<Id, Id> fresh;  // object of A -> inserted edge id
  for (const auto& x : a.objects) {
    Id base = "ins_" + x;
    while (taken.count(base)) base += "_";
    taken.insert(base);
    fresh[x] = base;
    c.graph.edges.push_back({base, f0.ob(x), f1.ob(x)});
  }

  std::size_t rix = 0;
  auto rel_id = [&rix]() { return "r" + std::to_string(rix++); };
  for (const auto& [gf, h] : b.table) {
    Word lhs{b.morphism(gf.second).src, {{gf.second, 1}, {gf.first, 1}}};
    Word rhs{b.morphism(h).src, {{h, 1}}};
    c.relations.push_back({rel_id(), lhs, rhs});
  }
  for (const auto& [x, i] : b.identity) {
    c.relations.push_back({rel_id(), Word{x, {{i, 1}}}, Word{x, {}}});
  }
  for (const auto& m : a.morphisms) {
    Word lhs{f0.ob(m.src), {{f0.mor(m.id), 1}, {fresh.at(m.tgt), 1}}};
    Word rhs{f0.ob(m.src), {{fresh.at(m.src), 1}, {f1.mor(m.id), 1}}};
    c.relations.push_back({rel_id(), lhs, rhs});
  }

  detail::UnitNormalization un = detail::normalize_unit_edges(c);
  Computad2 cleaned = un.computad;
  cleaned.graph.edges.clear();
  for (const auto& e : c.graph.edges)
    if (!un.unit_edges.count(e.id)) cleaned.graph.edges.push_back(e);
  return make_presentation(std::move(cleaned));
}

// Bidirectional breadth-first rewriting closure up to the bound, then
// abelianization separation.  Equal and Distinct are certified; Unknown is
// an honest third value.
inline WordVerdict word_eq(const Presentation& p, const Word& w1_in, const Word& w2_in,
                           std::optional<int> bound_override = std::nullopt,
                           std::size_t max_states = 200000) {
  validate_computad(p.computad);
  validate_word(p.computad.graph, w1_in, p.computad.groupoidal);
  validate_word(p.computad.graph, w2_in, p.computad.groupoidal);
  if (w1_in.start != w2_in.start || word_end(p.computad.graph, w1_in) != word_end(p.computad.graph, w2_in))
    throw Error(errc::not_parallel, "word_eq requires parallel words");

  detail::UnitNormalization un = detail::normalize_unit_edges(normalize_computad(p.computad));
  Word w1 = un.apply(p.computad.groupoidal ? reduce_word(w1_in) : w1_in);
  Word w2 = un.apply(p.computad.groupoidal ? reduce_word(w2_in) : w2_in);

  if (w1 == w2) return WordVerdict::Equal;
  if (un.computad.relations.empty())
    return WordVerdict::Distinct;  // free case: distinct normal forms are distinct

  std::size_t bound = static_cast<std::size_t>(std::max(
      {p.bound, bound_override.value_or(0), static_cast<int>(w1.letters.size()), static_cast<int>(w2.letters.size()),
       max_relation_length(un.computad)}));

  std::vector<detail::RewriteRule> rules = detail::rewrite_rules(un.computad);

  std::map<std::string, int> side;  // 1 = reached from w1, 2 = from w2
  std::deque<std::pair<Word, int>> queue;
  side[word_key(w1)] = 1;
  side[word_key(w2)] = 2;
  queue.push_back({w1, 1});
  queue.push_back({w2, 2});

  while (!queue.empty() && side.size() < max_states) {
    auto [w, s] = queue.front();
    queue.pop_front();
    for (auto& next : detail::rewrite_neighbors(un.computad, rules, w, bound)) {
      std::string key = word_key(next);
      auto it = side.find(key);
      if (it != side.end()) {
        if (it->second != s) return WordVerdict::Equal;
        continue;
      }
      side[key] = s;
      queue.push_back({std::move(next), s});
    }
  }

  if (detail::abelianization_separates(p, w1_in, w2_in)) return WordVerdict::Distinct;
  return WordVerdict::Unknown;
}

// --------------------------------------------------------- abelian invariants

struct ComponentGroup {
  Id component;  // least node of the component
  long long rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1
  friend bool operator==(const ComponentGroup&, const ComponentGroup&) = default;
};

namespace detail {

inline std::map<Id, Id> graph_components(const FinGraph& g) {
  std::map<Id, Id> root;
  for (const auto& n : g.nodes) root[n] = n;
  auto find = [&](Id x) {
    while (root[x] != x) x = root[x];
    return x;
  };
  for (const auto& e : g.edges) {
    Id a = find(e.src), b = find(e.tgt);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  std::map<Id, Id> out;
  for (const auto& n : g.nodes) out[n] = find(n);
  return out;
}

// Deterministic BFS spanning forest from the least node of each component;
// edges are offered in lexicographic id order.
inline std::set<Id> spanning_forest(const FinGraph& g) {
  std::vector<Edge> edges = g.edges;
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  std::set<Id> in_tree_nodes, tree;
  for (const auto& start : g.nodes) {
    if (in_tree_nodes.count(start)) continue;
    in_tree_nodes.insert(start);
    std::deque<Id> frontier{start};
    while (!frontier.empty()) {
      Id at = frontier.front();
      frontier.pop_front();
      for (const auto& e : edges) {
        Id other;
        if (e.src == at && !in_tree_nodes.count(e.tgt))
          other = e.tgt;
        else if (e.tgt == at && !in_tree_nodes.count(e.src))
          other = e.src;
        else
          continue;
        tree.insert(e.id);
        in_tree_nodes.insert(other);
        frontier.push_back(other);
      }
    }
  }
  return tree;
}

}  // namespace detail

// Per-component invariant factors of (free abelian group on edges outside a
// spanning forest) / (images of the relation vectors).
inline std::vector<ComponentGroup> abelianization(const Presentation& p) {
  if (!p.computad.groupoidal) throw Error(errc::not_groupoidal, "abelianization needs a groupoidal presentation");
  validate_computad(p.computad);
  const FinGraph& g = p.computad.graph;
  std::map<Id, Id> comp = detail::graph_components(g);
  std::set<Id> tree = detail::spanning_forest(g);

  std::set<Id> comp_ids;
  for (const auto& [n, c] : comp) comp_ids.insert(c);

  std::vector<ComponentGroup> out;
  for (const auto& cid : comp_ids) {
    std::vector<Id> cotree;
    for (const auto& e : g.edges)
      if (comp.at(e.src) == cid && !tree.count(e.id)) cotree.push_back(e.id);
    std::sort(cotree.begin(), cotree.end());

    std::vector<const Relation*> rels;
    for (const auto& r : p.computad.relations)
      if (comp.at(r.lhs.start) == cid) rels.push_back(&r);

    std::vector<Id> all_edges = detail::sorted_edge_ids(g);
    catkit::topo::IntMatrix m(static_cast<int>(cotree.size()), static_cast<int>(rels.size()));
    for (std::size_t r = 0; r < rels.size(); ++r) {
      std::vector<long long> lv = detail::word_vector(all_edges, rels[r]->lhs);
      std::vector<long long> rv = detail::word_vector(all_edges, rels[r]->rhs);
      for (std::size_t i = 0; i < cotree.size(); ++i) {
        auto it = std::lower_bound(all_edges.begin(), all_edges.end(), cotree[i]);
        std::size_t ix = static_cast<std::size_t>(it - all_edges.begin());
        m.at(static_cast<int>(i), static_cast<int>(r)) = lv[ix] - rv[ix];
      }
    }
    catkit::topo::SNFResult snf = catkit::topo::smith_normal_form(m);
    ComponentGroup grp;
    grp.component = cid;
    grp.rank = static_cast<long long>(cotree.size()) - snf.rank;
    for (long long d : snf.diagonal)
      if (d > 1) grp.torsion.push_back(d);
    out.push_back(std::move(grp));
  }
  return out;
}

// Rank of the free groupoid (|E| - |V| + #components) minus relation count.
inline long long deficiency(const Presentation& p) {
  if (!p.computad.groupoidal) throw Error(errc::not_groupoidal, "deficiency needs a groupoidal presentation");
  validate_computad(p.computad);
  std::map<Id, Id> comp = detail::graph_components(p.computad.graph);
  std::set<Id> comp_ids;
  for (const auto& [n, c] : comp) comp_ids.insert(c);
  long long rank = static_cast<long long>(p.computad.graph.edges.size()) -
                   static_cast<long long>(p.computad.graph.nodes.size()) + static_cast<long long>(comp_ids.size());
  return rank - static_cast<long long>(p.computad.relations.size());
}

enum class Thinness { NotThin, Inconclusive };

inline const char* to_string(Thinness t) { return t == Thinness::NotThin ? "NotThin" : "Inconclusive"; }

// thinness_obstruction lives in catkit/topo.hpp: it inspects the Euler
// characteristic of the realized complex.

}  // namespace catkit::present

#endif
