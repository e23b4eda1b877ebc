#include <doctest.h>

#include <random>

#include "catkit/fincat.hpp"
#include "catkit/snf.hpp"
#include "support.hpp"

using namespace catkit;
using namespace catkit::fincat;
namespace ts = testsupport;

TEST_CASE("terminal and chain categories validate cleanly") {
  CHECK(validate_category(*ts::terminal()).ok());
  CHECK(validate_category(*ts::chain(3)).ok());
  for (const auto& c : ts::corpus_categories()) CHECK(validate_category(*c).ok());
}

TEST_CASE("rewired composite is reported as a boundary violation") {
  FinCat c = *ts::chain(3);
  // (1,2) . (0,1) should be (0,2); point it at id_0 instead
  c.table[{ts::pm("1", "2"), ts::pm("0", "1")}] = ts::pm("0", "0");
  ValidationReport rep = validate_category(c);
  CHECK_FALSE(rep.ok());
  bool boundary = false;
  for (const auto& v : rep.violations) boundary |= v.kind == "compose-boundary";
  CHECK(boundary);
}

TEST_CASE("duplicate and dangling ids throw MalformedInput") {
  FinCat c = *ts::chain(2);
  c.objects.push_back("0");
  CHECK_THROWS_AS(validate_category(c), Error);

  FinCat d = *ts::chain(2);
  d.morphisms.push_back({"stray", "0", "missing"});
  CHECK_THROWS_AS(validate_category(d), Error);
}

TEST_CASE("compose follows the table and rejects boundary mismatches") {
  CatPtr c = ts::chain(3);
  CHECK(compose(*c, c->id_of("0"), ts::pm("0", "0")) == ts::pm("0", "0"));
  CHECK(compose(*c, ts::pm("1", "2"), ts::pm("0", "1")) == ts::pm("0", "2"));
  CHECK_THROWS_WITH_AS(compose(*c, ts::pm("0", "1"), ts::pm("1", "2")), doctest::Contains("NotComposable"), Error);
}

TEST_CASE("unit law: compose with identities is the identity action") {
  for (const auto& c : ts::corpus_categories())
    for (const auto& m : c->morphisms) {
      CHECK(compose(*c, m.id, c->id_of(m.src)) == m.id);
      CHECK(compose(*c, c->id_of(m.tgt), m.id) == m.id);
    }
}

namespace {

// Independent brute-force law check, used as the oracle for validate_category.
bool lawful(const FinCat& c) {
  for (const auto& x : c.objects) {
    auto it = c.identity.find(x);
    if (it == c.identity.end()) return false;
    const MorDecl* m = c.find_morphism(it->second);
    if (!m || m->src != x || m->tgt != x) return false;
  }
  for (const auto& g : c.morphisms)
    for (const auto& f : c.morphisms) {
      bool composable = f.tgt == g.src;
      auto it = c.table.find({g.id, f.id});
      if (composable != (it != c.table.end())) return false;
      if (!composable) continue;
      const MorDecl* h = c.find_morphism(it->second);
      if (!h || h->src != f.src || h->tgt != g.tgt) return false;
    }
  for (const auto& f : c.morphisms) {
    if (c.table.at({f.id, c.identity.at(f.src)}) != f.id) return false;
    if (c.table.at({c.identity.at(f.tgt), f.id}) != f.id) return false;
  }
  for (const auto& h : c.morphisms)
    for (const auto& g : c.morphisms)
      for (const auto& f : c.morphisms) {
        if (f.tgt != g.src || g.tgt != h.src) continue;
        if (c.table.at({h.id, c.table.at({g.id, f.id})}) != c.table.at({c.table.at({h.id, g.id}), f.id})) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("every single table mutation agrees with the brute-force oracle") {
  for (const auto& cp : ts::corpus_categories()) {
    for (auto entry = cp->table.begin(); entry != cp->table.end(); ++entry)
      for (const auto& repl : cp->morphisms) {
        if (repl.id == entry->second) continue;
        FinCat c = *cp;
        c.table[entry->first] = repl.id;
        CHECK(validate_category(c).ok() == lawful(c));
      }
  }
}

TEST_CASE("a randomly mutated poset table is always detected") {
  std::mt19937 rng(20240811);
  for (const auto& cp : {ts::chain(3), ts::divisibility_1236(), ts::square_poset()}) {
    FinCat c = *cp;
    auto it = c.table.begin();
    std::advance(it, static_cast<long>(rng() % c.table.size()));
    for (const auto& m : c.morphisms)
      if (m.id != it->second) {
        it->second = m.id;
        break;
      }
    // in a thin category any rewiring breaks a boundary
    CHECK_FALSE(validate_category(c).ok());
  }
}

TEST_CASE("path enumeration on a single loop") {
  FinGraph g = ts::loop_graph();
  std::vector<Path> ps = enumerate_paths(g, "n", "n", 3);
  REQUIRE(ps.size() == 4);
  CHECK(ps[0].steps.empty());
  CHECK(ps[1].steps == std::vector<Id>{"x"});
  CHECK(ps[2].steps == std::vector<Id>{"x", "x"});
  CHECK(ps[3].steps == std::vector<Id>{"x", "x", "x"});
}

TEST_CASE("no paths between disconnected nodes") {
  FinGraph g;
  g.nodes = {"a", "b"};
  CHECK(enumerate_paths(g, "a", "b", 5).empty());
  CHECK_THROWS_AS(enumerate_paths(g, "a", "zzz", 1), Error);
}

TEST_CASE("two parallel edges give two length-1 paths in lex order") {
  FinGraph g = ts::parallel_edges_graph();
  std::vector<Path> ps = enumerate_paths(g, "n1", "n2", 1);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].steps == std::vector<Id>{"u"});
  CHECK(ps[1].steps == std::vector<Id>{"v"});
}

TEST_CASE("path counts are monotone in the length cap") {
  FinGraph g = ts::two_loops_graph();
  std::size_t prev = 0;
  for (int len = 0; len <= 4; ++len) {
    std::size_t n = enumerate_paths(g, "n", "n", len).size();
    CHECK(n >= prev);
    prev = n;
  }
}

TEST_CASE("path concatenation is associative on sampled triples") {
  FinGraph g = ts::theta_graph();
  g.edges.push_back({"back", "q", "p"});
  g.normalize();
  auto pq = enumerate_paths(g, "p", "q", 3);
  auto qp = enumerate_paths(g, "q", "p", 3);
  for (const auto& a : pq)
    for (const auto& b : qp)
      for (const auto& c : pq) {
        Path left = concat_paths(g, concat_paths(g, a, b), c);
        Path right = concat_paths(g, a, concat_paths(g, b, c));
        CHECK(left == right);
        CHECK(path_target(g, left) == "q");
      }
}

TEST_CASE("functor category with terminal domain recovers the target") {
  for (const auto& c : ts::corpus_categories()) {
    if (c->morphisms.size() > 12) continue;
    FunctorCategory fc = functor_category(ts::terminal(), c);
    auto iso = iso_search(fc.cat, c);
    REQUIRE(iso.has_value());
    CHECK(check_functor(iso->fwd).ok());
    CHECK(check_functor(iso->bwd).ok());
  }
}

TEST_CASE("functor category [2,2] is the 3-chain") {
  FunctorCategory fc = functor_category(ts::chain(2), ts::chain(2));
  CHECK(fc.objects.size() == 3);
  auto iso = iso_search(fc.cat, ts::chain(3));
  CHECK(iso.has_value());
}

TEST_CASE("functors out of a discrete pair form the product") {
  FunctorCategory fc = functor_category(ts::discrete(2), ts::chain(2));
  CHECK(fc.objects.size() == 4);
  auto iso = iso_search(fc.cat, ts::square_poset());
  CHECK(iso.has_value());
}

namespace {

Functor diagram_on_discrete(const CatPtr& shape, const CatPtr& target, const std::map<Id, Id>& picks) {
  Functor d{shape, target, {}, {}};
  for (const auto& [j, x] : picks) d.omap[j] = x;
  for (const auto& [j, i] : shape->identity) d.mmap[i] = target->id_of(d.omap.at(j));
  return d;
}

}  // namespace

TEST_CASE("limit of the empty diagram is the terminal object") {
  CatPtr empty = make_cat(FinCat{});
  Functor d{empty, ts::divisibility_1236(), {}, {}};
  auto lim = limit(d);
  REQUIRE(lim.has_value());
  CHECK(lim->apex == "6");
}

TEST_CASE("binary product in the divisibility poset is the gcd") {
  CatPtr shape = ts::discrete(2);
  Functor d = diagram_on_discrete(shape, ts::divisibility_1236(), {{"d0", "2"}, {"d1", "3"}});
  auto lim = limit(d);
  REQUIRE(lim.has_value());
  CHECK(lim->apex == "1");
}

TEST_CASE("no product in a discrete category") {
  CatPtr shape = ts::discrete(2);
  Functor d = diagram_on_discrete(shape, ts::discrete(2), {{"d0", "d0"}, {"d1", "d1"}});
  CHECK_FALSE(limit(d).has_value());
}

TEST_CASE("limits factor every competing cone uniquely") {
  CatPtr shape = ts::discrete(2);
  Functor d = diagram_on_discrete(shape, ts::divisibility_1236(), {{"d0", "2"}, {"d1", "6"}});
  auto lim = limit(d);
  REQUIRE(lim.has_value());
  for (const auto& cone : enumerate_cones(d)) CHECK(cone_factorizations(d, *lim, cone).size() == 1);
}

TEST_CASE("Kan extension along the identity is the original functor") {
  CatPtr c = ts::divisibility_1236();
  for (const auto& f : enumerate_functors(ts::chain(2), c)) {
    auto ran = right_kan_extension(identity_functor(ts::chain(2)), f);
    REQUIRE(ran.has_value());
    CHECK(functor_eq(ran->ran, f));
  }
}

namespace {

// B: the cospan-free poset t <= x, t <= y; k includes the discrete pair {x, y}.
struct KanFixture {
  CatPtr a, b, c;
  Functor k, f;
};

KanFixture kan_fixture(const Id& fx, const Id& fy, CatPtr target) {
  KanFixture kf;
  kf.a = ts::discrete(2);
  kf.b = ts::poset({"t", "x", "y"}, [](const Id& p, const Id& q) { return p == q || (p == "t"); });
  kf.c = target;
  kf.k = Functor{kf.a, kf.b, {{"d0", "x"}, {"d1", "y"}}, {}};
  for (const auto& [o, i] : kf.a->identity) kf.k.mmap[i] = kf.b->id_of(kf.k.omap.at(o));
  kf.f = Functor{kf.a, kf.c, {{"d0", fx}, {"d1", fy}}, {}};
  for (const auto& [o, i] : kf.a->identity) kf.f.mmap[i] = kf.c->id_of(kf.f.omap.at(o));
  return kf;
}

}  // namespace

TEST_CASE("pointwise right Kan extension lands on the meet") {
  KanFixture kf = kan_fixture("2", "3", ts::divisibility_1236());
  auto ran = right_kan_extension(kf.k, kf.f);
  REQUIRE(ran.has_value());
  CHECK(ran->ran.ob("t") == "1");
  CHECK(ran->ran.ob("x") == "2");
  CHECK(ran->ran.ob("y") == "3");
  CHECK(check_nat(ran->counit).ok());
}

TEST_CASE("missing meet means no extension") {
  KanFixture kf = kan_fixture("d0", "d1", ts::discrete(2));
  CHECK_FALSE(right_kan_extension(kf.k, kf.f).has_value());
}

TEST_CASE("iso search finds the identity pair on every corpus category") {
  for (const auto& c : ts::corpus_categories()) {
    auto iso = iso_search(c, c);
    REQUIRE(iso.has_value());
    CHECK(check_functor(iso->fwd).ok());
    CHECK(check_functor(iso->bwd).ok());
    Functor round = compose_functors(iso->bwd, iso->fwd);
    CHECK(functor_eq(round, identity_functor(c)));
  }
}

TEST_CASE("categories of different shape are rejected") {
  CHECK_FALSE(iso_search(ts::discrete(2), ts::chain(2)).has_value());
  CHECK_FALSE(iso_search(ts::parallel_pair(), ts::walking_iso()).has_value());
  CHECK_FALSE(iso_search(ts::idempotent_monoid(), ts::cyclic_two()).has_value());
}

TEST_CASE("iso search refuses oversized inputs") {
  Budget tiny;
  tiny.max_objects = 1;
  CHECK_THROWS_WITH_AS(iso_search(ts::chain(2), ts::chain(2), tiny), doctest::Contains("SizeLimitExceeded"), Error);
}

TEST_CASE("path counts match adjacency-matrix powers") {
  std::mt19937 rng(6161);
  for (int trial = 0; trial < 15; ++trial) {
    FinGraph g;
    int n = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) g.nodes.push_back("v" + std::to_string(i));
    int edges = static_cast<int>(rng() % 6);
    for (int e = 0; e < edges; ++e)
      g.edges.push_back({"e" + std::to_string(e), g.nodes[rng() % g.nodes.size()], g.nodes[rng() % g.nodes.size()]});
    g.normalize();

    // oracle: (A^L)[a][b] counts the paths of length exactly L
    catkit::topo::IntMatrix adj(n, n);
    auto ix = [&](const Id& v) { return std::stoi(v.substr(1)); };
    for (const auto& e : g.edges) adj.at(ix(e.src), ix(e.tgt)) += 1;

    catkit::topo::IntMatrix power = catkit::topo::IntMatrix::identity(n);
    std::vector<catkit::topo::IntMatrix> powers{power};
    for (int l = 1; l <= 3; ++l) {
      catkit::topo::IntMatrix next(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) next.at(i, j) += power.at(i, k) * adj.at(k, j);
      powers.push_back(next);
      power = next;
    }

    for (const auto& a : g.nodes)
      for (const auto& b : g.nodes) {
        long long expected = 0;
        for (int l = 0; l <= 3; ++l) expected += powers[static_cast<std::size_t>(l)].at(ix(a), ix(b));
        CHECK(static_cast<long long>(enumerate_paths(g, a, b, 3).size()) == expected);
      }
  }
}

TEST_CASE("Kan extensions along discrete inclusions match the meet oracle") {
  std::mt19937 rng(6262);
  CatPtr a = ts::discrete(2);
  CatPtr chain = ts::chain(3);  // all finite limits exist: meets are minima
  for (int trial = 0; trial < 20; ++trial) {
    int nb = 3 + static_cast<int>(rng() % 2);
    std::vector<Id> belems;
    for (int i = 0; i < nb; ++i) belems.push_back("b" + std::to_string(i));
    // random poset on belems
    std::vector<std::vector<bool>> leq(belems.size(), std::vector<bool>(belems.size(), false));
    for (std::size_t i = 0; i < belems.size(); ++i) leq[i][i] = true;
    for (std::size_t i = 0; i < belems.size(); ++i)
      for (std::size_t j = i + 1; j < belems.size(); ++j)
        if (rng() % 2 == 0) leq[i][j] = true;
    for (std::size_t k = 0; k < belems.size(); ++k)
      for (std::size_t i = 0; i < belems.size(); ++i)
        for (std::size_t j = 0; j < belems.size(); ++j)
          if (leq[i][k] && leq[k][j]) leq[i][j] = true;
    CatPtr b = ts::poset(belems, [&](const Id& p, const Id& q) {
      return leq[static_cast<std::size_t>(std::stoi(p.substr(1)))][static_cast<std::size_t>(std::stoi(q.substr(1)))];
    });

    Functor k{a, b, {{"d0", belems[rng() % belems.size()]}, {"d1", belems[rng() % belems.size()]}}, {}};
    for (const auto& [o, i] : a->identity) k.mmap[i] = b->id_of(k.omap.at(o));
    Functor f{a, chain, {{"d0", chain->objects[rng() % 3]}, {"d1", chain->objects[rng() % 3]}}, {}};
    for (const auto& [o, i] : a->identity) f.mmap[i] = chain->id_of(f.omap.at(o));

    auto ran = right_kan_extension(k, f);
    REQUIRE(ran.has_value());
    for (const auto& bb : b->objects) {
      // oracle: minimum of f over {a' : bb <= k(a')}, top if the set is empty
      Id expected = chain->objects.back();
      for (const auto& ao : a->objects)
        if (ts::poset_leq(*b, bb, k.ob(ao)) && f.ob(ao) < expected) expected = f.ob(ao);
      CHECK(ran->ran.ob(bb) == expected);
    }
  }
}

TEST_CASE("iso search finds isomorphisms across random relabelings") {
  std::mt19937 rng(6363);
  for (const auto& c : ts::corpus_categories()) {
    // permute object and morphism names
    std::vector<Id> objs = c->objects, mors;
    for (const auto& m : c->morphisms) mors.push_back(m.id);
    std::shuffle(objs.begin(), objs.end(), rng);
    std::shuffle(mors.begin(), mors.end(), rng);
    std::map<Id, Id> oren, mren;
    for (std::size_t i = 0; i < objs.size(); ++i) oren[c->objects[i]] = "R" + std::to_string(i) + "_" + objs[i];
    for (std::size_t i = 0; i < mors.size(); ++i) mren[c->morphisms[i].id] = "r" + std::to_string(i) + "_" + mors[i];

    FinCat relabeled;
    for (const auto& x : c->objects) relabeled.objects.push_back(oren.at(x));
    for (const auto& m : c->morphisms) relabeled.morphisms.push_back({mren.at(m.id), oren.at(m.src), oren.at(m.tgt)});
    for (const auto& [x, i] : c->identity) relabeled.identity[oren.at(x)] = mren.at(i);
    for (const auto& [gf, h] : c->table) relabeled.table[{mren.at(gf.first), mren.at(gf.second)}] = mren.at(h);
    CatPtr rp = make_cat(std::move(relabeled));
    REQUIRE(validate_category(*rp).ok());

    auto iso = iso_search(c, rp);
    REQUIRE(iso.has_value());
    CHECK(check_functor(iso->fwd).ok());
    CHECK(functor_eq(compose_functors(iso->bwd, iso->fwd), identity_functor(c)));
  }
}

TEST_CASE("naturality failures are reported and skipped by enumeration") {
  CatPtr pp = ts::parallel_pair();
  Functor idf = identity_functor(pp);
  Functor swap_uv{pp, pp, {{"a", "a"}, {"b", "b"}}, {{"ida", "ida"}, {"idb", "idb"}, {"u", "v"}, {"v", "u"}}};
  REQUIRE(check_functor(swap_uv).ok());

  // the would-be transformation Id => swap has forced identity components,
  // but those fail naturality at u, so there is none at all
  CHECK(enumerate_nat_trans(idf, swap_uv).empty());
  NatTrans bogus{idf, swap_uv, {{"a", "ida"}, {"b", "idb"}}};
  ValidationReport rep = check_nat(bogus);
  CHECK_FALSE(rep.ok());
  bool naturality = false;
  for (const auto& v : rep.violations) naturality |= v.kind == "nat-naturality";
  CHECK(naturality);
}

TEST_CASE("whiskering and vertical composition agree with components") {
  CatPtr two = ts::chain(2);
  FunctorCategory fc = functor_category(two, ts::chain(3));
  for (const auto& t : fc.morphisms) {
    CHECK(check_nat(t).ok());
    NatTrans left = whisker_left(identity_functor(ts::chain(3)), t);
    CHECK(left.at == t.at);
    NatTrans right = whisker_right(t, identity_functor(two));
    CHECK(right.at == t.at);
  }
}
