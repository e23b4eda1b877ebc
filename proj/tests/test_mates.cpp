#include <doctest.h>

#include <random>

#include "catkit/mates.hpp"
#include "support_mates.hpp"

using namespace catkit;
using namespace catkit::fincat;
using namespace catkit::mates;
namespace ts = testsupport;

namespace {

AdjunctionData roundup_02() {
  return ts::subposet_closure_adjunction(ts::chain(3), {"0", "2"});
}

}  // namespace

TEST_CASE("identity adjunctions validate on the whole corpus") {
  for (const auto& c : ts::corpus_categories()) CHECK(check_adjunction(identity_adjunction(c)).ok());
}

TEST_CASE("round-up -| inclusion is an adjunction") {
  AdjunctionData a = roundup_02();
  CHECK(check_adjunction(a).ok());
  CHECK(a.left.ob("1") == "2");
  CHECK(a.right.ob("2") == "2");
}

TEST_CASE("a rewired unit component is reported") {
  AdjunctionData a = roundup_02();
  a.unit.at["0"] = ts::pm("0", "2");  // should be (0,0) since g(f(0)) = 0
  CHECK_FALSE(check_adjunction(a).ok());
}

TEST_CASE("a triangle identity failure is reported even with valid boundaries") {
  AdjunctionData a = identity_adjunction(ts::cyclic_two());
  a.counit.at["*"] = "s";  // parallel to id, natural, but breaks both triangles
  a.unit.at["*"] = "id";
  ValidationReport rep = check_adjunction(a);
  CHECK_FALSE(rep.ok());
  bool triangle = false;
  for (const auto& v : rep.violations) triangle |= v.kind.rfind("triangle", 0) == 0;
  CHECK(triangle);
}

TEST_CASE("composition with the identity adjunction is the identity") {
  AdjunctionData a = roundup_02();
  AdjunctionData l = compose_adjunctions(identity_adjunction(a.cod()), a);
  AdjunctionData r = compose_adjunctions(a, identity_adjunction(a.dom()));
  for (const auto* b : {&l, &r}) {
    CHECK(functor_eq(b->left, a.left));
    CHECK(functor_eq(b->right, a.right));
    CHECK(b->counit.at == a.counit.at);
    CHECK(b->unit.at == a.unit.at);
  }
}

TEST_CASE("stacked Galois connections compose to the expected connection") {
  CatPtr c4 = ts::chain(4);
  // closed sets {0,2,3} inside 0..3, then {0,3} inside {0,2,3}
  AdjunctionData a1 = ts::subposet_closure_adjunction(c4, {"0", "2", "3"});
  AdjunctionData a2 = ts::subposet_closure_adjunction(a1.cod(), {"0", "3"});
  AdjunctionData comp = compose_adjunctions(a2, a1);
  CHECK(check_adjunction(comp).ok());
  CHECK(comp.left.ob("0") == "0");
  CHECK(comp.left.ob("1") == "3");
  CHECK(comp.left.ob("2") == "3");
  CHECK(comp.left.ob("3") == "3");
  // and it coincides with the directly-built one-step connection
  AdjunctionData direct = ts::subposet_closure_adjunction(c4, {"0", "3"});
  CHECK(comp.left.omap == direct.left.omap);
  CHECK(comp.right.omap == direct.right.omap);
  CHECK(comp.counit.at == direct.counit.at);
  CHECK(comp.unit.at == direct.unit.at);
}

TEST_CASE("adjunction composition is associative componentwise") {
  CatPtr c4 = ts::chain(4);
  AdjunctionData a1 = ts::subposet_closure_adjunction(c4, {"0", "1", "3"});
  AdjunctionData a2 = ts::subposet_closure_adjunction(a1.cod(), {"0", "3"});
  AdjunctionData a3 = ts::subposet_closure_adjunction(a2.cod(), {"3"});
  AdjunctionData left = compose_adjunctions(a3, compose_adjunctions(a2, a1));
  AdjunctionData right = compose_adjunctions(compose_adjunctions(a3, a2), a1);
  CHECK(left.left.omap == right.left.omap);
  CHECK(left.right.omap == right.right.omap);
  CHECK(left.counit.at == right.counit.at);
  CHECK(left.unit.at == right.unit.at);
}

namespace {

MateSquare identity_square(const CatPtr& c) {
  AdjunctionData ida = identity_adjunction(c);
  Functor idf = identity_functor(c);
  return MateSquare{ida, ida, idf, idf, identity_nat(idf)};
}

}  // namespace

TEST_CASE("the mate of the identity square is the identity") {
  for (const auto& c : {ts::chain(3), ts::cyclic_two(), ts::parallel_pair()}) {
    MateSquare sq = identity_square(c);
    NatTrans m = mate(sq);
    CHECK(m.at == identity_nat(identity_functor(c)).at);
  }
}

TEST_CASE("the mate of id: g => g under f -| g twice is id: f => f") {
  AdjunctionData a = roundup_02();
  // orient the square as in the correspondence: both adjunctions are f -| g
  MateSquare sq;
  sq.adj_lu = a;
  sq.adj_fg = a;
  sq.m = identity_functor(a.cod());
  sq.n = identity_functor(a.dom());
  sq.alpha = NatTrans{compose_functors(sq.n, a.right), compose_functors(a.right, sq.m), {}};
  for (const auto& x : a.cod()->objects) sq.alpha.at[x] = a.dom()->id_of(a.right.ob(x));
  REQUIRE(check_mate_square(sq).ok());
  NatTrans m = mate(sq);
  for (const auto& w : a.dom()->objects) CHECK(m(w) == a.cod()->id_of(a.left.ob(w)));
}

TEST_CASE("mate and mate_inverse are mutually inverse on random poset squares") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 40; ++trial) {
    MateSquare sq = ts::random_poset_mate_square(rng);
    REQUIRE(check_mate_square(sq).ok());
    NatTrans beta = mate(sq);
    NatTrans alpha_back = mate_inverse(sq, beta);
    CHECK(alpha_back.at == sq.alpha.at);
    NatTrans beta_back = mate(MateSquare{sq.adj_lu, sq.adj_fg, sq.m, sq.n, alpha_back});
    CHECK(beta_back.at == beta.at);
  }
}

TEST_CASE("mates respect horizontal pasting") {
  std::mt19937 rng(515151);
  int done = 0;
  while (done < 10) {
    MateSquare sq1 = ts::random_poset_mate_square(rng);
    // second square shares the vertical edge f -| g of the first
    CatPtr z2 = ts::random_chain(rng), y2 = ts::random_chain(rng);
    AdjunctionData fg2 = ts::random_chain_adjunction(rng, z2, y2);
    Functor m2 = ts::poset_functor(sq1.adj_fg.cod(), y2, ts::random_monotone(rng, sq1.adj_fg.cod(), y2, false));

    std::optional<Functor> n2;
    for (int attempt = 0; attempt < 20 && !n2; ++attempt) {
      Functor cand = ts::poset_functor(sq1.adj_fg.dom(), z2, ts::random_monotone(rng, sq1.adj_fg.dom(), z2, false));
      bool ok = true;
      for (const auto& y : sq1.adj_fg.cod()->objects)
        ok &= ts::poset_leq(*z2, cand.ob(sq1.adj_fg.right.ob(y)), fg2.right.ob(m2.ob(y)));
      if (ok) n2 = cand;
    }
    if (!n2) continue;
    NatTrans alpha2 = ts::poset_nat(compose_functors(*n2, sq1.adj_fg.right), compose_functors(fg2.right, m2));
    MateSquare sq2{sq1.adj_fg, fg2, m2, *n2, alpha2};
    REQUIRE(check_mate_square(sq2).ok());

    // pasted square: alpha = (alpha2 . m1) after (n2 . alpha1)
    MateSquare pasted;
    pasted.adj_lu = sq1.adj_lu;
    pasted.adj_fg = fg2;
    pasted.m = compose_functors(m2, sq1.m);
    pasted.n = compose_functors(*n2, sq1.n);
    pasted.alpha = vcompose(whisker_right(alpha2, sq1.m), whisker_left(*n2, sq1.alpha));
    REQUIRE(check_mate_square(pasted).ok());

    NatTrans lhs = mate(pasted);
    NatTrans rhs = vcompose(whisker_left(m2, mate(sq1)), whisker_right(mate(sq2), sq1.n));
    CHECK(lhs.at == rhs.at);
    ++done;
  }
}

TEST_CASE("Beck-Chevalley holds on the identity square") {
  BeckChevalley bc = beck_chevalley(identity_square(ts::chain(3)));
  CHECK(bc.satisfied);
}

TEST_CASE("a constructed square violates Beck-Chevalley with a witness") {
  CatPtr w = ts::chain(2);
  AdjunctionData lu = ts::subposet_closure_adjunction(w, {"1"});  // W -> {1}
  AdjunctionData fg = identity_adjunction(w);
  Functor m = ts::poset_functor(lu.cod(), w, {{"1", "1"}});
  Functor n = identity_functor(w);
  NatTrans alpha = ts::poset_nat(compose_functors(n, lu.right), compose_functors(fg.right, m));
  MateSquare sq{lu, fg, m, n, alpha};
  REQUIRE(check_mate_square(sq).ok());

  BeckChevalley bc = beck_chevalley(sq);
  CHECK_FALSE(bc.satisfied);
  CHECK(bc.witness_object == "0");
  CHECK(bc.witness_component == ts::pm("0", "1"));
  CHECK_FALSE(is_invertible(*w, bc.witness_component));
}

TEST_CASE("an invertible alpha with identity functors is Satisfied") {
  CatPtr c = ts::walking_iso();
  AdjunctionData ida = identity_adjunction(c);
  Functor idf = identity_functor(c);
  MateSquare sq{ida, ida, idf, idf, identity_nat(idf)};
  CHECK(beck_chevalley(sq).satisfied);
}

TEST_CASE("mates on a non-thin category: identity adjunctions move alpha across unchanged") {
  CatPtr c2 = ts::cyclic_two();
  AdjunctionData ida = identity_adjunction(c2);
  Functor idf = identity_functor(c2);
  NatTrans alpha{idf, idf, {{"*", "s"}}};  // the central element as a transformation
  REQUIRE(check_nat(alpha).ok());
  MateSquare sq{ida, ida, idf, idf, alpha};
  NatTrans m = mate(sq);
  CHECK(m.at == alpha.at);
  CHECK(mate_inverse(sq, m).at == alpha.at);
  CHECK(beck_chevalley(sq).satisfied);  // s is invertible
}
