#include <functional>
#include <string>
#include <vector>

#include "arbor/errors.hpp"
#include "arbor/nary.hpp"
#include "doctest.h"

using namespace arbor;

namespace {

Key nk(const std::string& text, int n = 2) { return nary_key(nary_parse(text, n)); }

Coeff one() { return Coeff(Rational(1)); }

std::vector<Key> nary_up_to(int n, int d, int min_deg = 1) {
  std::vector<Key> out;
  for (int m = min_deg; m <= d; ++m)
    for (const Key& key : enumerate_nary(n, m)) out.push_back(key);
  return out;
}

} // namespace

TEST_CASE("n-ary parse and format") {
  CHECK(nk("L").text == "1");
  CHECK(nk("L").degree == 0);
  CHECK(nk("(L,L)").text == "(L,L)");
  CHECK(nk("( L , ( L , L ) )").text == "(L,(L,L))");
  CHECK(nk("((L,L),(L,L))").degree == 3);
  CHECK(nk("(L,L,L)", 3).text == "(L,L,L)");
  CHECK_THROWS_AS(nary_parse("(L,L,L)", 2), parse_error);
  CHECK_THROWS_AS(nary_parse("(L,L)", 3), parse_error);
  CHECK_THROWS_AS(nary_parse("(L", 2), parse_error);
  CHECK_THROWS_AS(nary_parse("x", 2), parse_error);
  Nary t = nary_of(nk("((L,L),L)"), 2);
  CHECK(nary_format(t) == "((L,L),L)");
  CHECK(nary_degree(t) == 2);
}

TEST_CASE("enumeration of n-ary trees") {
  std::vector<long> catalan = {1, 1, 2, 5, 14, 42};
  for (int m = 0; m <= 5; ++m)
    CHECK((long)enumerate_nary(2, m).size() == catalan[m]);
  std::vector<long> ternary = {1, 1, 3, 12, 55};
  for (int m = 0; m <= 4; ++m)
    CHECK((long)enumerate_nary(3, m).size() == ternary[m]);
}

TEST_CASE("xi is a degree-preserving bijection") {
  CHECK(xi(nary_parse("L", 2)).text == "1");
  CHECK(xi(nary_parse("(L,L)", 2)).text == "[]");
  CHECK(xi(nary_parse("(L,(L,L))", 2)).text == "[2:[]]");
  CHECK(xi(nary_parse("((L,L),L)", 2)).text == "[1:[]]");

  for (int n = 2; n <= 3; ++n) {
    for (int m = 0; m <= 4; ++m) {
      std::vector<Key> nary = enumerate_nary(n, m);
      std::vector<Key> ktrees = enumerate_trees(Flavor::K, n, m);
      CHECK(nary.size() == ktrees.size());
      for (const Key& key : nary) {
        Key image = xi(nary_of(key, n));
        CHECK(image.degree == key.degree);
        CHECK(nary_key(xi_inv(image, n)) == key);
      }
    }
  }
}

TEST_CASE("dendriform star on the smallest pair") {
  DendCtx ctx(2, 2, 1);
  Key b = nk("(L,L)");
  CHECK(to_string(dstar(b, b, ctx)) == "((L,L),L) + (L,(L,L))");
  CHECK(dstar(ctx.unit(), b, ctx) == single(b, one()));
  CHECK(dstar(b, ctx.unit(), ctx) == single(b, one()));
  CHECK(to_string(dleft(b, b, ctx)) == "(L,(L,L))");
  CHECK(to_string(dright(b, b, ctx)) == "((L,L),L)");
  CHECK_THROWS_AS(dleft(ctx.unit(), b, ctx), domain_error);
  CHECK_THROWS_AS(dright(b, ctx.unit(), ctx), domain_error);
}

TEST_CASE("star splits into left and right") {
  for (int kk = 1; kk <= 2; ++kk) {
    for (int ll = 1; ll <= 2; ++ll) {
      DendCtx ctx(2, kk, ll);
      for (const Key& a : nary_up_to(2, 2)) {
        for (const Key& b : nary_up_to(2, 2)) {
          CHECK(dstar(a, b, ctx) == dleft(a, b, ctx) + dright(a, b, ctx));
          for (const auto& [key, c] : dstar(a, b, ctx).terms)
            CHECK(key.degree == a.degree + b.degree);
        }
      }
    }
  }
}

TEST_CASE("star associativity, one instance per (k,l)") {
  for (int kk = 1; kk <= 2; ++kk) {
    for (int ll = 1; ll <= 2; ++ll) {
      DendCtx ctx(2, kk, ll);
      KLin a = single(nk("(L,L)"), one());
      KLin b = single(nk("(L,(L,L))"), one());
      KLin c = single(nk("((L,L),L)"), one());
      CHECK(dstar_lin(dstar_lin(a, b, ctx), c, ctx) ==
            dstar_lin(a, dstar_lin(b, c, ctx), ctx));
    }
  }
}

TEST_CASE("the (2,1) star matches the slot recursion") {
  DendCtx ctx(2, 2, 1);
  // T*S = lambda(T_1, T_2*S) + lambda(T*S_1, S_2), written out independently.
  std::function<KLin(const Key&, const Key&)> rec = [&](const Key& a, const Key& b) -> KLin {
    if (a.is_unit()) return single(b, one());
    if (b.is_unit()) return single(a, one());
    Nary s = nary_of(a, 2), t = nary_of(b, 2);
    KLin out;
    for (const auto& [key, c] : rec(nary_key(s.kids[1]), b).terms) {
      Nary node = Nary::make_node(2, {s.kids[0], nary_of(key, 2)});
      out.add(nary_key(node), c);
    }
    for (const auto& [key, c] : rec(a, nary_key(t.kids[0])).terms) {
      Nary node = Nary::make_node(2, {nary_of(key, 2), t.kids[1]});
      out.add(nary_key(node), c);
    }
    return out;
  };
  for (const Key& a : nary_up_to(2, 2, 0)) {
    for (const Key& b : nary_up_to(2, 2, 0)) {
      if (a.degree + b.degree > 4) continue;
      CHECK(dstar(a, b, ctx) == rec(a, b));
    }
  }
}

TEST_CASE("coproduct on binary trees") {
  DendCtx ctx(2, 2, 1);
  Key unit = ctx.unit();
  CHECK(lr_coproduct_key(unit, ctx) == tensor(single(unit, one()), single(unit, one())));
  Key b = nk("(L,L)");
  TLin db = lr_coproduct_key(b, ctx);
  CHECK(to_string(db) == "1 (x) (L,L) + (L,L) (x) 1");
  CHECK(to_string(lr_coproduct_key(nk("(L,(L,L))"), ctx)) ==
        "1 (x) (L,(L,L)) + (L,L) (x) (L,L) + (L,(L,L)) (x) 1");
  CHECK(nary_counit(single(unit, one())).is_one());
  CHECK(nary_counit(single(b, one())).is_zero());
}

TEST_CASE("coassociativity holds at (2,1) and fails at (1,2)") {
  DendCtx good(2, 2, 1);
  CHECK_FALSE(find_noncoassoc_witness(good, 5).has_value());
  DendCtx bad(2, 1, 2);
  auto witness = find_noncoassoc_witness(bad, 5);
  REQUIRE(witness.has_value());
  CHECK(witness->degree == 5);
  CHECK(witness->text == "(((L,L),L),((L,L),L))");
}

TEST_CASE("the diagonal slot choices give honest Hopf structures") {
  // For k = l the star product is commutative and no failure exists below
  // degree 6, in either coassociativity or multiplicativity.
  for (int kk = 1; kk <= 2; ++kk) {
    DendCtx ctx(2, kk, kk);
    CHECK_FALSE(find_noncoassoc_witness(ctx, 5).has_value());
    CHECK_FALSE(find_nonmult_witness(ctx, 5).has_value());
    KLin a = single(nk("(L,(L,L))"), one());
    KLin b = single(nk("((L,L),L)"), one());
    CHECK(dstar_lin(a, b, ctx) == dstar_lin(b, a, ctx));
  }
}

TEST_CASE("pruning operator") {
  DendCtx ctx(2, 2, 1);
  CHECK(pruning_P(nk("(L,L)"), ctx).is_zero());
  CHECK(to_string(pruning_P(nk("(L,(L,L))"), ctx)) == "(L,L) (x) (L,L)");
  for (const Key& t : nary_up_to(2, 3))
    CHECK(pruning_P(nary_key(Nary::make_node(2, {nary_of(t, 2), Nary::make_leaf(2)})), ctx)
              .is_zero());
  CHECK(delta_pruning(ctx.unit(), ctx) ==
        tensor(single(ctx.unit(), one()), single(ctx.unit(), one())));
  Key t = nk("(L,(L,L))");
  TLin expect = pruning_P(t, ctx);
  expect.add(TKey{ctx.unit(), t}, one());
  expect.add(TKey{t, ctx.unit()}, one());
  CHECK(delta_pruning(t, ctx) == expect);
}
