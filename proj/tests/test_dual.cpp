#include <string>
#include <vector>

#include "arbor/dual.hpp"
#include "arbor/errors.hpp"
#include "doctest.h"

using namespace arbor;

namespace {

HopfContext ck_ctx() { return HopfContext(Flavor::Unordered, 1, Params::make_concrete({1}, {0})); }

Key k1(const std::string& text) { return key_of(text, Flavor::Unordered, 1); }
Key k2(const std::string& text) { return key_of(text, Flavor::Unordered, 2); }

std::vector<Key> trees_up_to(int n, int d) {
  std::vector<Key> out;
  for (int m = 1; m <= d; ++m)
    for (const Key& key : enumerate_trees(Flavor::Unordered, n, m)) out.push_back(key);
  return out;
}

} // namespace

TEST_CASE("dual star at CK parameters") {
  HopfContext ctx = ck_ctx();
  CHECK(to_string(dual_star(k1("[]"), k1("[]"), ctx)) == "[1:[]]");
  // The cherry appears twice: both leaf cuts prune a single vertex.
  CHECK(to_string(dual_star(k1("[]"), k1("[1:[]]"), ctx)) == "[1:[1:[]]] + 2 [1:[] 1:[]]");
  CHECK(to_string(dual_star(k1("[1:[]]"), k1("[]"), ctx)) == "[1:[1:[]]]");
}

TEST_CASE("dual star coefficients come from the coproduct pairing") {
  for (int n = 1; n <= 2; ++n) {
    HopfContext ctx(Flavor::Unordered, n, Params::make_symbolic(n));
    for (const Key& s : trees_up_to(n, 2)) {
      for (const Key& t : trees_up_to(n, 2)) {
        KLin st = dual_star(s, t, ctx);
        for (const Key& w : enumerate_trees(Flavor::Unordered, n, s.degree + t.degree)) {
          Coeff direct = pairing_direct(s, t, w, ctx);
          CHECK(coefficient_of(st, w, ctx.params) == direct);
          CHECK(direct == coefficient_of(coproduct_key(w, ctx), TKey{s, t}, ctx.params));
        }
      }
    }
  }
}

TEST_CASE("lie bracket") {
  HopfContext ctx = ck_ctx();
  Key dot = k1("[]");
  Key l2 = k1("[1:[]]");
  CHECK(lie_bracket(dot, dot, ctx).is_zero());
  CHECK(to_string(lie_bracket(dot, l2, ctx)) == "2 [1:[] 1:[]]");
  CHECK(lie_bracket(dot, l2, ctx) == -lie_bracket(l2, dot, ctx));
  CHECK(lie_bracket(dot, l2, ctx) ==
        dual_star(dot, l2, ctx) - dual_star(l2, dot, ctx));
}

TEST_CASE("jacobi identity on small triples") {
  for (int n = 1; n <= 2; ++n) {
    for (bool symbolic : {false, true}) {
      Params p = symbolic ? Params::make_symbolic(n)
                          : Params::make_concrete(std::vector<Rational>(n, 1),
                                                  std::vector<Rational>(n, 0));
      HopfContext ctx(Flavor::Unordered, n, p);
      std::vector<Key> trees = trees_up_to(n, 2);
      for (const Key& x : trees) {
        for (const Key& y : trees) {
          for (const Key& z : trees) {
            if (x.degree + y.degree + z.degree > 4) continue;
            KLin xl = single(x, p.one()), yl = single(y, p.one()), zl = single(z, p.one());
            KLin j = lie_bracket_lin(lie_bracket_lin(xl, yl, ctx), zl, ctx) +
                     lie_bracket_lin(lie_bracket_lin(yl, zl, ctx), xl, ctx) +
                     lie_bracket_lin(lie_bracket_lin(zl, xl, ctx), yl, ctx);
            CHECK(j.is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("cut counts") {
  CHECK(cut_count_n(k1("[]"), k1("[]"), k1("[1:[]]"), 1) == 1);
  CHECK(cut_count_n(k1("[]"), k1("[1:[]]"), k1("[1:[1:[]]]"), 1) == 1);
  CHECK(cut_count_n(k1("[]"), k1("[1:[]]"), k1("[1:[] 1:[]]"), 1) == 2);
  CHECK(cut_count_n(k1("[1:[]]"), k1("[]"), k1("[1:[] 1:[]]"), 1) == 0);
  CHECK(cut_count_n(k1("[]"), k1("[]"), k1("[1:[1:[]]]"), 1) == 0); // degree mismatch
}

TEST_CASE("CK bracket equals the cut-count bracket") {
  HopfContext ctx = ck_ctx();
  std::vector<Key> trees = trees_up_to(1, 3);
  for (const Key& s : trees) {
    for (const Key& t : trees) {
      if (s.degree + t.degree > 4) continue;
      KLin counted;
      for (const Key& u : enumerate_trees(Flavor::Unordered, 1, s.degree + t.degree)) {
        long d = cut_count_n(s, t, u, 1) - cut_count_n(t, s, u, 1);
        if (d != 0) counted.add(u, ctx.params.from_int(d));
      }
      CHECK(lie_bracket(s, t, ctx) == counted);
    }
  }
}

TEST_CASE("pre-Lie star on one color") {
  CHECK(to_string(prelie_star(k1("[]"), k1("[]"), {1}, 1)) == "[1:[]]");
  CHECK(to_string(prelie_star(k1("[1:[]]"), k1("[]"), {1}, 1)) == "[1:[1:[]]] + 2 [1:[] 1:[]]");
}

TEST_CASE("pre-Lie star matches the specialized dual star") {
  std::vector<std::vector<int>> psets = {{1}, {2}, {1, 2}};
  for (const auto& pset : psets) {
    std::vector<Rational> q1(2, 0), q2(2, 0);
    for (int j : pset) q1[j - 1] = 1;
    HopfContext ctx(Flavor::Unordered, 2, Params::make_concrete(q1, q2));
    for (const Key& s : trees_up_to(2, 2)) {
      for (const Key& t : trees_up_to(2, 2)) {
        if (s.degree + t.degree > 4) continue;
        CHECK(dual_star(s, t, ctx) == prelie_star(t, s, pset, 2));
      }
    }
  }
}

TEST_CASE("pre-Lie associator symmetry, one instance") {
  std::vector<int> pset = {1};
  Key x = k1("[1:[]]"), y = k1("[]"), z = k1("[]");
  auto star = [&](const KLin& a, const KLin& b) {
    KLin r;
    for (const auto& [ka, ca] : a.terms)
      for (const auto& [kb, cb] : b.terms)
        for (const auto& [ku, cu] : prelie_star(ka, kb, pset, 1).terms)
          r.add(ku, ca * cb * cu);
    return r;
  };
  Coeff one = Coeff(Rational(1));
  KLin xl = single(x, one), yl = single(y, one), zl = single(z, one);
  CHECK(star(star(xl, yl), zl) - star(xl, star(yl, zl)) ==
        star(star(xl, zl), yl) - star(xl, star(zl, yl)));
}

TEST_CASE("grafting star") {
  CHECK(to_string(grafting_star(k1("[]"), k1("[]"), {1}, 1)) == "[1:[]]");
  CHECK(to_string(grafting_star(k1("[]"), k1("[1:[]]"), {1}, 1)) ==
        "[1:[1:[]]] + [1:[] 1:[]]");
  // Grafting onto either cherry leaf lands in the same class.
  KLin g = grafting_star(k1("[]"), k1("[1:[] 1:[]]"), {1}, 1);
  CHECK(coefficient_of(g, k1("[1:[1:[]] 1:[]]"), Params::make_concrete({1}, {0})) ==
        Coeff(Rational(2)));
  CHECK(to_string(grafting_star(k2("[]"), k2("[]"), {1, 2}, 2)) == "[1:[]] + [2:[]]");
}

TEST_CASE("phi rescales by automorphism counts") {
  Coeff one = Coeff(Rational(1));
  CHECK(phi(single(k1("[]"), one), 1) == single(k1("[]"), one));
  CHECK(phi(single(k1("[1:[] 1:[]]"), one), 1) == single(k1("[1:[] 1:[]]"), Coeff(Rational(2))));
}

TEST_CASE("phi intertwines grafting with the cut pre-Lie product") {
  // a_dot = a_l2 = 1, so phi of the graft product is the cut product directly.
  CHECK(phi(grafting_star(k1("[]"), k1("[1:[]]"), {1}, 1), 1) ==
        prelie_star(k1("[1:[]]"), k1("[]"), {1}, 1));
  for (const Key& s : trees_up_to(2, 2)) {
    for (const Key& t : trees_up_to(2, 2)) {
      if (s.degree + t.degree > 4) continue;
      Rational as = Rational(aut_count(tree_of(s, 2)));
      Rational at = Rational(aut_count(tree_of(t, 2)));
      CHECK(phi(grafting_star(s, t, {1, 2}, 2), 2) ==
            scale(prelie_star(t, s, {1, 2}, 2), Coeff(as * at)));
    }
  }
}

TEST_CASE("embedding into labeled trees") {
  CHECK(to_string(embed_free_prelie(k2("[]"), 2)) == "[1|] + [2|]");
  CHECK(to_string(embed_free_prelie(k2("[1:[]]"), 2)) == "[1|[1|]] + [2|[1|]]");
  CHECK(to_string(embed_free_prelie(k1("[]"), 1)) == "[1|]");
}

TEST_CASE("free grafting of labeled trees") {
  Coeff one = Coeff(Rational(1));
  Key a = key_of("[1|]", Flavor::Labeled, 2);
  Key b = key_of("[2|]", Flavor::Labeled, 2);
  CHECK(to_string(free_graft_star(single(a, one), single(b, one), 2)) == "[2|[1|]]");
}

TEST_CASE("the embedding is a pre-Lie morphism") {
  std::vector<int> full = {1, 2};
  for (const Key& s : trees_up_to(2, 2)) {
    for (const Key& t : trees_up_to(2, 2)) {
      if (s.degree + t.degree > 4) continue;
      CHECK(embed_free_prelie_lin(grafting_star(s, t, full, 2), 2) ==
            free_graft_star(embed_free_prelie(s, 2), embed_free_prelie(t, 2), 2));
    }
  }
}
