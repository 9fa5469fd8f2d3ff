#include <string>
#include <vector>

#include "arbor/errors.hpp"
#include "arbor/hopf.hpp"
#include "doctest.h"

using namespace arbor;

namespace {

HopfContext ck_ctx() { return HopfContext(Flavor::Unordered, 1, Params::make_concrete({1}, {0})); }
HopfContext sym_ctx(Flavor f, int n) { return HopfContext(f, n, Params::make_symbolic(n)); }

KLin basis(const Key& key, const HopfContext& ctx) { return single(key, ctx.params.one()); }

std::vector<Key> forests_up_to(Flavor f, int n, int d) {
  std::vector<Key> out;
  for (int m = 1; m <= d; ++m)
    for (const Key& key : enumerate_forests(f, n, m)) out.push_back(key);
  return out;
}

std::string ladder_text(int height) {
  std::string out = "[]";
  for (int i = 1; i < height; ++i) out = "[1:" + out + "]";
  return out;
}

} // namespace

TEST_CASE("coproduct ground cases") {
  HopfContext ctx = sym_ctx(Flavor::Unordered, 1);
  Key unit = ctx.unit();
  TLin du = coproduct_key(unit, ctx);
  CHECK(du == tensor(ctx.one(), ctx.one()));
  Key dot = key_of("[]", Flavor::Unordered, 1);
  TLin dd = coproduct_key(dot, ctx);
  CHECK(dd.terms.size() == 2); // a single vertex is primitive
  CHECK(coefficient_of(dd, TKey{dot, unit}, ctx.params).is_one());
  CHECK(coefficient_of(dd, TKey{unit, dot}, ctx.params).is_one());
}

TEST_CASE("coproduct of the 2-ladder, symbolically") {
  HopfContext ctx = sym_ctx(Flavor::Unordered, 1);
  Key t = key_of("[1:[]]", Flavor::Unordered, 1);
  TLin d = coproduct_key(t, ctx);
  CHECK(to_string(d) == "1 (x) [1:[]] + (q1_1 + q2_1) [] (x) [] + [1:[]] (x) 1");

  HopfContext ctx2 = sym_ctx(Flavor::Unordered, 2);
  Key t2 = key_of("[2:[]]", Flavor::Unordered, 2);
  Key dot = key_of("[]", Flavor::Unordered, 2);
  CHECK(coefficient_of(coproduct_key(t2, ctx2), TKey{dot, dot}, ctx2.params) ==
        ctx2.params.q(1, 2) + ctx2.params.q(2, 2));
}

TEST_CASE("coproduct at CK parameters equals the cut coproduct") {
  HopfContext ctx = ck_ctx();
  Key cherry = key_of("[1:[] 1:[]]", Flavor::Unordered, 1);
  TLin d = coproduct(basis(cherry, ctx), ctx);
  CHECK(to_string(d) ==
        "1 (x) [1:[] 1:[]] + 2 [] (x) [1:[]] + []*[] (x) [] + [1:[] 1:[]] (x) 1");
  for (const Key& key : forests_up_to(Flavor::Unordered, 1, 5))
    CHECK(coproduct(basis(key, ctx), ctx) == ck_coproduct(basis(key, ctx), ctx));
}

TEST_CASE("cut coproduct requires one color and unordered trees") {
  HopfContext bad1(Flavor::Unordered, 2, Params::make_concrete({1, 0}, {0, 0}));
  CHECK_THROWS_AS(ck_coproduct(bad1.one(), bad1), domain_error);
  HopfContext bad2(Flavor::Planar, 1, Params::make_concrete({1}, {0}));
  CHECK_THROWS_AS(ck_coproduct(bad2.one(), bad2), domain_error);
}

TEST_CASE("counit") {
  HopfContext ctx = ck_ctx();
  CHECK(counit(ctx.one(), ctx).is_one());
  Key dot = key_of("[]", Flavor::Unordered, 1);
  CHECK(counit(basis(dot, ctx), ctx).is_zero());
  KLin x = scale(ctx.one(), ctx.params.from_int(3)) + scale(basis(dot, ctx), ctx.params.from_int(5));
  CHECK(counit(x, ctx) == ctx.params.from_int(3));
}

TEST_CASE("reduced coproduct") {
  HopfContext ctx = sym_ctx(Flavor::Unordered, 2);
  Key dot = key_of("[]", Flavor::Unordered, 2);
  CHECK(reduced_coproduct(basis(dot, ctx), ctx).is_zero());
  Key t = key_of("[1:[]]", Flavor::Unordered, 2);
  TLin expect;
  expect.add(TKey{dot, dot}, ctx.params.q(1, 1) + ctx.params.q(2, 1));
  CHECK(reduced_coproduct(basis(t, ctx), ctx) == expect);
  CHECK_THROWS_AS(reduced_coproduct(ctx.one(), ctx), domain_error);
}

TEST_CASE("multiplication and tensor multiplication") {
  HopfContext ctx = ck_ctx();
  Key dot = key_of("[]", Flavor::Unordered, 1);
  KLin sq = multiply(basis(dot, ctx), basis(dot, ctx), ctx);
  CHECK(to_string(sq) == "[]*[]");
  CHECK(multiply(ctx.one(), sq, ctx) == sq);

  // Delta is an algebra map; spot-check one product of trees.
  HopfContext sym = sym_ctx(Flavor::Unordered, 2);
  Key a = key_of("[1:[]]", Flavor::Unordered, 2);
  Key b = key_of("[2:[]]", Flavor::Unordered, 2);
  KLin ab = multiply(basis(a, sym), basis(b, sym), sym);
  CHECK(coproduct(ab, sym) ==
        tensor_multiply(coproduct(basis(a, sym), sym), coproduct(basis(b, sym), sym), sym));
}

TEST_CASE("coproduct terms preserve total degree") {
  HopfContext ctx = sym_ctx(Flavor::Unordered, 2);
  for (const Key& key : forests_up_to(Flavor::Unordered, 2, 4))
    for (const auto& [tk, c] : coproduct(basis(key, ctx), ctx).terms)
      CHECK(tk.degree() == key.degree);
}

TEST_CASE("antipode of small elements") {
  HopfContext ctx = ck_ctx();
  CHECK(antipode_series(ctx.one(), ctx) == ctx.one());
  Key dot = key_of("[]", Flavor::Unordered, 1);
  CHECK(antipode_series(basis(dot, ctx), ctx) == -basis(dot, ctx));
  Key t = key_of("[1:[]]", Flavor::Unordered, 1);
  CHECK(to_string(antipode_series(basis(t, ctx), ctx)) == "-1 [1:[]] + []*[]");
  CHECK(to_string(antipode_partitions(basis(t, ctx), ctx)) == "-1 [1:[]] + []*[]");

  HopfContext sym = sym_ctx(Flavor::Unordered, 1);
  KLin st = antipode_series(basis(t, sym), sym);
  CHECK(to_string(st) == "-1 [1:[]] + (q1_1 + q2_1) []*[]");
  CHECK(antipode_partitions(basis(t, sym), sym) == st);
}

TEST_CASE("partition antipode agrees with the series") {
  for (Flavor f : {Flavor::Unordered, Flavor::Planar}) {
    HopfContext ctx = sym_ctx(f, 2);
    for (const Key& key : forests_up_to(f, 2, 3))
      CHECK(antipode_partitions(basis(key, ctx), ctx) == antipode_series(basis(key, ctx), ctx));
  }
}

TEST_CASE("antipode is the convolution inverse of the identity") {
  HopfContext ctx = sym_ctx(Flavor::Unordered, 2);
  Coeff one = ctx.params.one();
  KeyMap s_map = [&](const Key& key) { return antipode_series(single(key, one), ctx); };
  KeyMap id_map = [&](const Key& key) { return single(key, one); };
  KeyMap ue_map = [&](const Key& key) {
    return key.is_unit() ? single(ctx.unit(), one) : KLin{};
  };
  for (const Key& key : forests_up_to(Flavor::Unordered, 2, 3)) {
    KLin x = basis(key, ctx);
    CHECK(convolve(s_map, id_map, x, ctx).is_zero());
    CHECK(convolve(id_map, s_map, x, ctx).is_zero());
    CHECK(convolve(ue_map, ue_map, x, ctx).is_zero()); // u eps is idempotent
  }
  CHECK(convolve(ue_map, ue_map, ctx.one(), ctx) == ctx.one());
}

TEST_CASE("degree cap guards enumeration blowup") {
  HopfContext ctx = ck_ctx();
  CHECK(global_degree_cap() == ctx.cap);
  Key big = key_of(ladder_text(ctx.cap + 1), Flavor::Unordered, 1);
  CHECK_THROWS_AS(coproduct_key(big, ctx), cap_error);
  CHECK_THROWS_AS(antipode_series(basis(big, ctx), ctx), cap_error);
}

TEST_CASE("k-flavor parameter validation") {
  CHECK_THROWS_AS(validate_k_params(Params::make_symbolic(2)), domain_error);
  CHECK_THROWS_AS(validate_k_params(Params::make_concrete({1, 1}, {0, 0})), domain_error);
  validate_k_params(Params::make_concrete({0, 1}, {1, 0}));
  CHECK_THROWS_AS(HopfContext(Flavor::K, 2, Params::make_symbolic(2)), domain_error);
}

TEST_CASE("project_k drops products and keeps the tree span") {
  HopfContext ctx(Flavor::K, 2, Params::make_concrete({0, 1}, {0, 0}));
  KProjectStats stats;
  Key sq = key_of("[]*[]", Flavor::Unordered, 2);
  CHECK(project_k(single(sq, ctx.params.one()), &stats).is_zero());
  CHECK(stats.dropped_forest == 1);

  Key t = key_of("[2:[]]", Flavor::K, 2);
  Key dot = key_of("[]", Flavor::K, 2);
  TLin d = k_coproduct(basis(t, ctx), ctx);
  TLin expect;
  expect.add(TKey{Key{Flavor::Unordered, 0, "1"}, Key{Flavor::Unordered, 2, "[2:[]]"}},
             ctx.params.one());
  expect.add(TKey{Key{Flavor::Unordered, 1, "[]"}, Key{Flavor::Unordered, 1, "[]"}},
             ctx.params.one());
  expect.add(TKey{Key{Flavor::Unordered, 2, "[2:[]]"}, Key{Flavor::Unordered, 0, "1"}},
             ctx.params.one());
  CHECK(d == expect);
  CHECK(to_string(d) == "1 (x) [2:[]] + [] (x) [] + [2:[]] (x) 1");
  CHECK(basis(dot, ctx).terms.size() == 1);
}

TEST_CASE("the k-flavor quotient never drops surviving terms") {
  // Empirical sharpening: under the one-nonzero-per-row condition every
  // nonzero coproduct term already lies in the tree span, so both drop
  // counters stay at zero on k-valid inputs.
  std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> grid;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      std::vector<Rational> r1 = {a == 1, a == 2};
      std::vector<Rational> r2 = {b == 1, b == 2};
      grid.emplace_back(r1, r2);
    }
  for (const auto& [q1, q2] : grid) {
    HopfContext ctx(Flavor::K, 2, Params::make_concrete(q1, q2));
    for (int m = 1; m <= 5; ++m) {
      for (const Key& key : enumerate_trees(Flavor::K, 2, m)) {
        KProjectStats stats;
        k_coproduct(basis(key, ctx), ctx, &stats);
        CHECK(stats.dropped_forest == 0);
        CHECK(stats.dropped_invalid == 0);
      }
    }
  }
}

TEST_CASE("project_k is idempotent") {
  Params p = Params::make_concrete({0, 1}, {0, 0});
  KLin x = single(key_of("[1:[] 2:[]]", Flavor::Unordered, 2), p.one()) +
           single(key_of("[]*[]", Flavor::Unordered, 2), p.one()) +
           single(key_of("[1:[] 1:[]]", Flavor::Unordered, 2), p.one());
  KLin once = project_k(x);
  CHECK(project_k(once) == once);
  CHECK(once.terms.size() == 1); // only the k-valid single tree survives
}
