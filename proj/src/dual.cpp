#include "arbor/dual.hpp"

#include "arbor/errors.hpp"

namespace arbor {

namespace {

void need_tree(const Key& k) {
  if (k.is_unit() || split_components(k.text).size() != 1)
    throw domain_error("expected a single nonempty tree, got '" + k.text + "'");
}

void cap_check(int deg, const HopfContext& ctx) {
  if (deg > ctx.cap) throw cap_error("degree cap exceeded (ARBOR_MAX_DEGREE)");
}

} // namespace

KLin dual_star(const Key& s, const Key& t, const HopfContext& ctx) {
  need_tree(s);
  need_tree(t);
  int deg = s.degree + t.degree;
  cap_check(deg, ctx);
  KLin out;
  for (const Key& w : enumerate_trees(ctx.flavor, ctx.n, deg)) {
    Coeff c = coefficient_of(coproduct_key(w, ctx), TKey{s, t}, ctx.params);
    out.add(w, c);
  }
  return out;
}

KLin dual_star_lin(const KLin& x, const KLin& y, const HopfContext& ctx) {
  KLin out;
  for (const auto& [ks, cs] : x.terms)
    for (const auto& [kt, ct] : y.terms) {
      KLin prod = dual_star(ks, kt, ctx);
      for (const auto& [k, c] : prod.terms) out.add(k, cs * ct * c);
    }
  return out;
}

KLin lie_bracket(const Key& s, const Key& t, const HopfContext& ctx) {
  return dual_star(s, t, ctx) - dual_star(t, s, ctx);
}

KLin lie_bracket_lin(const KLin& x, const KLin& y, const HopfContext& ctx) {
  return dual_star_lin(x, y, ctx) - dual_star_lin(y, x, ctx);
}

Coeff pairing_direct(const Key& s, const Key& t, const Key& w, const HopfContext& ctx) {
  RigidTree rw = tree_of(w, ctx.n);
  int m = rw.size();
  Mask full = m == 0 ? 0 : (Mask(1) << m) - 1;
  Coeff total = ctx.params.zero();
  for (Mask a = 0;; ++a) {
    if (induce(rw, a) == s && induce(rw, full & ~a) == t)
      total = total + q_coeff(rw, a, ctx.params);
    if (a == full) break;
  }
  return total;
}

long cut_count_n(const Key& t, const Key& s, const Key& u, int n) {
  RigidTree ru = parse_forest(u.text, u.flavor, n);
  if (!ru.single_tree()) throw domain_error("cut counting needs a single tree");
  long count = 0;
  for (Mask cut : admissible_cuts(ru)) {
    auto [p, r] = cut_split(ru, cut);
    if (p == t && r == s) ++count;
  }
  return count;
}

KLin prelie_star(const Key& s, const Key& t, const std::vector<int>& pset, int n) {
  need_tree(s);
  need_tree(t);
  int deg = s.degree + t.degree;
  if (deg > global_degree_cap()) throw cap_error("degree cap exceeded (ARBOR_MAX_DEGREE)");
  std::vector<bool> in_p(n + 1, false);
  for (int c : pset) {
    if (c < 1 || c > n) throw domain_error("color set entry out of range");
    in_p[c] = true;
  }
  KLin out;
  for (const Key& u : enumerate_trees(Flavor::Unordered, n, deg)) {
    RigidTree ru = tree_of(u, n);
    Mask pcomp = p_component(ru, pset);
    long count = 0;
    for (int v = 0; v < ru.size(); ++v) {
      if (ru.parent[v] == -1) continue;
      if (!(pcomp >> v & 1) || !in_p[ru.color[v]]) continue;
      auto [p, r] = cut_split(ru, Mask(1) << v);
      if (p == t && r == s) ++count;
    }
    if (count) out.add(u, Coeff(Rational(count)));
  }
  return out;
}

KLin grafting_star(const Key& s, const Key& t, const std::vector<int>& pset, int n) {
  need_tree(s);
  need_tree(t);
  RigidTree rs = tree_of(s, n);
  RigidTree rt = tree_of(t, n);
  KLin out;
  for (int v = 0; v < rt.size(); ++v)
    for (int p : pset) out.add(graft(rs, rt, v, p), Coeff(Rational(1)));
  return out;
}

KLin grafting_star_lin(const KLin& x, const KLin& y, const std::vector<int>& pset, int n) {
  KLin out;
  for (const auto& [ks, cs] : x.terms)
    for (const auto& [kt, ct] : y.terms) {
      KLin prod = grafting_star(ks, kt, pset, n);
      for (const auto& [k, c] : prod.terms) out.add(k, cs * ct * c);
    }
  return out;
}

KLin phi(const KLin& x, int n) {
  KLin out;
  for (const auto& [k, c] : x.terms) {
    Integer a = aut_count(parse_forest(k.text, Flavor::Unordered, n));
    out.add(k, c.times(Rational(a)));
  }
  return out;
}

KLin embed_free_prelie(const Key& t, int n) {
  need_tree(t);
  RigidTree rt = tree_of(t, n);
  KLin out;
  for (int rho = 1; rho <= n; ++rho) {
    RigidTree lab = rt;
    lab.flavor = Flavor::Labeled;
    lab.color[rt.roots[0]] = rho;
    out.add(canonical_key(lab), Coeff(Rational(1)));
  }
  return out;
}

KLin embed_free_prelie_lin(const KLin& x, int n) {
  KLin out;
  for (const auto& [k, c] : x.terms) {
    KLin e = embed_free_prelie(k, n);
    for (const auto& [k2, c2] : e.terms) out.add(k2, c * c2);
  }
  return out;
}

KLin free_graft_star(const KLin& x, const KLin& y, int n) {
  KLin out;
  for (const auto& [ka, ca] : x.terms)
    for (const auto& [kb, cb] : y.terms) {
      RigidTree a = parse_forest(ka.text, Flavor::Labeled, n);
      RigidTree b = parse_forest(kb.text, Flavor::Labeled, n);
      for (int v = 0; v < b.size(); ++v) out.add(graft_labeled(a, b, v), ca * cb);
    }
  return out;
}

} // namespace arbor
