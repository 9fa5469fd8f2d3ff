#include "arbor/hopf.hpp"

#include <cstdlib>

#include "arbor/errors.hpp"

namespace arbor {

int global_degree_cap() {
  const char* e = std::getenv("ARBOR_MAX_DEGREE");
  if (!e || !*e) return 7;
  char* end = nullptr;
  long v = std::strtol(e, &end, 10);
  if (*end || v < 1 || v > 20) throw domain_error("bad ARBOR_MAX_DEGREE");
  return (int)v;
}

void validate_k_params(const Params& params) {
  if (params.symbolic)
    throw domain_error("k-flavor requires concrete parameters");
  for (const auto* row : {&params.q1, &params.q2}) {
    int nonzero = 0;
    for (const auto& v : *row)
      if (v != 0) ++nonzero;
    if (nonzero > 1)
      throw domain_error("k-flavor needs at most one nonzero parameter per row");
  }
}

HopfContext::HopfContext(Flavor f, int arity, Params p)
    : flavor(f), n(arity), params(std::move(p)), cap(global_degree_cap()) {
  if (params.n != n) throw domain_error("parameter arity mismatch");
  if (flavor == Flavor::K) validate_k_params(params);
}

KLin multiply(const KLin& a, const KLin& b, const HopfContext& ctx) {
  if (ctx.flavor == Flavor::K)
    throw domain_error("the k-flavor quotient has no product");
  KLin r;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) r.add(forest_concat(ka, kb, ctx.n), ca * cb);
  return r;
}

TLin tensor_multiply(const TLin& a, const TLin& b, const HopfContext& ctx) {
  TLin r;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms)
      r.add(TKey{forest_concat(ka.a, kb.a, ctx.n), forest_concat(ka.b, kb.b, ctx.n)}, ca * cb);
  return r;
}

TLin coproduct_key(const Key& k, const HopfContext& ctx) {
  if (ctx.flavor != Flavor::Unordered && ctx.flavor != Flavor::Planar)
    throw domain_error("coproduct needs the unordered or planar flavor");
  if (k.degree > ctx.cap) throw cap_error("degree cap exceeded (ARBOR_MAX_DEGREE)");
  auto it = ctx.coprod_memo.find(k.text);
  if (it != ctx.coprod_memo.end()) return it->second;
  RigidTree t = tree_of(k, ctx.n);
  int m = t.size();
  Mask full = m == 0 ? 0 : (Mask(1) << m) - 1;
  TLin out;
  for (Mask s = 0;; ++s) {
    Coeff q = q_coeff(t, s, ctx.params);
    if (!q.is_zero()) out.add(TKey{induce(t, s), induce(t, full & ~s)}, q);
    if (s == full) break;
  }
  ctx.coprod_memo.emplace(k.text, out);
  return out;
}

TLin coproduct(const KLin& x, const HopfContext& ctx) {
  TLin r;
  for (const auto& [k, c] : x.terms) {
    TLin d = coproduct_key(k, ctx);
    for (const auto& [tk, tc] : d.terms) r.add(tk, c * tc);
  }
  return r;
}

Coeff counit(const KLin& x, const HopfContext& ctx) {
  return coefficient_of(x, ctx.unit(), ctx.params);
}

TLin reduced_coproduct(const KLin& x, const HopfContext& ctx) {
  Key u = ctx.unit();
  for (const auto& [k, c] : x.terms)
    if (k.is_unit()) throw domain_error("reduced coproduct needs the augmentation ideal");
  TLin r = coproduct(x, ctx);
  for (const auto& [k, c] : x.terms) {
    r.add(TKey{k, u}, -c);
    r.add(TKey{u, k}, -c);
  }
  return r;
}

namespace {

KLin chain_product(const std::vector<Key>& chain, const Coeff& c, const HopfContext& ctx) {
  Key prod = ctx.unit();
  for (const auto& k : chain) prod = forest_concat(prod, k, ctx.n);
  return single(prod, c);
}

} // namespace

KLin antipode_series(const KLin& x, const HopfContext& ctx) {
  Coeff c0 = counit(x, ctx);
  KLin y = x;
  y.terms.erase(ctx.unit());
  // S(x) = sum_{k>=0} (-1)^{k+1} mu^{(k)} rdelta^{(k)}(x), rdelta iterated
  // on the first tensor slot; terminates since rdelta lowers that degree.
  KLin out = -y;
  std::map<std::vector<Key>, Coeff> chains;
  for (const auto& [k, c] : y.terms) chains.emplace(std::vector<Key>{k}, c);
  int sign = 1; // (-1)^{k+1} for the upcoming k = 1
  while (!chains.empty()) {
    std::map<std::vector<Key>, Coeff> next;
    for (const auto& [chain, c] : chains) {
      TLin d = reduced_coproduct(single(chain[0], ctx.params.one()), ctx);
      for (const auto& [tk, tc] : d.terms) {
        std::vector<Key> nc;
        nc.reserve(chain.size() + 1);
        nc.push_back(tk.a);
        nc.push_back(tk.b);
        nc.insert(nc.end(), chain.begin() + 1, chain.end());
        Coeff add = c * tc;
        auto it = next.find(nc);
        if (it == next.end()) next.emplace(std::move(nc), add);
        else it->second = it->second + add;
      }
    }
    chains = std::move(next);
    for (const auto& [chain, c] : chains) {
      if (c.is_zero()) continue;
      KLin term = chain_product(chain, c, ctx);
      out = sign > 0 ? out + term : out - term;
    }
    sign = -sign;
  }
  out.add(ctx.unit(), c0);
  return out;
}

namespace {

Mask remap_mask(Mask s, const std::vector<int>& vmap, int size) {
  Mask out = 0;
  for (int v = 0; v < size; ++v)
    if ((s >> v & 1) && vmap[v] >= 0) out |= Mask(1) << vmap[v];
  return out;
}

struct PartitionAntipode {
  const RigidTree& t;
  const HopfContext& ctx;
  std::map<Mask, KLin> memo;

  // Sum over ordered tuples of disjoint nonempty blocks covering rem of
  // (-1)^k block_1 ... block_k with q-factors taken inside the forest
  // induced by each tail.
  KLin run(Mask rem) {
    auto it = memo.find(rem);
    if (it != memo.end()) return it->second;
    std::vector<int> vmap;
    RigidTree amb = induce_rigid(t, rem, &vmap);
    KLin out;
    for (Mask s = rem; s; s = (s - 1) & rem) {
      Key block = induce(t, s);
      if (s == rem) {
        out.add(block, -ctx.params.one());
        continue;
      }
      Coeff q = q_coeff(amb, remap_mask(s, vmap, t.size()), ctx.params);
      if (q.is_zero()) continue;
      KLin rest = run(rem & ~s);
      for (const auto& [k2, c2] : rest.terms)
        out.add(forest_concat(block, k2, ctx.n), -(q * c2));
    }
    memo.emplace(rem, out);
    return out;
  }
};

} // namespace

KLin antipode_partitions(const KLin& x, const HopfContext& ctx) {
  if (ctx.flavor != Flavor::Unordered && ctx.flavor != Flavor::Planar)
    throw domain_error("antipode needs the unordered or planar flavor");
  Coeff c0 = counit(x, ctx);
  KLin out;
  out.add(ctx.unit(), c0);
  for (const auto& [k, c] : x.terms) {
    if (k.is_unit()) continue;
    if (k.degree > ctx.cap) throw cap_error("degree cap exceeded (ARBOR_MAX_DEGREE)");
    RigidTree t = tree_of(k, ctx.n);
    PartitionAntipode pa{t, ctx, {}};
    Mask full = (Mask(1) << t.size()) - 1;
    KLin st = pa.run(full);
    for (const auto& [k2, c2] : st.terms) out.add(k2, c * c2);
  }
  return out;
}

KLin convolve(const KeyMap& f, const KeyMap& g, const KLin& x, const HopfContext& ctx) {
  TLin d = coproduct(x, ctx);
  KLin r;
  for (const auto& [tk, c] : d.terms) {
    KLin prod = multiply(f(tk.a), g(tk.b), ctx);
    for (const auto& [k, c2] : prod.terms) r.add(k, c * c2);
  }
  return r;
}

namespace {

TLin ck_coproduct_tree(const RigidTree& t, const HopfContext& ctx) {
  TLin out;
  Key whole = canonical_key(t);
  out.add(TKey{whole, Key::unit(ctx.flavor)}, ctx.params.one());
  for (Mask cut : admissible_cuts(t)) {
    auto [p, r] = cut_split(t, cut);
    out.add(TKey{p, r}, ctx.params.one());
  }
  return out;
}

} // namespace

TLin ck_coproduct(const KLin& x, const HopfContext& ctx) {
  if (ctx.n != 1 || ctx.flavor != Flavor::Unordered)
    throw domain_error("the cut coproduct is the n=1 unordered case");
  TLin r;
  for (const auto& [k, c] : x.terms) {
    TLin d;
    d.add(TKey{ctx.unit(), ctx.unit()}, ctx.params.one());
    for (const auto& comp : split_components(k.text)) {
      RigidTree t = parse_forest(comp, ctx.flavor, ctx.n);
      d = tensor_multiply(d, ck_coproduct_tree(t, ctx), ctx);
    }
    for (const auto& [tk, tc] : d.terms) r.add(tk, c * tc);
  }
  return r;
}

namespace {

// Keys carry no arity, so validity re-parses with the widest one.
bool keep_k_key(const Key& k, KProjectStats* stats) {
  if (k.is_unit()) return true;
  if (split_components(k.text).size() > 1) {
    if (stats) ++stats->dropped_forest;
    return false;
  }
  if (!is_k_valid(parse_forest(k.text, Flavor::Unordered, 9))) {
    if (stats) ++stats->dropped_invalid;
    return false;
  }
  return true;
}

} // namespace

KLin project_k(const KLin& x, KProjectStats* stats) {
  KLin r;
  for (const auto& [k, c] : x.terms)
    if (keep_k_key(k, stats)) r.add(k, c);
  return r;
}

TLin project_k(const TLin& x, KProjectStats* stats) {
  TLin r;
  for (const auto& [tk, c] : x.terms) {
    bool left = keep_k_key(tk.a, stats);
    bool right = keep_k_key(tk.b, stats);
    if (left && right) r.add(tk, c);
  }
  return r;
}

TLin k_coproduct(const KLin& x, const HopfContext& ctx, KProjectStats* stats) {
  validate_k_params(ctx.params);
  HopfContext uctx(Flavor::Unordered, ctx.n, ctx.params);
  uctx.cap = ctx.cap;
  KLin ux;
  for (const auto& [k, c] : x.terms)
    ux.add(Key{Flavor::Unordered, k.degree, k.text}, c);
  return project_k(coproduct(ux, uctx), stats);
}

} // namespace arbor
