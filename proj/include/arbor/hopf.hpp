#pragma once

#include <functional>
#include <map>
#include <string>

#include "arbor/lincomb.hpp"

namespace arbor {

int global_degree_cap();

/** Parameter-row condition for the k-flavor: at most one nonzero per row. */
void validate_k_params(const Params& params);

struct HopfContext {
  Flavor flavor = Flavor::Unordered;
  int n = 1;
  Params params;
  int cap = 7;
  mutable std::map<std::string, TLin> coprod_memo;

  HopfContext(Flavor f, int arity, Params p);

  Key unit() const { return Key::unit(flavor); }
  KLin one() const { return single(unit(), params.one()); }
};

KLin multiply(const KLin& a, const KLin& b, const HopfContext& ctx);
/** Componentwise product on tensors: (a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2. */
TLin tensor_multiply(const TLin& a, const TLin& b, const HopfContext& ctx);

TLin coproduct_key(const Key& k, const HopfContext& ctx);
TLin coproduct(const KLin& x, const HopfContext& ctx);
Coeff counit(const KLin& x, const HopfContext& ctx);
TLin reduced_coproduct(const KLin& x, const HopfContext& ctx);

KLin antipode_series(const KLin& x, const HopfContext& ctx);
KLin antipode_partitions(const KLin& x, const HopfContext& ctx);

using KeyMap = std::function<KLin(const Key&)>;
KLin convolve(const KeyMap& f, const KeyMap& g, const KLin& x, const HopfContext& ctx);

/** Admissible-cut coproduct (n = 1, unordered), multiplicative on forests. */
TLin ck_coproduct(const KLin& x, const HopfContext& ctx);

struct KProjectStats {
  long dropped_forest = 0;
  long dropped_invalid = 0;
};

/** Quotient by products: keep single k-valid trees (and the unit). */
KLin project_k(const KLin& x, KProjectStats* stats = nullptr);
TLin project_k(const TLin& x, KProjectStats* stats = nullptr);

/** project_k after the unordered deformed coproduct with ctx's params. */
TLin k_coproduct(const KLin& x, const HopfContext& ctx, KProjectStats* stats = nullptr);

} // namespace arbor
