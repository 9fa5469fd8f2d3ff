#pragma once

#include <vector>

#include "arbor/hopf.hpp"

namespace arbor {

/**
 * Dual elements are linear combinations of D_t for single trees t; these
 * functions realize the truncated dual product, the Lie bracket on
 * primitives, the pre-Lie structure and its grafting model.
 */

/** D_s * D_t = sum over trees w of <s (x) t, Delta(w)> D_w. */
KLin dual_star(const Key& s, const Key& t, const HopfContext& ctx);
KLin dual_star_lin(const KLin& x, const KLin& y, const HopfContext& ctx);

KLin lie_bracket(const Key& s, const Key& t, const HopfContext& ctx);
KLin lie_bracket_lin(const KLin& x, const KLin& y, const HopfContext& ctx);

/** Direct pairing: sum of q(a,w) over subsets a with (a, a^c) inducing (s, t). */
Coeff pairing_direct(const Key& s, const Key& t, const Key& w, const HopfContext& ctx);

/** Admissible cuts c of u with P^c(u) = t and R^c(u) = s. */
long cut_count_n(const Key& t, const Key& s, const Key& u, int n);

/**
 * D_s * D_t = sum_u sum_{p in P} n_p(s,t,u) D_u where n_p counts the
 * single-edge cuts of u by a p-colored edge inside the P-component with
 * pruned part t and root part s. Right pre-Lie; coefficients rational.
 */
KLin prelie_star(const Key& s, const Key& t, const std::vector<int>& pset, int n);

/** D_s *' D_t = sum over v in t, p in P of D_{graft(s,t,v,p)}. */
KLin grafting_star(const Key& s, const Key& t, const std::vector<int>& pset, int n);
KLin grafting_star_lin(const KLin& x, const KLin& y, const std::vector<int>& pset, int n);

/** phi(D_t) = a_t D_t. */
KLin phi(const KLin& x, int n);

/** Non-root vertices labeled by their edge color, root label summed over 1..n. */
KLin embed_free_prelie(const Key& t, int n);
KLin embed_free_prelie_lin(const KLin& x, int n);

/** Free pre-Lie product on labeled trees: attach x at every vertex of y. */
KLin free_graft_star(const KLin& x, const KLin& y, int n);

} // namespace arbor
