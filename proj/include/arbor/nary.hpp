#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arbor/lincomb.hpp"

namespace arbor {

/** Planar n-ary tree: a leaf, or a node with exactly n ordered subtrees. */
struct Nary {
  int n = 2;
  bool leaf = true;
  std::vector<Nary> kids;

  static Nary make_leaf(int n) { return Nary{n, true, {}}; }
  static Nary make_node(int n, std::vector<Nary> kids);
};

/** Grammar: `L` (or `1`) for the leaf, `(t_1,...,t_n)` for a node. */
Nary nary_parse(const std::string& text, int n);
std::string nary_format(const Nary& t);
int nary_degree(const Nary& t);
Key nary_key(const Nary& t);
Nary nary_of(const Key& key, int n);

std::vector<Key> enumerate_nary(int n, int m);

/** The bijection with k-flavor trees: slot i holds the color-i subtree. */
Key xi(const Nary& t);
Nary xi_inv(const Key& key, int n);

struct DendCtx {
  int n = 2;
  int k = 2, l = 1;
  mutable std::map<std::pair<std::string, std::string>, KLin> star_memo;
  mutable std::map<std::string, TLin> coprod_memo;

  DendCtx(int arity, int kk, int ll);
  Key unit() const { return Key::unit(Flavor::Nary); }
};

/** s*t = lambda(s_1,..,s_k*t,..,s_n) + lambda(t_1,..,s*t_l,..,t_n), unit 1. */
KLin dstar(const Key& a, const Key& b, const DendCtx& ctx);
KLin dstar_lin(const KLin& x, const KLin& y, const DendCtx& ctx);
/** s < t: the first lambda term only. Unit operands are rejected. */
KLin dleft(const Key& a, const Key& b, const DendCtx& ctx);
KLin dleft_lin(const KLin& x, const KLin& y, const DendCtx& ctx);
/** s > t: the second lambda term only. */
KLin dright(const Key& a, const Key& b, const DendCtx& ctx);
KLin dright_lin(const KLin& x, const KLin& y, const DendCtx& ctx);

/** Delta(lambda(a_i)) = sum (a_1'*...*a_n') (x) lambda(a_i'') + t (x) 1. */
TLin lr_coproduct_key(const Key& key, const DendCtx& ctx);
TLin lr_coproduct(const KLin& x, const DendCtx& ctx);
Coeff nary_counit(const KLin& x);

/** Pruning operator, arity 2: P(l(T,L)) = 0, the inductive rule otherwise. */
TLin pruning_P(const Key& key, const DendCtx& ctx);
/** Delta^P(t) = 1 (x) t + P(t) + t (x) 1 (and 1 -> 1 (x) 1). */
TLin delta_pruning(const Key& key, const DendCtx& ctx);

/** Smallest tree (degree, then text) violating coassociativity, if any. */
std::optional<Key> find_noncoassoc_witness(const DendCtx& ctx, int max_degree);

/** Smallest tree pair with Delta(a*b) != Delta(a)*Delta(b), if any. */
std::optional<std::pair<Key, Key>> find_nonmult_witness(const DendCtx& ctx, int max_degree);

} // namespace arbor
