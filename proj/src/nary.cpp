#include "arbor/nary.hpp"

#include <algorithm>

#include "arbor/errors.hpp"
#include "arbor/hopf.hpp"

namespace arbor {

Nary Nary::make_node(int n, std::vector<Nary> kids) {
  if ((int)kids.size() != n) throw domain_error("node needs exactly n subtrees");
  return Nary{n, false, std::move(kids)};
}

namespace {

struct NaryParser {
  const std::string& text;
  int n;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw parse_error("position " + std::to_string(pos) + ": " + why);
  }
  void skip_ws() {
    while (pos < text.size() && isspace((unsigned char)text[pos])) ++pos;
  }
  Nary tree() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == 'L' || c == '1') {
      ++pos;
      return Nary::make_leaf(n);
    }
    if (c != '(') fail("expected 'L' or '('");
    ++pos;
    std::vector<Nary> kids;
    for (int i = 0; i < n; ++i) {
      if (i) {
        skip_ws();
        if (pos >= text.size() || text[pos] != ',') fail("expected ','");
        ++pos;
      }
      kids.push_back(tree());
    }
    skip_ws();
    if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
    ++pos;
    return Nary::make_node(n, std::move(kids));
  }
  Nary run() {
    Nary t = tree();
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return t;
  }
};

std::string format_sub(const Nary& t) {
  if (t.leaf) return "L";
  std::string out = "(";
  for (int i = 0; i < t.n; ++i) {
    if (i) out += ",";
    out += format_sub(t.kids[i]);
  }
  return out + ")";
}

} // namespace

Nary nary_parse(const std::string& text, int n) {
  if (n < 1) throw domain_error("arity must be >= 1");
  NaryParser p{text, n};
  return p.run();
}

std::string nary_format(const Nary& t) { return t.leaf ? "1" : format_sub(t); }

int nary_degree(const Nary& t) {
  if (t.leaf) return 0;
  int d = 1;
  for (const auto& k : t.kids) d += nary_degree(k);
  return d;
}

Key nary_key(const Nary& t) { return Key{Flavor::Nary, nary_degree(t), nary_format(t)}; }

Nary nary_of(const Key& key, int n) { return nary_parse(key.text, n); }

std::vector<Key> enumerate_nary(int n, int m) {
  if (m == 0) return {Key::unit(Flavor::Nary)};
  std::vector<std::vector<Key>> by_deg(m);
  by_deg[0] = {Key::unit(Flavor::Nary)};
  for (int d = 1; d < m; ++d) by_deg[d] = enumerate_nary(n, d);
  std::vector<std::string> texts;
  std::vector<Nary> kids;
  auto rec = [&](auto&& self, int slot, int budget) -> void {
    if (slot == n) {
      if (budget == 0) texts.push_back(format_sub(Nary::make_node(n, kids)));
      return;
    }
    for (int d = 0; d <= budget; ++d) {
      for (const auto& key : by_deg[d]) {
        kids.push_back(nary_of(key, n));
        self(self, slot + 1, budget - d);
        kids.pop_back();
      }
    }
  };
  rec(rec, 0, m - 1);
  std::sort(texts.begin(), texts.end());
  std::vector<Key> out;
  out.reserve(texts.size());
  for (auto& t : texts) out.push_back(Key{Flavor::Nary, m, t});
  return out;
}

namespace {

std::string xi_text(const Nary& t) {
  std::string body;
  for (int i = 0; i < t.n; ++i) {
    if (t.kids[i].leaf) continue;
    if (!body.empty()) body += " ";
    body += std::to_string(i + 1) + ":" + xi_text(t.kids[i]);
  }
  return "[" + body + "]";
}

} // namespace

Key xi(const Nary& t) {
  if (t.n > 9) throw domain_error("more than 9 colors is not supported");
  if (t.leaf) return Key::unit(Flavor::K);
  return Key{Flavor::K, nary_degree(t), xi_text(t)};
}

namespace {

Nary xi_inv_vertex(const RigidTree& t, int v, int n) {
  std::vector<Nary> kids(n, Nary::make_leaf(n));
  for (int c : t.children[v]) kids[t.color[c] - 1] = xi_inv_vertex(t, c, n);
  return Nary::make_node(n, std::move(kids));
}

} // namespace

Nary xi_inv(const Key& key, int n) {
  if (key.is_unit()) return Nary::make_leaf(n);
  RigidTree t = parse_forest(key.text, Flavor::K, n);
  if (!t.single_tree()) throw domain_error("xi_inv needs a single tree");
  return xi_inv_vertex(t, t.roots[0], n);
}

DendCtx::DendCtx(int arity, int kk, int ll) : n(arity), k(kk), l(ll) {
  if (n < 1) throw domain_error("arity must be >= 1");
  if (k < 1 || k > n || l < 1 || l > n) throw domain_error("k, l must lie in 1..n");
}

namespace {

Coeff rat_one() { return Coeff(Rational(1)); }

KLin node_with_slot(const Nary& base, int slot, const KLin& inner) {
  KLin out;
  for (const auto& [k, c] : inner.terms) {
    Nary t = base;
    t.kids[slot] = nary_of(k, base.n);
    out.add(nary_key(t), c);
  }
  return out;
}

void cap_check_nary(int deg) {
  if (deg > global_degree_cap()) throw cap_error("degree cap exceeded (ARBOR_MAX_DEGREE)");
}

} // namespace

KLin dstar(const Key& a, const Key& b, const DendCtx& ctx) {
  if (a.is_unit()) return single(b, rat_one());
  if (b.is_unit()) return single(a, rat_one());
  cap_check_nary(a.degree + b.degree);
  auto memo_key = std::make_pair(a.text, b.text);
  auto it = ctx.star_memo.find(memo_key);
  if (it != ctx.star_memo.end()) return it->second;
  Nary s = nary_of(a, ctx.n);
  Nary t = nary_of(b, ctx.n);
  KLin out = node_with_slot(s, ctx.k - 1, dstar(nary_key(s.kids[ctx.k - 1]), b, ctx)) +
             node_with_slot(t, ctx.l - 1, dstar(a, nary_key(t.kids[ctx.l - 1]), ctx));
  ctx.star_memo.emplace(memo_key, out);
  return out;
}

KLin dleft(const Key& a, const Key& b, const DendCtx& ctx) {
  if (a.is_unit() || b.is_unit()) throw domain_error("dendriform halves need nonunit operands");
  Nary s = nary_of(a, ctx.n);
  return node_with_slot(s, ctx.k - 1, dstar(nary_key(s.kids[ctx.k - 1]), b, ctx));
}

KLin dright(const Key& a, const Key& b, const DendCtx& ctx) {
  if (a.is_unit() || b.is_unit()) throw domain_error("dendriform halves need nonunit operands");
  Nary t = nary_of(b, ctx.n);
  return node_with_slot(t, ctx.l - 1, dstar(a, nary_key(t.kids[ctx.l - 1]), ctx));
}

namespace {

template <class Op>
KLin bilinear(const KLin& x, const KLin& y, Op op) {
  KLin out;
  for (const auto& [ka, ca] : x.terms)
    for (const auto& [kb, cb] : y.terms) {
      KLin prod = op(ka, kb);
      for (const auto& [k, c] : prod.terms) out.add(k, ca * cb * c);
    }
  return out;
}

} // namespace

KLin dstar_lin(const KLin& x, const KLin& y, const DendCtx& ctx) {
  return bilinear(x, y, [&](const Key& a, const Key& b) { return dstar(a, b, ctx); });
}
KLin dleft_lin(const KLin& x, const KLin& y, const DendCtx& ctx) {
  return bilinear(x, y, [&](const Key& a, const Key& b) { return dleft(a, b, ctx); });
}
KLin dright_lin(const KLin& x, const KLin& y, const DendCtx& ctx) {
  return bilinear(x, y, [&](const Key& a, const Key& b) { return dright(a, b, ctx); });
}

TLin lr_coproduct_key(const Key& key, const DendCtx& ctx) {
  Key u = ctx.unit();
  if (key.is_unit()) {
    TLin r;
    r.add(TKey{u, u}, rat_one());
    return r;
  }
  cap_check_nary(key.degree);
  auto it = ctx.coprod_memo.find(key.text);
  if (it != ctx.coprod_memo.end()) return it->second;
  Nary t = nary_of(key, ctx.n);
  std::vector<TLin> kid_cop;
  kid_cop.reserve(ctx.n);
  for (int i = 0; i < ctx.n; ++i) kid_cop.push_back(lr_coproduct_key(nary_key(t.kids[i]), ctx));
  TLin out;
  std::vector<std::pair<TKey, Coeff>> chosen;
  auto rec = [&](auto&& self, int slot) -> void {
    if (slot == ctx.n) {
      KLin left = single(u, rat_one());
      Nary right = t;
      Coeff c = rat_one();
      for (int i = 0; i < ctx.n; ++i) {
        left = dstar_lin(left, single(chosen[i].first.a, rat_one()), ctx);
        right.kids[i] = nary_of(chosen[i].first.b, ctx.n);
        c = c * chosen[i].second;
      }
      for (const auto& [lk, lc] : left.terms) out.add(TKey{lk, nary_key(right)}, c * lc);
      return;
    }
    for (const auto& [tk, c] : kid_cop[slot].terms) {
      chosen.emplace_back(tk, c);
      self(self, slot + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  out.add(TKey{key, u}, rat_one());
  ctx.coprod_memo.emplace(key.text, out);
  return out;
}

TLin lr_coproduct(const KLin& x, const DendCtx& ctx) {
  TLin r;
  for (const auto& [k, c] : x.terms) {
    TLin d = lr_coproduct_key(k, ctx);
    for (const auto& [tk, tc] : d.terms) r.add(tk, c * tc);
  }
  return r;
}

Coeff nary_counit(const KLin& x) {
  auto it = x.terms.find(Key::unit(Flavor::Nary));
  return it == x.terms.end() ? Coeff(Rational(0)) : it->second;
}

TLin pruning_P(const Key& key, const DendCtx& ctx) {
  if (ctx.n != 2) throw domain_error("pruning is the arity-2 construction");
  if (key.is_unit()) throw domain_error("pruning acts on internal nodes");
  Nary t = nary_of(key, 2);
  const Nary& S = t.kids[1];
  TLin out;
  if (S.leaf) return out;
  TLin ps = pruning_P(nary_key(S), ctx);
  for (const auto& [tk, c] : ps.terms) {
    Nary mod = t;
    mod.kids[1] = nary_of(tk.a, 2);
    out.add(TKey{nary_key(mod), tk.b}, c);
  }
  Nary stump = t;
  stump.kids[1] = Nary::make_leaf(2);
  out.add(TKey{nary_key(stump), nary_key(S)}, rat_one());
  return out;
}

TLin delta_pruning(const Key& key, const DendCtx& ctx) {
  Key u = ctx.unit();
  TLin out;
  if (key.is_unit()) {
    out.add(TKey{u, u}, rat_one());
    return out;
  }
  out.add(TKey{u, key}, rat_one());
  out.add(TKey{key, u}, rat_one());
  return out + pruning_P(key, ctx);
}

std::optional<Key> find_noncoassoc_witness(const DendCtx& ctx, int max_degree) {
  auto delta = [&](const Key& k) { return lr_coproduct_key(k, ctx); };
  for (int m = 1; m <= max_degree; ++m) {
    for (const Key& key : enumerate_nary(ctx.n, m)) {
      TLin d = delta(key);
      if (!(expand_left(d, delta) == expand_right(d, delta))) return key;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Key, Key>> find_nonmult_witness(const DendCtx& ctx, int max_degree) {
  for (int m = 2; m <= max_degree; ++m) {
    for (int da = 1; da < m; ++da) {
      for (const Key& a : enumerate_nary(ctx.n, da)) {
        TLin dea = lr_coproduct_key(a, ctx);
        for (const Key& b : enumerate_nary(ctx.n, m - da)) {
          TLin lhs = lr_coproduct(dstar(a, b, ctx), ctx);
          TLin rhs;
          for (const auto& [ta, ca] : dea.terms)
            for (const auto& [tb, cb] : lr_coproduct_key(b, ctx).terms) {
              KLin left = dstar(ta.a, tb.a, ctx);
              KLin right = dstar(ta.b, tb.b, ctx);
              for (const auto& [lk, lc] : left.terms)
                for (const auto& [rk, rc] : right.terms)
                  rhs.add(TKey{lk, rk}, ca * cb * lc * rc);
            }
          if (!(lhs == rhs)) return std::make_pair(a, b);
        }
      }
    }
  }
  return std::nullopt;
}

} // namespace arbor
