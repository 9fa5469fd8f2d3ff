#include "arbor/tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "arbor/errors.hpp"

namespace arbor {

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Unordered: return "unordered";
    case Flavor::Planar: return "planar";
    case Flavor::K: return "k";
    case Flavor::Nary: return "nary";
    case Flavor::Labeled: return "labeled";
  }
  return "?";
}

void RigidTree::rebuild() {
  children.assign(parent.size(), {});
  roots.clear();
  for (int v = 0; v < size(); ++v) {
    if (parent[v] == -1) roots.push_back(v);
    else children[parent[v]].push_back(v);
  }
}

std::vector<int> preorder(const RigidTree& t) {
  std::vector<int> out;
  out.reserve(t.size());
  std::vector<int> stack;
  for (auto rit = t.roots.rbegin(); rit != t.roots.rend(); ++rit) stack.push_back(*rit);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    const auto& ch = t.children[v];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

namespace {

struct Parser {
  const std::string& text;
  Flavor flavor;
  int n;
  std::size_t pos = 0;
  RigidTree out;

  [[noreturn]] void fail(const std::string& why) const {
    throw parse_error("position " + std::to_string(pos) + ": " + why);
  }
  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool peek(char c) const { return pos < text.size() && text[pos] == c; }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  int number() {
    if (pos >= text.size() || !isdigit((unsigned char)text[pos])) fail("expected a number");
    long v = 0;
    while (pos < text.size() && isdigit((unsigned char)text[pos])) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) fail("number too large");
      ++pos;
    }
    return (int)v;
  }
  int color_in_range() {
    int c = number();
    if (c < 1 || c > n) fail("color " + std::to_string(c) + " outside 1.." + std::to_string(n));
    return c;
  }

  // Returns the new vertex index; col is the edge color (vertex label for
  // the Labeled flavor), parent wired by the caller.
  int tree(int parent_idx, int col) {
    expect('[');
    int v = (int)out.parent.size();
    out.parent.push_back(parent_idx);
    out.color.push_back(col);
    out.children.emplace_back();
    if (flavor == Flavor::Labeled) {
      // the '[' was consumed; label precedes '|'
      int label = number();
      if (label < 1 || label > n) fail("label outside 1.." + std::to_string(n));
      out.color[v] = label;
      expect('|');
    }
    skip_ws();
    std::set<int> seen_colors;
    while (!peek(']')) {
      int child;
      if (flavor == Flavor::Labeled) {
        child = tree(v, 0);
      } else {
        int c = color_in_range();
        expect(':');
        if (flavor == Flavor::K && !seen_colors.insert(c).second)
          fail("duplicate color " + std::to_string(c) + " at one vertex");
        child = tree(v, c);
      }
      out.children[v].push_back(child);
      skip_ws();
    }
    expect(']');
    if (flavor == Flavor::Planar) {
      auto& ch = out.children[v];
      std::stable_sort(ch.begin(), ch.end(),
                       [&](int a, int b) { return out.color[a] < out.color[b]; });
    }
    return v;
  }

  RigidTree forest() {
    out.flavor = flavor;
    out.n = n;
    skip_ws();
    if (peek('1')) {
      ++pos;
      skip_ws();
      if (pos != text.size()) fail("trailing input after unit");
      return out;
    }
    while (true) {
      int root = tree(-1, flavor == Flavor::Labeled ? 1 : 0);
      out.roots.push_back(root);
      skip_ws();
      if (pos == text.size()) break;
      expect('*');
      skip_ws();
    }
    return out;
  }
};

std::string encode_vertex(const RigidTree& t, int v);

std::string encode_children(const RigidTree& t, int v) {
  std::vector<std::string> parts;
  parts.reserve(t.children[v].size());
  for (int c : t.children[v]) {
    if (t.flavor == Flavor::Labeled) parts.push_back(encode_vertex(t, c));
    else parts.push_back(std::to_string(t.color[c]) + ":" + encode_vertex(t, c));
  }
  if (t.flavor == Flavor::Unordered || t.flavor == Flavor::K || t.flavor == Flavor::Labeled)
    std::sort(parts.begin(), parts.end());
  else if (t.flavor == Flavor::Planar)
    // Children must refine the color order; keep the order within a color
    // class (that is the planar data) but normalize across classes.
    std::stable_sort(parts.begin(), parts.end(),
                     [](const std::string& a, const std::string& b) { return a[0] < b[0]; });
  std::string body;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) body += " ";
    body += parts[i];
  }
  return body;
}

std::string encode_vertex(const RigidTree& t, int v) {
  if (t.flavor == Flavor::Labeled)
    return "[" + std::to_string(t.color[v]) + "|" + encode_children(t, v) + "]";
  return "[" + encode_children(t, v) + "]";
}

// Sorting "1:x" strings sorts single-digit colors numerically; reject wider
// colors so the canonical order stays (color, encoding).
void check_encodable(const RigidTree& t) {
  if (t.n > 9) throw domain_error("more than 9 colors is not supported");
}

} // namespace

RigidTree parse_forest(const std::string& text, Flavor flavor, int n) {
  if (flavor == Flavor::Nary) throw domain_error("nary trees use their own parser");
  if (n < 1) throw domain_error("arity must be >= 1");
  Parser p{text, flavor, n};
  RigidTree t = p.forest();
  check_encodable(t);
  return t;
}

std::string format_forest(const RigidTree& t) {
  check_encodable(t);
  if (t.size() == 0) return "1";
  std::vector<std::string> comps;
  comps.reserve(t.roots.size());
  for (int r : t.roots) comps.push_back(encode_vertex(t, r));
  if (t.flavor != Flavor::Planar) std::sort(comps.begin(), comps.end());
  std::string out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += "*";
    out += comps[i];
  }
  return out;
}

Key canonical_key(const RigidTree& t) {
  return Key{t.flavor, t.size(), format_forest(t)};
}

Key key_of(const std::string& text, Flavor flavor, int n) {
  return canonical_key(parse_forest(text, flavor, n));
}

RigidTree tree_of(const Key& key, int n) {
  return parse_forest(key.text, key.flavor, n);
}

std::vector<std::string> split_components(const std::string& text) {
  if (text == "1") return {};
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '*' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    if (c == '[') ++depth;
    if (c == ']') --depth;
    cur += c;
  }
  out.push_back(cur);
  return out;
}

Key forest_concat(const Key& a, const Key& b, int /*n*/) {
  if (a.flavor != b.flavor) throw domain_error("flavor mismatch in product");
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  auto ca = split_components(a.text);
  auto cb = split_components(b.text);
  ca.insert(ca.end(), cb.begin(), cb.end());
  if (a.flavor != Flavor::Planar) std::sort(ca.begin(), ca.end());
  std::string text;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (i) text += "*";
    text += ca[i];
  }
  return Key{a.flavor, a.degree + b.degree, text};
}

namespace {

struct UnorderedGen {
  int n;
  std::map<int, std::vector<std::string>> memo;

  const std::vector<std::string>& trees(int m) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    std::vector<std::string> out;
    if (m == 1) {
      out.push_back("[]");
    } else if (m > 1) {
      // items: all (color, subtree) pairs with subtree size < m, in child
      // sort order (color, encoding)
      std::vector<std::pair<std::string, int>> items; // (item text, weight)
      for (int c = 1; c <= n; ++c)
        for (int sz = 1; sz < m; ++sz)
          for (const auto& sub : trees(sz))
            items.emplace_back(std::to_string(c) + ":" + sub, sz);
      std::sort(items.begin(), items.end());
      std::vector<std::size_t> pick;
      rec(items, 0, m - 1, pick, out);
      std::sort(out.begin(), out.end());
    }
    return memo.emplace(m, std::move(out)).first->second;
  }

  void rec(const std::vector<std::pair<std::string, int>>& items, std::size_t min_i, int w,
           std::vector<std::size_t>& pick, std::vector<std::string>& out) {
    if (w == 0) {
      std::string body;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        if (i) body += " ";
        body += items[pick[i]].first;
      }
      out.push_back("[" + body + "]");
      return;
    }
    for (std::size_t i = min_i; i < items.size(); ++i) {
      if (items[i].second > w) continue;
      pick.push_back(i);
      rec(items, i, w - items[i].second, pick, out);
      pick.pop_back();
    }
  }
};

struct SeqGen { // planar and k flavors
  Flavor flavor;
  int n;
  std::map<int, std::vector<std::string>> memo;

  const std::vector<std::string>& trees(int m) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    std::vector<std::string> out;
    if (m == 1) {
      out.push_back("[]");
    } else if (m > 1) {
      std::string prefix;
      rec(m - 1, 1, prefix, out);
      std::sort(out.begin(), out.end());
    }
    return memo.emplace(m, std::move(out)).first->second;
  }

  void rec(int w, int min_c, std::string& prefix, std::vector<std::string>& out) {
    if (w == 0) {
      out.push_back("[" + prefix + "]");
      return;
    }
    for (int c = min_c; c <= n; ++c) {
      for (int sz = 1; sz <= w; ++sz) {
        for (const auto& sub : trees(sz)) {
          std::size_t mark = prefix.size();
          if (!prefix.empty()) prefix += " ";
          prefix += std::to_string(c) + ":" + sub;
          rec(w - sz, flavor == Flavor::K ? c + 1 : c, prefix, out);
          prefix.resize(mark);
        }
      }
    }
  }
};

std::vector<Key> to_keys(Flavor flavor, const std::vector<std::string>& texts, int m) {
  std::vector<Key> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(Key{flavor, m, t});
  return out;
}

} // namespace

std::vector<Key> enumerate_trees(Flavor flavor, int n, int m) {
  if (m < 0 || n < 1) throw domain_error("bad enumeration bounds");
  if (n > 9) throw domain_error("more than 9 colors is not supported");
  if (m == 0) return {Key::unit(flavor)};
  static std::map<std::tuple<Flavor, int, int>, std::vector<Key>> cache;
  auto it = cache.find({flavor, n, m});
  if (it != cache.end()) return it->second;
  std::vector<Key> out;
  if (flavor == Flavor::Unordered) {
    UnorderedGen g{n};
    out = to_keys(flavor, g.trees(m), m);
  } else if (flavor == Flavor::Planar || flavor == Flavor::K) {
    SeqGen g{flavor, n};
    out = to_keys(flavor, g.trees(m), m);
  } else {
    throw domain_error("no enumerator for this flavor");
  }
  cache.emplace(std::make_tuple(flavor, n, m), out);
  return out;
}

std::vector<Key> enumerate_forests(Flavor flavor, int n, int m) {
  if (m == 0) return {Key::unit(flavor)};
  if (flavor == Flavor::K) return enumerate_trees(flavor, n, m);
  static std::map<std::tuple<Flavor, int, int>, std::vector<Key>> cache;
  auto cit = cache.find({flavor, n, m});
  if (cit != cache.end()) return cit->second;
  std::vector<std::vector<std::string>> trees_by_size(m + 1);
  for (int sz = 1; sz <= m; ++sz)
    for (const auto& k : enumerate_trees(flavor, n, sz)) trees_by_size[sz].push_back(k.text);
  std::set<std::string> texts;
  // components as (size, text) items; unordered forests sort components,
  // planar forests keep every order
  struct Item { int sz; std::string text; };
  std::vector<Item> items;
  for (int sz = 1; sz <= m; ++sz)
    for (const auto& t : trees_by_size[sz]) items.push_back({sz, t});
  std::vector<std::size_t> pick;
  auto emit = [&]() {
    std::vector<std::string> comps;
    for (auto i : pick) comps.push_back(items[i].text);
    if (flavor != Flavor::Planar) std::sort(comps.begin(), comps.end());
    std::string text;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (i) text += "*";
      text += comps[i];
    }
    texts.insert(text);
  };
  // unordered: non-decreasing item indices; planar: arbitrary sequences
  auto rec = [&](auto&& self, int w, std::size_t min_i) -> void {
    if (w == 0) {
      emit();
      return;
    }
    for (std::size_t i = flavor == Flavor::Planar ? 0 : min_i; i < items.size(); ++i) {
      if (items[i].sz > w) continue;
      pick.push_back(i);
      self(self, w - items[i].sz, i);
      pick.pop_back();
    }
  };
  rec(rec, m, 0);
  std::vector<Key> out;
  for (const auto& t : texts) out.push_back(Key{flavor, m, t});
  cache.emplace(std::make_tuple(flavor, n, m), out);
  return out;
}

std::vector<Key> enumerate_trees_bruteforce(Flavor flavor, int n, int m) {
  if (m == 0) return {Key::unit(flavor)};
  std::set<Key> keys;
  std::vector<int> par(m, -1), col(m, 0);
  auto color_rec = [&](auto&& self, int v) -> void {
    if (v == m) {
      RigidTree t;
      t.flavor = flavor;
      t.n = n;
      t.parent = par;
      t.color = col;
      t.rebuild();
      if (flavor == Flavor::K && !is_k_valid(t)) return;
      keys.insert(canonical_key(t));
      return;
    }
    for (int c = 1; c <= n; ++c) {
      col[v] = c;
      self(self, v + 1);
    }
  };
  auto parent_rec = [&](auto&& self, int v) -> void {
    if (v == m) {
      color_rec(color_rec, 1);
      return;
    }
    for (int p = 0; p < v; ++p) {
      par[v] = p;
      self(self, v + 1);
    }
  };
  parent_rec(parent_rec, 1);
  return {keys.begin(), keys.end()};
}

RigidTree induce_rigid(const RigidTree& t, Mask s, std::vector<int>* vmap) {
  std::vector<int> order = preorder(t);
  std::vector<int> newidx(t.size(), -1);
  std::vector<int> verts;
  for (int v : order) {
    if (s >> v & 1) {
      newidx[v] = (int)verts.size();
      verts.push_back(v);
    }
  }
  RigidTree r;
  r.flavor = t.flavor;
  r.n = t.n;
  r.parent.assign(verts.size(), -1);
  r.color.assign(verts.size(), 0);
  r.children.assign(verts.size(), {});
  for (int i = 0; i < (int)verts.size(); ++i) {
    int x = verts[i];
    while (t.parent[x] != -1) {
      int w = t.parent[x];
      if (s >> w & 1) {
        r.parent[i] = newidx[w];
        r.color[i] = t.color[x];
        break;
      }
      x = w;
    }
  }
  for (int i = 0; i < (int)verts.size(); ++i) {
    if (r.parent[i] == -1) r.roots.push_back(i);
    else r.children[r.parent[i]].push_back(i);
  }
  if (vmap) *vmap = newidx;
  return r;
}

Key induce(const RigidTree& t, Mask s) { return canonical_key(induce_rigid(t, s)); }

int p_count(const RigidTree& t, int v, Mask s, int k) {
  int count = 0;
  int x = v;
  while (t.parent[x] != -1) {
    int w = t.parent[x];
    if (t.color[x] == k && !(s >> w & 1)) ++count;
    x = w;
  }
  return count;
}

Coeff q_coeff(const RigidTree& t, Mask s, const Params& params) {
  Coeff out = params.one();
  for (int j = 1; j <= t.n; ++j) {
    unsigned e1 = 0, e2 = 0;
    for (int v = 0; v < t.size(); ++v) {
      if (s >> v & 1) e1 += (unsigned)p_count(t, v, s, j);
      else e2 += (unsigned)p_count(t, v, ~s, j);
    }
    if (e1) out = out * params.qpow(1, j, e1);
    if (e2) out = out * params.qpow(2, j, e2);
  }
  return out;
}

std::vector<Mask> admissible_cuts(const RigidTree& t) {
  if (!t.single_tree()) throw domain_error("admissible cuts need a single tree");
  std::vector<Mask> anc(t.size(), 0);
  for (int v : preorder(t)) {
    if (t.parent[v] != -1) anc[v] = anc[t.parent[v]] | (Mask(1) << t.parent[v]);
  }
  std::vector<int> nonroot;
  for (int v = 0; v < t.size(); ++v)
    if (t.parent[v] != -1) nonroot.push_back(v);
  std::vector<Mask> cuts;
  int e = (int)nonroot.size();
  for (Mask pickbits = 0; pickbits < (Mask(1) << e); ++pickbits) {
    Mask cut = 0;
    for (int i = 0; i < e; ++i)
      if (pickbits >> i & 1) cut |= Mask(1) << nonroot[i];
    bool ok = true;
    for (int i = 0; i < e && ok; ++i)
      if (pickbits >> i & 1) ok = (anc[nonroot[i]] & cut) == 0;
    if (ok) cuts.push_back(cut);
  }
  return cuts;
}

std::pair<Key, Key> cut_split(const RigidTree& t, Mask cut) {
  if (!t.single_tree()) throw domain_error("cut_split needs a single tree");
  std::vector<Mask> sub(t.size(), 0);
  std::vector<int> order = preorder(t);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    sub[v] = Mask(1) << v;
    for (int c : t.children[v]) sub[v] |= sub[c];
  }
  Mask pruned = 0;
  for (int v = 0; v < t.size(); ++v) {
    if (!(cut >> v & 1)) continue;
    if (t.parent[v] == -1) throw domain_error("cut contains a root");
    if (pruned & sub[v]) throw domain_error("cut is not admissible");
    pruned |= sub[v];
  }
  Mask all = t.size() == 64 ? ~Mask(0) : (Mask(1) << t.size()) - 1;
  return {induce(t, pruned), induce(t, all & ~pruned)};
}

namespace {

// Appends the vertices of s to u, wiring the root of s under v with the
// given edge color (or as a labeled child when color == 0).
Key graft_impl(const RigidTree& s, const RigidTree& t, int v, int color) {
  if (s.size() == 0 || t.size() == 0) throw domain_error("graft needs nonempty trees");
  if (!s.single_tree() || !t.single_tree()) throw domain_error("graft needs single trees");
  if (v < 0 || v >= t.size()) throw domain_error("graft vertex out of range");
  RigidTree u = t;
  int off = t.size();
  u.parent.resize(off + s.size());
  u.color.resize(off + s.size());
  u.children.resize(off + s.size());
  for (int i = 0; i < s.size(); ++i) {
    u.parent[off + i] = s.parent[i] == -1 ? v : s.parent[i] + off;
    u.color[off + i] = s.color[i];
    u.children[off + i].clear();
    for (int c : s.children[i]) u.children[off + i].push_back(c + off);
  }
  int sroot = s.roots[0] + off;
  if (color != 0) u.color[sroot] = color;
  auto& ch = u.children[v];
  if (u.flavor == Flavor::Planar) {
    auto it = ch.begin();
    while (it != ch.end() && u.color[*it] <= u.color[sroot]) ++it;
    ch.insert(it, sroot);
  } else {
    ch.push_back(sroot);
  }
  return canonical_key(u);
}

} // namespace

Key graft(const RigidTree& s, const RigidTree& t, int v, int color) {
  if (color < 1 || color > t.n) throw domain_error("graft color out of range");
  return graft_impl(s, t, v, color);
}

Key graft_labeled(const RigidTree& s, const RigidTree& t, int v) {
  if (s.flavor != Flavor::Labeled || t.flavor != Flavor::Labeled)
    throw domain_error("graft_labeled needs labeled trees");
  return graft_impl(s, t, v, 0);
}

namespace {

Integer factorial(int m) {
  Integer f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

Integer aut_vertex(const RigidTree& t, int v, const std::vector<std::string>& enc) {
  Integer a = 1;
  std::map<std::pair<int, std::string>, int> classes;
  for (int c : t.children[v]) {
    a *= aut_vertex(t, c, enc);
    ++classes[{t.color[c], enc[c]}];
  }
  for (const auto& [cls, mult] : classes) a *= factorial(mult);
  return a;
}

} // namespace

Integer aut_count(const RigidTree& t) {
  if (t.flavor != Flavor::Unordered && t.flavor != Flavor::Labeled)
    throw domain_error("aut_count needs an unordered flavor");
  std::vector<std::string> enc(t.size());
  for (int v = 0; v < t.size(); ++v) enc[v] = encode_vertex(t, v);
  Integer a = 1;
  std::map<std::string, int> comps;
  for (int r : t.roots) {
    a *= aut_vertex(t, r, enc);
    ++comps[enc[r]];
  }
  for (const auto& [e, mult] : comps) a *= factorial(mult);
  return a;
}

Mask p_component(const RigidTree& t, const std::vector<int>& pset) {
  if (!t.single_tree()) throw domain_error("p_component needs a single tree");
  std::vector<bool> in_p(t.n + 1, false);
  for (int c : pset) {
    if (c < 1 || c > t.n) throw domain_error("color set entry out of range");
    in_p[c] = true;
  }
  Mask out = Mask(1) << t.roots[0];
  for (int v : preorder(t)) {
    if (t.parent[v] == -1) continue;
    if ((out >> t.parent[v] & 1) && in_p[t.color[v]]) out |= Mask(1) << v;
  }
  return out;
}

bool is_k_valid(const RigidTree& t) {
  for (int v = 0; v < t.size(); ++v) {
    std::set<int> seen;
    for (int c : t.children[v])
      if (!seen.insert(t.color[c]).second) return false;
  }
  return true;
}

} // namespace arbor
