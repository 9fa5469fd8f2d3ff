#pragma once

#include <functional>
#include <map>
#include <string>

#include "arbor/errors.hpp"
#include "arbor/tree.hpp"

namespace arbor {

/** Ordered tensor pair; print/term order is (total, left, right). */
struct TKey {
  Key a, b;

  int degree() const { return a.degree + b.degree; }
  friend bool operator<(const TKey& x, const TKey& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    if (!(x.a == y.a)) return x.a < y.a;
    return x.b < y.b;
  }
  friend bool operator==(const TKey& x, const TKey& y) { return x.a == y.a && x.b == y.b; }
};

inline std::string key_text(const Key& k) { return k.text; }
inline std::string key_text(const TKey& k) { return k.a.text + " (x) " + k.b.text; }
inline int key_degree(const Key& k) { return k.degree; }
inline int key_degree(const TKey& k) { return k.degree(); }

template <class K>
struct Lin {
  std::map<K, Coeff> terms;

  bool is_zero() const { return terms.empty(); }

  void add(const K& k, const Coeff& c) {
    if (c.is_zero()) return;
    auto it = terms.find(k);
    if (it == terms.end()) {
      terms.emplace(k, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
  }

  Lin operator+(const Lin& o) const {
    Lin r = *this;
    for (const auto& [k, c] : o.terms) r.add(k, c);
    return r;
  }
  Lin operator-(const Lin& o) const {
    Lin r = *this;
    for (const auto& [k, c] : o.terms) r.add(k, -c);
    return r;
  }
  Lin operator-() const {
    Lin r;
    for (const auto& [k, c] : terms) r.terms.emplace(k, -c);
    return r;
  }
  bool operator==(const Lin& o) const {
    if (terms.size() != o.terms.size()) return false;
    auto it = o.terms.begin();
    for (const auto& [k, c] : terms) {
      if (!(it->first == k) || !(it->second == c)) return false;
      ++it;
    }
    return true;
  }
  bool operator!=(const Lin& o) const { return !(*this == o); }
};

template <class K>
Lin<K> scale(const Lin<K>& x, const Coeff& c) {
  Lin<K> r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : x.terms) r.add(k, v * c);
  return r;
}

template <class K>
Lin<K> scale_int(const Lin<K>& x, long m) {
  Lin<K> r;
  if (m == 0) return r;
  for (const auto& [k, v] : x.terms) {
    Coeff c = v.is_rational() ? Coeff(v.rat() * m)
                              : Coeff(v.poly() * MPoly(v.poly().nvars(), Rational(m)));
    r.add(k, c);
  }
  return r;
}

template <class K>
Lin<K> single(const K& k, const Coeff& c) {
  Lin<K> r;
  r.add(k, c);
  return r;
}

inline Lin<TKey> tensor(const Lin<Key>& x, const Lin<Key>& y) {
  Lin<TKey> r;
  for (const auto& [ka, ca] : x.terms)
    for (const auto& [kb, cb] : y.terms) r.add(TKey{ka, kb}, ca * cb);
  return r;
}

template <class K, class K2>
Lin<K2> extend_linear(const std::function<Lin<K2>(const K&)>& f, const Lin<K>& x) {
  Lin<K2> r;
  for (const auto& [k, c] : x.terms) {
    Lin<K2> fx = f(k);
    for (const auto& [k2, c2] : fx.terms) r.add(k2, c * c2);
  }
  return r;
}

template <class K>
Coeff coefficient_of(const Lin<K>& x, const K& k, const Params& params) {
  auto it = x.terms.find(k);
  return it == x.terms.end() ? params.zero() : it->second;
}

template <class K>
Lin<K> graded_part(const Lin<K>& x, int d) {
  Lin<K> r;
  for (const auto& [k, c] : x.terms)
    if (key_degree(k) == d) r.terms.emplace(k, c);
  return r;
}

template <class K>
std::string to_string(const Lin<K>& x) {
  if (x.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms) {
    if (!first) out += " + ";
    first = false;
    if (!c.is_one()) {
      if (c.needs_parens()) out += "(" + c.str() + ") ";
      else out += c.str() + " ";
    }
    out += key_text(k);
  }
  return out;
}

using KLin = Lin<Key>;
using TLin = Lin<TKey>;

/** Triple tensor key, used only for associativity-style comparisons. */
struct T3Key {
  Key a, b, c;

  int degree() const { return a.degree + b.degree + c.degree; }
  friend bool operator<(const T3Key& x, const T3Key& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    if (!(x.a == y.a)) return x.a < y.a;
    if (!(x.b == y.b)) return x.b < y.b;
    return x.c < y.c;
  }
  friend bool operator==(const T3Key& x, const T3Key& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

inline std::string key_text(const T3Key& k) {
  return k.a.text + " (x) " + k.b.text + " (x) " + k.c.text;
}
inline int key_degree(const T3Key& k) { return k.degree(); }

using T3Lin = Lin<T3Key>;

/** (delta (x) id) applied to a 2-tensor, delta given per basis key. */
template <class F>
T3Lin expand_left(const TLin& d, F delta) {
  T3Lin r;
  for (const auto& [tk, c] : d.terms) {
    TLin in = delta(tk.a);
    for (const auto& [tk2, c2] : in.terms) r.add(T3Key{tk2.a, tk2.b, tk.b}, c * c2);
  }
  return r;
}

/** (id (x) delta) applied to a 2-tensor. */
template <class F>
T3Lin expand_right(const TLin& d, F delta) {
  T3Lin r;
  for (const auto& [tk, c] : d.terms) {
    TLin in = delta(tk.b);
    for (const auto& [tk2, c2] : in.terms) r.add(T3Key{tk.a, tk2.a, tk2.b}, c * c2);
  }
  return r;
}

} // namespace arbor
