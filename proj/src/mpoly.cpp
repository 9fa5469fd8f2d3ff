#include "arbor/mpoly.hpp"

#include <numeric>

#include "arbor/errors.hpp"

namespace arbor {

bool GradedLex::operator()(const ExpVec& a, const ExpVec& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  // Ties: higher exponents on earlier variables first, so q1_1 prints before q2_1.
  return a > b;
}

std::string var_name(int nvars, int index) {
  int n = nvars / 2;
  if (index < n) return "q1_" + std::to_string(index + 1);
  return "q2_" + std::to_string(index - n + 1);
}

MPoly::MPoly(int nvars, const Rational& c) : nvars_(nvars) {
  if (c != 0) terms_.emplace(ExpVec(nvars, 0), c);
}

MPoly MPoly::variable(int nvars, int index) {
  ExpVec e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, std::move(e), 1);
}

MPoly MPoly::monomial(int nvars, ExpVec e, const Rational& c) {
  MPoly p(nvars);
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

bool MPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return c == 1 && std::accumulate(e.begin(), e.end(), 0u) == 0;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0u) == 0;
}

void MPoly::add_term(const ExpVec& e, const Rational& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void MPoly::check_same_ring(const MPoly& o) const {
  if (nvars_ != o.nvars_)
    throw ring_error("polynomials over different parameter rings");
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_same_ring(o);
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  check_same_ring(o);
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  check_same_ring(o);
  MPoly r(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      ExpVec e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly r(nvars_, 1);
  MPoly base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    base = base * base;
    k >>= 1u;
  }
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Rational MPoly::eval(const std::vector<Rational>& values) const {
  if ((int)values.size() != nvars_)
    throw ring_error("evaluation point has wrong arity");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (int i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) m *= values[i];
    }
    total += m;
  }
  return total;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    bool has_vars = std::accumulate(e.begin(), e.end(), 0u) > 0;
    bool unit_coeff = (c == 1);
    if (!unit_coeff || !has_vars) out += rational_str(c);
    bool lead = unit_coeff && has_vars;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!lead) out += "*";
      lead = false;
      out += var_name(nvars_, i);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

} // namespace arbor
