#include "arbor/coeff.hpp"

#include "arbor/errors.hpp"

namespace arbor {

bool Coeff::is_zero() const {
  if (is_rational()) return rat() == 0;
  return poly().is_zero();
}

bool Coeff::is_one() const {
  if (is_rational()) return rat() == 1;
  return poly().is_one();
}

namespace {
[[noreturn]] void mixed() {
  throw ring_error("mixed rational and polynomial coefficients");
}
} // namespace

Coeff Coeff::operator+(const Coeff& o) const {
  if (is_rational() != o.is_rational()) mixed();
  if (is_rational()) return Coeff(rat() + o.rat());
  return Coeff(poly() + o.poly());
}

Coeff Coeff::operator-(const Coeff& o) const {
  if (is_rational() != o.is_rational()) mixed();
  if (is_rational()) return Coeff(rat() - o.rat());
  return Coeff(poly() - o.poly());
}

Coeff Coeff::operator-() const {
  if (is_rational()) return Coeff(-rat());
  return Coeff(-poly());
}

Coeff Coeff::operator*(const Coeff& o) const {
  if (is_rational() != o.is_rational()) mixed();
  if (is_rational()) return Coeff(rat() * o.rat());
  return Coeff(poly() * o.poly());
}

Coeff Coeff::pow(unsigned k) const {
  if (is_rational()) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= rat();
    return Coeff(r);
  }
  return Coeff(poly().pow(k));
}

Coeff Coeff::times(const Rational& r) const {
  if (is_rational()) return Coeff(rat() * r);
  return Coeff(poly() * MPoly(poly().nvars(), r));
}

bool Coeff::operator==(const Coeff& o) const {
  if (is_rational() != o.is_rational()) mixed();
  if (is_rational()) return rat() == o.rat();
  return poly() == o.poly();
}

std::string Coeff::str() const {
  if (is_rational()) return rational_str(rat());
  return poly().str();
}

bool Coeff::needs_parens() const {
  if (is_rational()) return false;
  return poly().term_count() > 1;
}

Params Params::make_symbolic(int n) {
  Params p;
  p.n = n;
  p.symbolic = true;
  return p;
}

Params Params::make_concrete(std::vector<Rational> q1, std::vector<Rational> q2) {
  if (q1.size() != q2.size() || q1.empty())
    throw domain_error("parameter rows must be nonempty and equal length");
  Params p;
  p.n = (int)q1.size();
  p.symbolic = false;
  p.q1 = std::move(q1);
  p.q2 = std::move(q2);
  return p;
}

Coeff Params::zero() const {
  if (symbolic) return Coeff(MPoly(2 * n));
  return Coeff(Rational(0));
}

Coeff Params::one() const { return from_int(1); }

Coeff Params::from_int(long v) const {
  if (symbolic) return Coeff(MPoly(2 * n, Rational(v)));
  return Coeff(Rational(v));
}

Coeff Params::q(int i, int j) const {
  if (i < 1 || i > 2 || j < 1 || j > n) throw domain_error("parameter index out of range");
  int index = (i - 1) * n + (j - 1);
  if (symbolic) return Coeff(MPoly::variable(2 * n, index));
  return Coeff(i == 1 ? q1[j - 1] : q2[j - 1]);
}

Coeff Params::qpow(int i, int j, unsigned e) const {
  if (e == 0) return one();
  return q(i, j).pow(e);
}

std::vector<Rational> Params::point() const {
  if (symbolic) throw domain_error("symbolic parameters have no point");
  std::vector<Rational> v = q1;
  v.insert(v.end(), q2.begin(), q2.end());
  return v;
}

Rational eval_at(const Coeff& c, const Params& concrete) {
  if (c.is_rational()) return c.rat();
  return c.poly().eval(concrete.point());
}

} // namespace arbor
