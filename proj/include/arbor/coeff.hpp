#pragma once

#include <string>
#include <variant>
#include <vector>

#include "arbor/mpoly.hpp"
#include "arbor/rational.hpp"

namespace arbor {

/**
 * Scalar for all linear combinations: either an exact rational (concrete
 * parameter values) or a polynomial in the deformation parameters. Mixing
 * the two in one expression is a programming error and throws ring_error.
 */
class Coeff {
 public:
  Coeff() : v_(Rational(0)) {}
  explicit Coeff(Rational r) : v_(std::move(r)) {}
  explicit Coeff(MPoly p) : v_(std::move(p)) {}

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_poly() const { return std::holds_alternative<MPoly>(v_); }
  const Rational& rat() const { return std::get<Rational>(v_); }
  const MPoly& poly() const { return std::get<MPoly>(v_); }

  bool is_zero() const;
  bool is_one() const;

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator-() const;
  Coeff operator*(const Coeff& o) const;
  Coeff pow(unsigned k) const;
  /** Multiply by a plain rational scalar (works in either ring). */
  Coeff times(const Rational& r) const;
  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  std::string str() const;
  /** True when str() needs parentheses as a factor (polynomial sums). */
  bool needs_parens() const;

 private:
  std::variant<Rational, MPoly> v_;
};

/**
 * Deformation parameter matrix (2 x n). Symbolic mode hands out variables
 * of the 2n-variable polynomial ring; concrete mode hands out rationals.
 */
struct Params {
  int n = 1;
  bool symbolic = true;
  std::vector<Rational> q1, q2; // used when !symbolic

  static Params make_symbolic(int n);
  static Params make_concrete(std::vector<Rational> q1, std::vector<Rational> q2);

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(long v) const;
  /** Parameter q_{ij}, i in {1,2}, j in 1..n. */
  Coeff q(int i, int j) const;
  /** q_{ij}^e with the empty-product convention 0^0 = 1. */
  Coeff qpow(int i, int j, unsigned e) const;
  /** Point (q1_1..q1_n, q2_1..q2_n) for evaluating symbolic results. */
  std::vector<Rational> point() const;
};

/** Evaluate a symbolic coefficient at a concrete parameter point. */
Rational eval_at(const Coeff& c, const Params& concrete);

} // namespace arbor
