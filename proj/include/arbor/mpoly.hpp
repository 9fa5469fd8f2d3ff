#pragma once

#include <map>
#include <string>
#include <vector>

#include "arbor/rational.hpp"

namespace arbor {

/** Exponent vector over the 2n parameters, indexed q1_1..q1_n, q2_1..q2_n. */
using ExpVec = std::vector<unsigned>;

/** Graded lexicographic order by variable index (printing order). */
struct GradedLex {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/** Variable name for exponent slot `index` among `nvars` = 2n slots. */
std::string var_name(int nvars, int index);

/** Sparse multivariate polynomial over the rationals. No zero terms stored. */
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}
  MPoly(int nvars, const Rational& c);

  static MPoly variable(int nvars, int index);
  static MPoly monomial(int nvars, ExpVec e, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  /** Number of stored monomials. */
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, Rational, GradedLex>& terms() const { return terms_; }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly pow(unsigned k) const;
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  /** Substitution homomorphism; `values` lists the 2n parameter values. */
  Rational eval(const std::vector<Rational>& values) const;

  /** Monomials joined by " + " in ascending graded-lex order. */
  std::string str() const;

 private:
  void add_term(const ExpVec& e, const Rational& c);
  void check_same_ring(const MPoly& o) const;

  int nvars_ = 0;
  std::map<ExpVec, Rational, GradedLex> terms_;
};

} // namespace arbor
