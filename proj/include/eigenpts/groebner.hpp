#pragma once

#include <vector>

#include "eigenpts/exact_matrix.hpp"
#include "eigenpts/polynomial.hpp"

namespace eigenpts {

/// Reduced Groebner basis over Q in graded reverse lexicographic order
/// (x_0 > x_1 > ... > x_{k-1}). Buchberger's algorithm with the
/// Gebauer-Moeller criteria and the sugar selection strategy; the
/// computation runs over Z with primitive polynomials.
class GroebnerBasis {
 public:
  struct Term {
    Monomial m;
    Rational c;
  };
  using Poly = std::vector<Term>;  // descending grevlex

  static GroebnerBasis compute(const std::vector<Polynomial>& generators, std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return basis_.size(); }
  std::vector<Polynomial> elements() const;
  std::vector<Monomial> leading_monomials() const;

  bool is_unit() const;
  bool is_zero_dimensional() const;

  // Monomials outside the initial ideal, ascending grevlex (1 first).
  // Precondition: zero-dimensional.
  std::vector<Monomial> standard_monomials() const;

  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

  // Column j holds the coordinates of NF(f * basis[j]) in `basis`.
  ExactMatrix multiplication_matrix(const Polynomial& f, const std::vector<Monomial>& basis) const;

  std::size_t pairs_processed() const { return pairs_processed_; }

 private:
  Poly reduce(Poly h) const;

  std::size_t nvars_ = 0;
  std::vector<Poly> basis_;  // monic
  std::size_t pairs_processed_ = 0;
};

}  // namespace eigenpts
