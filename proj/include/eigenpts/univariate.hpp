#pragma once

#include <vector>

#include "eigenpts/exact_matrix.hpp"
#include "eigenpts/rational.hpp"

namespace eigenpts {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly monomial(std::size_t degree, const Rational& c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const Rational& leading() const { return c_.back(); }

  UPoly monic() const;
  UPoly derivative() const;
  Rational evaluate(const Rational& t) const;
  Complex evaluate(Complex t) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  UPoly quotient, remainder;
};
DivMod divmod(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

// Yun's square-free decomposition: p = lc * prod_k factors[k-1]^k, each
// factor monic and square-free (possibly constant 1).
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

struct UnivariateRoot {
  Complex value;
  int multiplicity = 1;
};

struct RootOptions {
  double residual_tol = 1e-12;
  // Working precision of the refinement; results are rounded to double.
  unsigned precision_bits = 256;
  int max_iterations = 200;
};

/// Complex number over GMP floats, used to refine and evaluate at roots.
struct BigComplex {
  mpf_class re, im;
  Complex to_complex() const { return {re.get_d(), im.get_d()}; }
};

// p(z) evaluated with coefficients rounded to the precision of z.
BigComplex evaluate(const UPoly& p, const BigComplex& z);

// Roots of a square-free polynomial: companion-matrix eigenvalues as
// starting values, refined simultaneously by Aberth-Ehrlich iteration at
// precision_bits. Throws std::runtime_error if the refinement stalls.
std::vector<BigComplex> squarefree_roots_hp(const UPoly& p, const RootOptions& opts = {});
std::vector<Complex> squarefree_roots(const UPoly& p, const RootOptions& opts = {});

// All complex roots with multiplicities (sum = degree). Throws
// std::invalid_argument on the zero polynomial.
std::vector<UnivariateRoot> univariate_real_and_complex_roots(const UPoly& p,
                                                              const RootOptions& opts = {});

// Relative residual |p(t)| / sum |c_i| |t|^i.
double relative_residual(const UPoly& p, Complex t);

// Characteristic polynomial det(t I - m) via Hessenberg reduction over Q.
UPoly characteristic_polynomial(const ExactMatrix& m);

}  // namespace eigenpts
