#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eigenpts/rational.hpp"

namespace eigenpts {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector x_0^{a_0} ... x_{k-1}^{a_{k-1}} over a fixed number of
/// variables (at most kMaxVars).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  std::vector<unsigned> exponents() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Precondition: divisor divides *this.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial& o) const {
    return nvars_ == o.nvars_ && exps_ == o.exps_;
  }

 private:
  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

// Graded lexicographic, largest first (storage and printing order).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Graded reverse lexicographic with x_0 > x_1 > ...; true when a > b.
bool grevlex_greater(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Rational evaluate(std::span<const Rational> point) const;
  Complex evaluate(std::span<const Complex> point) const;

  Polynomial derivative(std::size_t i) const;

  // Substitutes values for some variables; variables mapped to nullopt are
  // kept and renumbered in order. Result has as many variables as nullopts.
  Polynomial specialize(std::span<const std::optional<Rational>> values) const;

  // Sum of absolute values of the coefficients.
  double l1_norm() const;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

// "c * x0^a0 x1^a1 ..." terms joined by " + ", graded lex order.
std::string to_string(const Polynomial& p);

// Inverse of to_string; also accepts "-" separators, "*" between factors
// and bare "x3" factors. Throws std::invalid_argument.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars);

// All monomials of the given total degree in graded lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace eigenpts
