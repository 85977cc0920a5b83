#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eigenpts/polynomial.hpp"
#include "eigenpts/tensor.hpp"

namespace eigenpts {

/// Point of P^n. Exact points keep rational coordinates normalized so the
/// first nonzero coordinate is 1; every point carries floating coordinates
/// normalized so the coordinate of largest modulus is 1.
class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  static ProjectivePoint from_exact(std::vector<Rational> coords);
  static ProjectivePoint from_complex(std::vector<Complex> coords);

  std::size_t size() const { return approx_.size(); }
  bool is_exact() const { return exact_.has_value(); }
  const std::vector<Rational>& exact() const { return *exact_; }
  const std::vector<Complex>& approx() const { return approx_; }
  bool is_real(double tol = 1e-8) const;

  // Max-coordinate distance after scaling both to a common chart.
  double distance(const ProjectivePoint& other) const;
  bool exact_equal(const ProjectivePoint& other) const;

  // Coordinates scaled so the first coordinate of modulus > tol is 1.
  std::vector<Complex> first_nonzero_normalized(double tol = 1e-10) const;

 private:
  std::optional<std::vector<Rational>> exact_;
  std::vector<Complex> approx_;
};

// Lexicographic order on first-nonzero-normalized coordinates (re, im).
bool point_less(const ProjectivePoint& a, const ProjectivePoint& b);

struct SolverOptions {
  std::uint64_t seed = 0;         // shear seed
  int shear_attempts = 8;
  int shear_box = 7;
  double residual_tol = 1e-10;    // affine residual for accepted solutions
  double dedup_tol = 1e-8;
  long max_denominator = 100000;  // rational recognition of real points
};

struct AffineSolution {
  std::vector<Complex> coords;
  std::optional<std::vector<Rational>> exact;
  int multiplicity = 1;
  double residual = 0;
};

struct ZeroDimResult {
  bool positive_dimensional = false;
  std::size_t quotient_dim = 0;
  std::uint64_t shear_seed = 0;
  std::vector<Rational> shear;  // coefficients of the separating linear form
  std::vector<AffineSolution> solutions;
  std::string diagnostic;
};

// Isolated solutions of an affine system (any number of equations).
// Exact: Groebner basis, then the minimal polynomial of a random linear
// form on the quotient algebra gives a shape-lemma representation
// {q(t) = 0, x_v = p_v(t)}. Roots of q are found numerically and
// back-substituted; simple roots are Newton-polished on the input system.
ZeroDimResult solve_zero_dimensional(const std::vector<Polynomial>& system,
                                     const SolverOptions& opts = {});

// Chart x_j = 1: { g_k - x_k g_j : k != j } in the remaining n variables
// (ordered by original index).
std::vector<Polynomial> chart_system(const PartialSymTensor& t, std::size_t j);

struct EigenPoint {
  ProjectivePoint point;
  int multiplicity = 1;
  // g_j(p) in the chart x_j = 1 where p was found; depends on the chart.
  Complex eigenvalue;
  double residual = 0;  // max relative residual on the minor generators
};

struct ChartRecord {
  std::size_t level = 0;  // x_0 = ... = x_{level-1} = 0, x_level = 1
  std::size_t quotient_dim = 0;
  std::size_t found = 0;
  std::uint64_t shear_seed = 0;
};

struct EigenSolution {
  int n = 0, d = 0;
  long expected = 0;
  std::vector<EigenPoint> points;
  std::vector<ChartRecord> charts;
  bool certified = false;
  bool positive_dimensional = false;
  std::string diagnostic;
  std::uint64_t seed = 0;

  long total_multiplicity() const;
  double max_residual() const;
};

EigenSolution eigenpoints(const PartialSymTensor& t, const SolverOptions& opts = {});

// Projective zero set of homogeneous generators in nvars variables, by
// the same chart-then-infinity stratification (every stratum visited).
EigenSolution solve_projective(const std::vector<Polynomial>& generators, std::size_t nvars,
                               const SolverOptions& opts = {});

// Max over generators of |g(p)| / ||g||_1 with p normalized to max modulus 1.
// Exact points on exact generators return 0 only when every value vanishes.
double generator_residual(const std::vector<Polynomial>& generators, const ProjectivePoint& p);
bool vanishes_exactly(const std::vector<Polynomial>& generators, const ProjectivePoint& p);

std::vector<EigenPoint> real_points(const EigenSolution& s, double tol = 1e-8);

struct MembershipReport {
  std::size_t i = 0, j = 1;
  double max_residual = 0;
  std::size_t exact_points = 0;
  bool exact_points_vanish = true;
  bool within_tolerance = true;
};

// Checks that every eigenpoint lies on C_i and C_j (minors of M_i, M_j).
MembershipReport curve_membership_check(const PartialSymTensor& t, std::size_t i, std::size_t j,
                                        const EigenSolution& solution, double tol = 1e-8);

}  // namespace eigenpts
