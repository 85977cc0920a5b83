#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eigenpts/rational.hpp"

namespace eigenpts {

using DivisorClass = std::vector<long>;

/// Integer lattice with a symmetric intersection form and distinguished
/// hyperplane and canonical classes.
struct SurfaceLattice {
  std::vector<std::string> labels;
  std::vector<std::vector<long>> gram;
  DivisorClass hyperplane;
  DivisorClass canonical;
  DivisorClass line;  // L in the rank-2 model, e_1 in the rank-7 model

  std::size_t rank() const { return labels.size(); }
  // Throws std::invalid_argument on a rank mismatch.
  long dot(const DivisorClass& a, const DivisorClass& b) const;
  DivisorClass combine(long h, long l) const;  // h H + l L
};

// <H, L> with H^2 = deg S, H.L = 1, L^2 = 2-d, K = (n-3)L + ((n-3)(d-1)+d-n-1)H.
// (3,3) returns the rank-7 model with L = e_1.
SurfaceLattice eigensurface_lattice(int n, int d);
SurfaceLattice rank_two_lattice(int n, int d);

// (d-1)H + L; throws std::logic_error if its H-degree is not the curve degree.
DivisorClass eigencurve_class(const SurfaceLattice& lat, int n, int d);

long ci_degree(const SurfaceLattice& lat, const DivisorClass& c0, const DivisorClass& c1);

// ((K+c).c)/2 + 1; throws std::domain_error when (K+c).c is odd.
long adjunction_genus(const SurfaceLattice& lat, const DivisorClass& c);

struct AlphaBeta {
  Rational alpha1, beta1, alpha2, beta2;
  bool first_integral = false;
  bool second_integral = false;
};

// Solutions of d a + b = d^2-d+1 together with the genus condition.
AlphaBeta alpha_beta_solutions(int d);

struct RiemannRoch {
  long chi_lattice = 0;
  long chi_closed = 0;
  long bound = 0;  // chi - 2
};

// chi(O_S((d-1)H+L)) for the eigensurface in P^3. Throws std::logic_error
// if the lattice value and the closed form disagree.
RiemannRoch riemann_roch_chi(int d);

struct LineCensus {
  std::vector<DivisorClass> lines;
  bool all_exceptional = true;     // L^2 = -1, genus 0, H.L = 1
  bool curves_degree_seven = true;  // L + 2H has degree 7 and genus 5
};

SurfaceLattice cubic_surface_lattice();
LineCensus cubic_surface_lines(const SurfaceLattice& lat);

struct IdentityCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

// Every identity available at (n, d), for reports.
std::vector<IdentityCheck> lattice_identities(int n, int d);

}  // namespace eigenpts
