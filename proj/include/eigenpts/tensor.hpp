#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eigenpts/polynomial.hpp"

namespace eigenpts {

/// (g_0, ..., g_n): n+1 forms of degree d-1 in n+1 variables. The tensor's
/// eigenpoints are the points where (x_0..x_n) and (g_0..g_n) are parallel.
class PartialSymTensor {
 public:
  PartialSymTensor(int n, int d, std::vector<Polynomial> slices);

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t nvars() const { return static_cast<std::size_t>(n_) + 1; }
  const std::vector<Polynomial>& slices() const { return slices_; }
  const Polynomial& slice(std::size_t i) const { return slices_.at(i); }

  PartialSymTensor scaled(const Rational& c) const;
  bool operator==(const PartialSymTensor& o) const = default;

 private:
  int n_, d_;
  std::vector<Polynomial> slices_;
};

/// A degree-d form f; its tensor has slices the partial derivatives of f.
class SymmetricTensor {
 public:
  SymmetricTensor(int n, int d, Polynomial f);

  int n() const { return n_; }
  int d() const { return d_; }
  const Polynomial& form() const { return f_; }
  PartialSymTensor partial() const;

 private:
  int n_, d_;
  Polynomial f_;
};

/// 2 x k matrix pairing x_j with g_j for the retained columns.
struct EigenMatrix {
  std::vector<std::size_t> columns;  // original column indices, ascending
  std::vector<Polynomial> top;       // x_j
  std::vector<Polynomial> bottom;    // g_j

  // Full matrix, or with the listed columns (at most two) removed.
  static EigenMatrix of(const PartialSymTensor& t, std::vector<std::size_t> deleted = {});
  std::size_t ncols() const { return columns.size(); }
};

// x_i g_j - x_j g_i over retained pairs i < j, in lexicographic pair order.
std::vector<Polynomial> minor_ideal_generators(const EigenMatrix& m);

// sum_{i=0}^{n} (d-1)^i
long expected_count(int n, int d);
// sum_{i=0}^{n-1} (d-1)^i and sum_{i=0}^{n-2} (d-1)^i
long eigencurve_degree(int n, int d);
long eigensurface_degree(int n, int d);

struct BettiTable {
  // steps[i-1] holds the (twist, rank) pairs of homological step i, twists
  // negative and sorted descending.
  std::vector<std::vector<std::pair<long, long>>> steps;
};

BettiTable eagon_northcott_betti(int n, int d);

// Degree of R/I from the Hilbert-series numerator of the table. Throws
// std::domain_error if the numerator is not divisible by (1-t)^n.
long multiplicity_from_betti(const BettiTable& b, int n);

SymmetricTensor fermat_tensor(int n, int d);

// Slices g_i + x_i h; h homogeneous of degree d-2 (or zero).
PartialSymTensor degenerate_shift(const PartialSymTensor& t, const Polynomial& h);

// Slices with integer coefficients drawn uniformly from [-box, box].
PartialSymTensor random_tensor(int n, int d, std::uint64_t seed, int box = 5);
Polynomial random_form(std::size_t nvars, int degree, std::uint64_t seed, int box = 5);

}  // namespace eigenpts
