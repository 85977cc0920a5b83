#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eigenpts/eigensolver.hpp"

namespace eigenpts {

/// Distinct points of P^n. Construction drops repeated points (exact
/// equality, or normalized distance below dedup_tol for floating points).
class PointSet {
 public:
  PointSet() = default;
  PointSet(int n, std::vector<ProjectivePoint> points, double dedup_tol = 1e-8);
  static PointSet from_solution(const EigenSolution& s);

  int n() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }
  bool all_exact() const;
  PointSet subset(const std::vector<std::size_t>& indices) const;

 private:
  int n_ = 0;
  std::vector<ProjectivePoint> points_;
};

struct IncidenceReport {
  std::string predicate;
  long threshold = 0;            // subset size tested
  bool found = false;            // some subset satisfies the incidence
  bool numeric = false;          // rank decided by singular values
  std::vector<std::size_t> witness;
  std::size_t subsets_checked = 0;
};

struct CollinearReport {
  std::size_t max_count = 0;
  std::vector<std::size_t> witness;  // indices of points on the best line
  bool numeric = false;
};

struct ConfigOptions {
  double rel_tol = 1e-8;
  std::size_t enumeration_cap = 1000000;
};

// Largest number of points on a line spanned by two of them.
CollinearReport max_collinear(const PointSet& z, const ConfigOptions& opts = {});

// Whether some m-subset lies on a hypersurface of degree e: the subset's
// evaluation matrix on degree-e monomials has rank below their number.
// Subsets are enumerated lexicographically with early exit. Throws
// std::length_error when C(|z|, m) exceeds the enumeration cap.
IncidenceReport subset_on_hypersurface(const PointSet& z, int e, std::size_t m,
                                       const ConfigOptions& opts = {});

// Rank of the evaluation matrix of the listed points on degree-e monomials.
std::size_t evaluation_rank(const PointSet& z, const std::vector<std::size_t>& indices, int e,
                            const ConfigOptions& opts = {});

struct BezoutReport {
  bool pass = true;
  std::vector<IncidenceReport> levels;  // s = 1 .. d-1
};

// Planar check that no s*d+1 points lie on a curve of degree s, s < d.
BezoutReport bezout_guard(const PointSet& z, int d, const ConfigOptions& opts = {});

}  // namespace eigenpts
