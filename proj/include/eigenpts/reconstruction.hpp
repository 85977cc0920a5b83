#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eigenpts/configuration.hpp"
#include "eigenpts/exact_matrix.hpp"
#include "eigenpts/tensor.hpp"

namespace eigenpts {

/// Coordinates on (n+1)-tuples of degree-(d-1) forms: slice-major, graded
/// lex monomials within a slice.
class TensorSpaceBasis {
 public:
  TensorSpaceBasis(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t nvars() const { return static_cast<std::size_t>(n_) + 1; }
  std::size_t slice_dim() const { return monomials_.size(); }
  std::size_t dim() const { return nvars() * slice_dim(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t index(std::size_t slice, std::size_t monomial) const { return slice * slice_dim() + monomial; }

  RationalVector coordinates(const PartialSymTensor& t) const;
  PartialSymTensor tensor(const RationalVector& v) const;

  // (x_0 h, ..., x_n h) for h running over degree-(d-2) monomials.
  std::vector<RationalVector> degenerate_basis() const;
  // Rows expressing d_j g_i - d_i g_j = 0 for all i < j.
  ExactMatrix exactness_conditions() const;

 private:
  int n_, d_;
  std::vector<Monomial> monomials_;
};

// One row per (point, i < j): T -> x_i(p) g_j(p) - x_j(p) g_i(p).
// Requires exact points; throws on an all-zero point.
ExactMatrix containment_system(const PointSet& points, int d);

struct KernelReport {
  std::vector<RationalVector> basis;   // exact, or rationalized from floating data
  std::size_t dimension = 0;
  std::size_t degenerate_dimension = 0;      // C(n+d-2, n)
  std::size_t reference_dimension = 0;       // degenerate part inside the searched space
  std::size_t symmetric_subspace_dimension = 0;  // set when symmetric
  bool symmetric = false;
  bool contains_proper_tensor = false;
  bool numeric = false;
  bool rationalized = true;  // false if a floating kernel could not be made exact
  double numeric_residual = 0;
};

struct ReconstructionOptions {
  std::uint64_t seed = 0;
  int retries = 8;
  int box = 5;
  double rel_tol = 1e-8;
  long max_denominator = 1000000;
  SolverOptions solver;
};

KernelReport eigenscheme_kernel(const PointSet& points, int d, bool symmetric,
                                const ReconstructionOptions& opts = {});

// v reduced against the row-reduced degenerate subspace (pivot entries cleared).
RationalVector reduce_modulo_degenerate(const TensorSpaceBasis& b, const RationalVector& v);

// True when t lies in span(kernel) + degenerate subspace, exactly.
bool kernel_contains(const KernelReport& k, const TensorSpaceBasis& b, const PartialSymTensor& t);

enum class Decision { Yes, No, Undecided };
std::string to_string(Decision d);

struct DecisionReport {
  Decision decision = Decision::Undecided;
  KernelReport kernel;
  std::optional<PartialSymTensor> witness;
  std::optional<EigenSolution> witness_solution;
  std::vector<std::uint64_t> seeds_tried;
  bool cardinality_ok = true;
  std::string diagnostic;
};

// YES when a random kernel element has a certified eigenscheme equal to
// the input; NO when the kernel is only the degenerate part.
DecisionReport is_eigenscheme(const PointSet& points, int d, bool symmetric,
                              const ReconstructionOptions& opts = {});

// C(d-1,3) + 3 C(d,2) + 1
long enlarge_bound(int d);

struct EnlargeResult {
  bool success = false;
  std::optional<PartialSymTensor> tensor;
  std::optional<EigenSolution> solution;
  std::vector<bool> from_input;  // per solution point
  std::vector<std::uint64_t> seeds_tried;
  KernelReport kernel;
  std::string diagnostic;
};

// Embeds exact points W of P^3 into a certified eigenscheme. Throws
// std::invalid_argument when |W| exceeds enlarge_bound(d).
EnlargeResult enlarge(const PointSet& w, int d, const ReconstructionOptions& opts = {});

struct ConverseReport {
  int d = 0;
  long threshold = 0;        // (d-1)(d^2-d+1)
  long curve_degree = 0;     // d^2-d+1
  long curve_genus = 0;      // d^3 - 7d(d-1)/2 - 1
  IncidenceReport surface_check;
  bool condition_one = false;  // no threshold-many points on a degree d-1 surface
};

ConverseReport converse_hypothesis_report(const PointSet& points, int d,
                                          const ConfigOptions& opts = {});

}  // namespace eigenpts
