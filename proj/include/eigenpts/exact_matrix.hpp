#pragma once

#include <optional>
#include <span>
#include <vector>

#include "eigenpts/rational.hpp"

namespace eigenpts {

using RationalVector = std::vector<Rational>;

/// Dense rectangular matrix of rationals, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rational> row);
  void append_rows(const ExactMatrix& other);

  RationalVector apply(std::span<const Rational> v) const;
  ExactMatrix transpose() const;
  ExactMatrix permuted(std::span<const std::size_t> row_perm,
                       std::span<const std::size_t> col_perm) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Result of fraction-free (Bareiss) row echelon reduction.
struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Bareiss elimination over the integers after clearing row denominators.
// Pivot: first nonzero entry in the current column, scanning rows in order.
Echelon fraction_free_echelon(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

// Reduced row echelon form over Q (nonzero rows only) with pivot columns.
ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots = nullptr);

// Basis of {v : m v = 0}; one vector per free column, with a 1 there.
std::vector<RationalVector> kernel(const ExactMatrix& m);

// Solves m x = b; nullopt when inconsistent. Free variables are set to 0.
std::optional<RationalVector> solve(const ExactMatrix& m, std::span<const Rational> b);

// True when v lies in the row span of `basis` (rows are vectors).
bool in_span(const std::vector<RationalVector>& basis, std::span<const Rational> v);

}  // namespace eigenpts
