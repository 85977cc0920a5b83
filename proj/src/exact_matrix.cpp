#include "eigenpts/exact_matrix.hpp"

#include <stdexcept>

namespace eigenpts {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  ExactMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void ExactMatrix::append_row(std::span<const Rational> row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void ExactMatrix::append_rows(const ExactMatrix& other) {
  for (std::size_t r = 0; r < other.rows(); ++r) append_row(other.row(r));
}

RationalVector ExactMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  RationalVector out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix ExactMatrix::permuted(std::span<const std::size_t> row_perm,
                                  std::span<const std::size_t> col_perm) const {
  ExactMatrix p(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) p(r, c) = (*this)(row_perm[r], col_perm[c]);
  return p;
}

namespace {

// Integer copy with each row scaled by the lcm of its denominators.
std::vector<std::vector<Integer>> integer_rows(const ExactMatrix& m) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return a;
}

}  // namespace

Echelon fraction_free_echelon(const ExactMatrix& m) {
  auto a = integer_rows(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  Echelon e;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

std::size_t rank(const ExactMatrix& m) { return fraction_free_echelon(m).rank; }

ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots) {
  ExactMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  ExactMatrix out(0, cols);
  for (std::size_t i = 0; i < r; ++i) out.append_row(a.row(i));
  if (pivots) *pivots = std::move(piv);
  return out;
}

std::vector<RationalVector> kernel(const ExactMatrix& m) {
  std::vector<std::size_t> piv;
  ExactMatrix red = rref(m, &piv);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -red(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const ExactMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  std::vector<std::size_t> piv;
  ExactMatrix red = rref(aug, &piv);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red(i, m.cols());
  return x;
}

bool in_span(const std::vector<RationalVector>& basis, std::span<const Rational> v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  ExactMatrix a = ExactMatrix::from_rows(basis, v.size());
  std::size_t r0 = rank(a);
  a.append_row(v);
  return rank(a) == r0;
}

}  // namespace eigenpts
