#include "eigenpts/univariate.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eigenpts {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  UPoly r(*this);
  Rational inv = 1 / c_.back();
  for (auto& x : r.c_) x *= inv;
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

Rational UPoly::evaluate(const Rational& t) const {
  Rational s = 0;
  for (std::size_t i = c_.size(); i-- > 0;) s = s * t + c_[i];
  return s;
}

Complex UPoly::evaluate(Complex t) const {
  std::complex<long double> s = 0, tt(t.real(), t.imag());
  for (std::size_t i = c_.size(); i-- > 0;) s = s * tt + static_cast<long double>(c_[i].get_d());
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

DivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly{}, a};
  std::vector<Rational> q(a.degree() - db + 1, Rational(0));
  Rational inv = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational f = rem[k + db] * inv;
    q[k] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= f * b[j];
  }
  rem.resize(db);
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free decomposition of zero polynomial");
  std::vector<UPoly> out;
  UPoly f = p.monic();
  if (f.degree() == 0) return out;
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = divmod(f, a).quotient;
  UPoly c = divmod(fp, a).quotient;
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly g = gcd(b, d);
    out.push_back(g);
    b = divmod(b, g).quotient;
    c = divmod(d, g).quotient;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

double relative_residual(const UPoly& p, Complex t) {
  long double scale = 0, at = std::abs(t), pw = 1;
  for (const auto& c : p.coeffs()) {
    scale += std::abs(static_cast<long double>(c.get_d())) * pw;
    pw *= at;
  }
  if (scale == 0) return 0;
  return static_cast<double>(std::abs(p.evaluate(t)) / scale);
}

namespace {

struct BigOps {
  unsigned prec;
  mpf_class zero() const { return mpf_class(0, prec); }
  BigComplex make(double re, double im) const { return {mpf_class(re, prec), mpf_class(im, prec)}; }
  BigComplex add(const BigComplex& a, const BigComplex& b) const { return {mpf_class(a.re + b.re, prec), mpf_class(a.im + b.im, prec)}; }
  BigComplex sub(const BigComplex& a, const BigComplex& b) const { return {mpf_class(a.re - b.re, prec), mpf_class(a.im - b.im, prec)}; }
  BigComplex mul(const BigComplex& a, const BigComplex& b) const {
    return {mpf_class(a.re * b.re - a.im * b.im, prec), mpf_class(a.re * b.im + a.im * b.re, prec)};
  }
  mpf_class norm2(const BigComplex& a) const { return mpf_class(a.re * a.re + a.im * a.im, prec); }
  BigComplex div(const BigComplex& a, const BigComplex& b) const {
    mpf_class n = norm2(b);
    return {mpf_class((a.re * b.re + a.im * b.im) / n, prec), mpf_class((a.im * b.re - a.re * b.im) / n, prec)};
  }
  double abs_d(const BigComplex& a) const { return std::sqrt(norm2(a).get_d()); }
};

// Horner evaluation of p and p' together.
void eval_with_derivative(const std::vector<mpf_class>& c, const BigComplex& z, const BigOps& ops,
                          BigComplex& value, BigComplex& deriv) {
  value = ops.make(0, 0);
  deriv = ops.make(0, 0);
  for (std::size_t i = c.size(); i-- > 0;) {
    deriv = ops.add(ops.mul(deriv, z), value);
    value = ops.mul(value, z);
    value.re += c[i];
  }
}

std::vector<Complex> companion_eigenvalues(const UPoly& m) {
  const int n = m.degree();
  double s = 0;
  for (int k = 0; k < n; ++k) {
    double c = std::abs(m[k].get_d());
    if (c > 0) s = std::max(s, std::pow(c, 1.0 / (n - k)));
  }
  if (s == 0 || !std::isfinite(s)) s = 1;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int k = 0; k < n; ++k) {
    // Scaled coefficient m_k / s^(n-k) computed exactly to avoid overflow.
    mpf_class v(m[k], 128);
    mpf_class sp(s, 128);
    mpf_class pw(1, 128);
    for (int e = 0; e < n - k; ++e) pw *= sp;
    comp(k, n - 1) = -mpf_class(v / pw).get_d();
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("companion eigenvalue solver failed");
  std::vector<Complex> out;
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i] * s);
  return out;
}

}  // namespace

BigComplex evaluate(const UPoly& p, const BigComplex& z) {
  const unsigned prec = static_cast<unsigned>(std::max(z.re.get_prec(), z.im.get_prec()));
  BigOps ops{prec};
  BigComplex v = ops.make(0, 0);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    v = ops.mul(v, z);
    v.re += mpf_class(p[i], prec);
  }
  return v;
}

std::vector<BigComplex> squarefree_roots_hp(const UPoly& p, const RootOptions& opts) {
  if (p.is_zero()) throw std::invalid_argument("roots of zero polynomial");
  const int n = p.degree();
  if (n <= 0) return {};
  const unsigned prec = opts.precision_bits;
  BigOps ops{prec};
  UPoly m = p.monic();
  std::vector<mpf_class> c;
  for (const auto& x : m.coeffs()) c.emplace_back(x, prec);
  if (n == 1) {
    mpf_class r(-c[0], prec);
    return {BigComplex{r, mpf_class(0, prec)}};
  }

  std::vector<BigComplex> z;
  for (const auto& e : companion_eigenvalues(m)) z.push_back(ops.make(e.real(), e.imag()));
  // Perturb exactly coincident starting values.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (ops.abs_d(ops.sub(z[i], z[j])) == 0) z[i] = ops.add(z[i], ops.make(1e-7 * (i + 1), 1e-7));

  const double target = std::ldexp(1.0, -static_cast<int>(prec) + 24);
  std::vector<bool> done(n, false);
  for (int it = 0; it < opts.max_iterations; ++it) {
    bool all_done = true;
    for (int k = 0; k < n; ++k) {
      if (done[k]) continue;
      BigComplex f, df;
      eval_with_derivative(c, z[k], ops, f, df);
      if (ops.norm2(f) == 0) {
        done[k] = true;
        continue;
      }
      BigComplex ratio = ops.div(f, df);
      BigComplex sum = ops.make(0, 0);
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        sum = ops.add(sum, ops.div(ops.make(1, 0), ops.sub(z[k], z[j])));
      }
      BigComplex denom = ops.sub(ops.make(1, 0), ops.mul(ratio, sum));
      BigComplex w = ops.div(ratio, denom);
      z[k] = ops.sub(z[k], w);
      const double scale = std::max(1.0, ops.abs_d(z[k]));
      if (ops.abs_d(w) <= target * scale) done[k] = true;
      else all_done = false;
    }
    if (all_done) break;
  }
  for (int k = 0; k < n; ++k) {
    if (!done[k] && relative_residual(m, z[k].to_complex()) > opts.residual_tol)
      throw std::runtime_error("root refinement did not converge");
  }
  return z;
}

std::vector<Complex> squarefree_roots(const UPoly& p, const RootOptions& opts) {
  std::vector<Complex> out;
  for (const auto& z : squarefree_roots_hp(p, opts)) out.push_back(z.to_complex());
  return out;
}

std::vector<UnivariateRoot> univariate_real_and_complex_roots(const UPoly& p,
                                                              const RootOptions& opts) {
  if (p.is_zero()) throw std::invalid_argument("roots of zero polynomial");
  std::vector<UnivariateRoot> out;
  auto factors = squarefree_decomposition(p);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    for (auto r : squarefree_roots(factors[k], opts))
      out.push_back({r, static_cast<int>(k + 1)});
  }
  std::sort(out.begin(), out.end(), [](const UnivariateRoot& a, const UnivariateRoot& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

UPoly characteristic_polynomial(const ExactMatrix& m0) {
  if (m0.rows() != m0.cols()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = m0.rows();
  ExactMatrix h = m0;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    std::size_t p = k + 1;
    while (p < n && h(p, k) == 0) ++p;
    if (p == n) continue;
    if (p != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(k + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, k + 1));
    }
    Rational piv = h(k + 1, k);
    for (std::size_t i = k + 2; i < n; ++i) {
      if (h(i, k) == 0) continue;
      Rational f = h(i, k) / piv;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= f * h(k + 1, j);
      for (std::size_t r = 0; r < n; ++r) h(r, k + 1) += f * h(r, i);
    }
  }
  // Recurrence on leading principal submatrices.
  std::vector<UPoly> pk(n + 1);
  pk[0] = UPoly({Rational(1)});
  const UPoly t = UPoly::monomial(1);
  for (std::size_t k = 1; k <= n; ++k) {
    pk[k] = (t - UPoly({h(k - 1, k - 1)})) * pk[k - 1];
    Rational prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod *= h(k - i, k - i - 1);
      if (prod == 0) break;
      Rational coef = prod * h(k - i - 1, k - 1);
      if (coef != 0) pk[k] = pk[k] - UPoly({coef}) * pk[k - i - 1];
    }
  }
  return pk[n];
}

}  // namespace eigenpts
