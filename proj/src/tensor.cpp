#include "eigenpts/tensor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace eigenpts {

PartialSymTensor::PartialSymTensor(int n, int d, std::vector<Polynomial> slices)
    : n_(n), d_(d), slices_(std::move(slices)) {
  if (n < 2 || d < 2) throw std::invalid_argument("tensor requires n >= 2 and d >= 2");
  if (static_cast<std::size_t>(n) + 1 > kMaxVars) throw std::invalid_argument("tensor dimension too large");
  if (slices_.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("tensor needs exactly n+1 slices");
  for (const auto& g : slices_) {
    if (g.nvars() != nvars()) throw std::invalid_argument("slice has wrong number of variables");
    if (!g.is_homogeneous() || (!g.is_zero() && g.total_degree() != d - 1))
      throw std::invalid_argument("slice is not homogeneous of degree d-1");
  }
}

PartialSymTensor PartialSymTensor::scaled(const Rational& c) const {
  auto s = slices_;
  for (auto& g : s) g *= c;
  return {n_, d_, std::move(s)};
}

SymmetricTensor::SymmetricTensor(int n, int d, Polynomial f) : n_(n), d_(d), f_(std::move(f)) {
  if (f_.nvars() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("form has wrong number of variables");
  if (!f_.is_homogeneous() || (!f_.is_zero() && f_.total_degree() != d))
    throw std::invalid_argument("form is not homogeneous of degree d");
}

PartialSymTensor SymmetricTensor::partial() const {
  std::vector<Polynomial> s;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(n_); ++i) s.push_back(f_.derivative(i));
  return {n_, d_, std::move(s)};
}

EigenMatrix EigenMatrix::of(const PartialSymTensor& t, std::vector<std::size_t> deleted) {
  if (deleted.size() > 2) throw std::invalid_argument("at most two columns may be deleted");
  EigenMatrix m;
  for (std::size_t j = 0; j < t.nvars(); ++j) {
    if (std::find(deleted.begin(), deleted.end(), j) != deleted.end()) continue;
    m.columns.push_back(j);
    m.top.push_back(Polynomial::variable(t.nvars(), j));
    m.bottom.push_back(t.slice(j));
  }
  if (m.columns.size() + deleted.size() != t.nvars())
    throw std::invalid_argument("deleted column index out of range or repeated");
  return m;
}

std::vector<Polynomial> minor_ideal_generators(const EigenMatrix& m) {
  if (m.ncols() < 2) throw std::invalid_argument("need at least two columns for 2x2 minors");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < m.ncols(); ++i)
    for (std::size_t j = i + 1; j < m.ncols(); ++j)
      out.push_back(m.top[i] * m.bottom[j] - m.top[j] * m.bottom[i]);
  return out;
}

namespace {

long geometric_sum(long base, int terms) {
  long s = 0, p = 1;
  for (int i = 0; i < terms; ++i) {
    s += p;
    p *= base;
  }
  return s;
}

}  // namespace

long expected_count(int n, int d) { return geometric_sum(d - 1, n + 1); }
long eigencurve_degree(int n, int d) { return geometric_sum(d - 1, n); }
long eigensurface_degree(int n, int d) { return geometric_sum(d - 1, n - 1); }

BettiTable eagon_northcott_betti(int n, int d) {
  if (n < 2 || d < 2) throw std::invalid_argument("Betti table requires n >= 2, d >= 2");
  BettiTable b;
  for (int i = 1; i <= n; ++i) {
    std::map<long, long, std::greater<>> collected;
    const long rank = binomial_l(n + 1, i + 1);
    for (int a = 0; a <= i - 1; ++a) {
      const int c = i - 1 - a;
      collected[-d - a - static_cast<long>(c) * (d - 1)] += rank;
    }
    b.steps.emplace_back(collected.begin(), collected.end());
  }
  return b;
}

long multiplicity_from_betti(const BettiTable& b, int n) {
  // K(t) = 1 + sum_i (-1)^i sum_j rank_ij t^{-twist_ij}
  std::vector<long> k(1, 1);
  for (std::size_t i = 0; i < b.steps.size(); ++i) {
    const long sign = (i % 2 == 0) ? -1 : 1;
    for (const auto& [twist, rank] : b.steps[i]) {
      if (twist > 0) throw std::domain_error("positive twist in Betti table");
      const auto e = static_cast<std::size_t>(-twist);
      if (k.size() <= e) k.resize(e + 1, 0);
      k[e] += sign * rank;
    }
  }
  // Synthetic division by (1 - t), n times.
  for (int r = 0; r < n; ++r) {
    std::vector<long> q(k.size() > 1 ? k.size() - 1 : 1, 0);
    // k(t) = (1 - t) q(t)  =>  q_0 = k_0, q_j = k_j + q_{j-1}
    long acc = 0;
    for (std::size_t j = 0; j + 1 < k.size(); ++j) {
      acc += k[j];
      q[j] = acc;
    }
    acc += k.back();
    if (acc != 0) throw std::domain_error("Hilbert numerator not divisible by (1-t)^n");
    k = std::move(q);
  }
  long h1 = 0;
  for (auto c : k) h1 += c;
  return h1;
}

SymmetricTensor fermat_tensor(int n, int d) {
  const auto nv = static_cast<std::size_t>(n) + 1;
  Polynomial f(nv);
  for (std::size_t i = 0; i < nv; ++i) f.add_term(Monomial::variable(nv, i, d), 1);
  return {n, d, std::move(f)};
}

PartialSymTensor degenerate_shift(const PartialSymTensor& t, const Polynomial& h) {
  if (h.nvars() != t.nvars()) throw std::invalid_argument("shift has wrong number of variables");
  if (!h.is_zero() && (!h.is_homogeneous() || h.total_degree() != t.d() - 2))
    throw std::invalid_argument("shift must be homogeneous of degree d-2");
  auto s = t.slices();
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += Polynomial::variable(t.nvars(), i) * h;
  return {t.n(), t.d(), std::move(s)};
}

Polynomial random_form(std::size_t nvars, int degree, std::uint64_t seed, int box) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-box, box);
  Polynomial p(nvars);
  for (const auto& m : monomials_of_degree(nvars, static_cast<unsigned>(degree))) p.add_term(m, dist(rng));
  return p;
}

PartialSymTensor random_tensor(int n, int d, std::uint64_t seed, int box) {
  std::vector<Polynomial> s;
  const auto nv = static_cast<std::size_t>(n) + 1;
  for (std::size_t i = 0; i < nv; ++i)
    s.push_back(random_form(nv, d - 1, seed * 1000003ULL + i, box));
  return {n, d, std::move(s)};
}

}  // namespace eigenpts
