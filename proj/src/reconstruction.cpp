#include "eigenpts/reconstruction.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace eigenpts {

TensorSpaceBasis::TensorSpaceBasis(int n, int d)
    : n_(n), d_(d), monomials_(monomials_of_degree(static_cast<std::size_t>(n) + 1, static_cast<unsigned>(d - 1))) {
  if (n < 1 || d < 2) throw std::invalid_argument("tensor space needs n >= 1, d >= 2");
}

RationalVector TensorSpaceBasis::coordinates(const PartialSymTensor& t) const {
  if (t.n() != n_ || t.d() != d_) throw std::invalid_argument("tensor shape does not match basis");
  RationalVector v(dim());
  for (std::size_t s = 0; s < nvars(); ++s)
    for (std::size_t k = 0; k < slice_dim(); ++k) v[index(s, k)] = t.slice(s).coefficient(monomials_[k]);
  return v;
}

PartialSymTensor TensorSpaceBasis::tensor(const RationalVector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("coordinate vector has wrong length");
  std::vector<Polynomial> slices;
  for (std::size_t s = 0; s < nvars(); ++s) {
    Polynomial g(nvars());
    for (std::size_t k = 0; k < slice_dim(); ++k) g.add_term(monomials_[k], v[index(s, k)]);
    slices.push_back(std::move(g));
  }
  return PartialSymTensor(n_, d_, std::move(slices));
}

std::vector<RationalVector> TensorSpaceBasis::degenerate_basis() const {
  std::vector<RationalVector> out;
  for (const auto& h : monomials_of_degree(nvars(), static_cast<unsigned>(d_ - 2))) {
    RationalVector v(dim());
    for (std::size_t s = 0; s < nvars(); ++s) {
      const Monomial m = h * Monomial::variable(nvars(), s);
      auto it = std::find(monomials_.begin(), monomials_.end(), m);
      v[index(s, static_cast<std::size_t>(it - monomials_.begin()))] = 1;
    }
    out.push_back(std::move(v));
  }
  return out;
}

ExactMatrix TensorSpaceBasis::exactness_conditions() const {
  ExactMatrix out(0, dim());
  const auto targets = monomials_of_degree(nvars(), static_cast<unsigned>(d_ - 2));
  auto target_index = [&](const Monomial& m) {
    return static_cast<std::size_t>(std::find(targets.begin(), targets.end(), m) - targets.begin());
  };
  for (std::size_t i = 0; i < nvars(); ++i) {
    for (std::size_t j = i + 1; j < nvars(); ++j) {
      std::vector<RationalVector> rows(targets.size(), RationalVector(dim()));
      for (std::size_t k = 0; k < slice_dim(); ++k) {
        const Monomial& m = monomials_[k];
        if (m[j] > 0) rows[target_index(m / Monomial::variable(nvars(), j))][index(i, k)] += m[j];
        if (m[i] > 0) rows[target_index(m / Monomial::variable(nvars(), i))][index(j, k)] -= m[i];
      }
      for (const auto& r : rows) out.append_row(r);
    }
  }
  return out;
}

namespace {

template <class Scalar, class Row>
void containment_rows(const TensorSpaceBasis& b, std::span<const Scalar> p, Row&& emit) {
  std::vector<Scalar> mv(b.slice_dim());
  for (std::size_t k = 0; k < b.slice_dim(); ++k) {
    Scalar v(1);
    for (std::size_t x = 0; x < b.nvars(); ++x)
      for (unsigned e = 0; e < b.monomials()[k][x]; ++e) v *= p[x];
    mv[k] = v;
  }
  for (std::size_t i = 0; i < b.nvars(); ++i) {
    for (std::size_t j = i + 1; j < b.nvars(); ++j) {
      std::vector<Scalar> row(b.dim(), Scalar(0));
      for (std::size_t k = 0; k < b.slice_dim(); ++k) {
        row[b.index(j, k)] += p[i] * mv[k];
        row[b.index(i, k)] -= p[j] * mv[k];
      }
      emit(row);
    }
  }
}

Eigen::MatrixXcd numeric_containment(const PointSet& points, const TensorSpaceBasis& b) {
  std::vector<std::vector<Complex>> rows;
  for (const auto& p : points.points())
    containment_rows<Complex>(b, std::span<const Complex>(p.approx()),
                              [&](const std::vector<Complex>& r) { rows.push_back(r); });
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(b.dim()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < b.dim(); ++c) a(r, c) = rows[r][c];
  return a;
}

Eigen::MatrixXd to_eigen(const ExactMatrix& m) {
  Eigen::MatrixXd a(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a(r, c) = m(r, c).get_d();
  return a;
}

ExactMatrix stack(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out = a;
  out.append_rows(b);
  return out;
}

// Real null space of a (columns of the result), by singular values.
Eigen::MatrixXd numeric_null_space(const Eigen::MatrixXd& a, double rel_tol) {
  const Eigen::Index cols = a.cols();
  if (a.rows() == 0) return Eigen::MatrixXd::Identity(cols, cols);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double top = s.size() > 0 ? s(0) : 0.0;
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * top) ++r;
  return svd.matrixV().rightCols(cols - r);
}

// Row-reduces the span of the columns of k numerically, then reads the
// entries as rationals.
std::optional<std::vector<RationalVector>> rationalize_span(const Eigen::MatrixXd& k, long max_den) {
  Eigen::MatrixXd r = k.transpose();
  const Eigen::Index rows = r.rows(), cols = r.cols();
  Eigen::Index lead = 0;
  for (Eigen::Index c = 0; c < cols && lead < rows; ++c) {
    Eigen::Index best = lead;
    for (Eigen::Index i = lead; i < rows; ++i)
      if (std::abs(r(i, c)) > std::abs(r(best, c))) best = i;
    if (std::abs(r(best, c)) < 1e-6) continue;
    r.row(lead).swap(r.row(best));
    r.row(lead) /= r(lead, c);
    for (Eigen::Index i = 0; i < rows; ++i)
      if (i != lead) r.row(i) -= r(i, c) * r.row(lead);
    ++lead;
  }
  if (lead != rows) return std::nullopt;
  std::vector<RationalVector> out;
  for (Eigen::Index i = 0; i < rows; ++i) {
    RationalVector v;
    for (Eigen::Index c = 0; c < cols; ++c) {
      auto q = rationalize(r(i, c), 1e-7, max_den);
      if (!q) return std::nullopt;
      v.push_back(*q);
    }
    out.push_back(std::move(v));
  }
  return out;
}

RationalVector primitive(RationalVector v) {
  Integer den = 1, num = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    den = lcm(den, Integer(x.get_den()));
  }
  for (auto& x : v) {
    x *= den;
    num = gcd(num, Integer(x.get_num()));
  }
  auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  if (first == v.end()) return v;
  if (*first < 0) num = -num;
  for (auto& x : v) x /= num;
  return v;
}

bool same_point(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.is_exact() && b.is_exact()) return a.exact_equal(b);
  return a.distance(b) < 1e-7;
}

RationalVector random_combination(const std::vector<RationalVector>& basis, std::size_t dim, std::mt19937_64& rng,
                                   int box) {
  std::uniform_int_distribution<int> coef(-box, box);
  RationalVector w(dim);
  for (const auto& v : basis) {
    const int c = coef(rng);
    if (c == 0) continue;
    for (std::size_t i = 0; i < dim; ++i) w[i] += c * v[i];
  }
  return w;
}

}  // namespace

ExactMatrix containment_system(const PointSet& points, int d) {
  TensorSpaceBasis b(points.n(), d);
  ExactMatrix out(0, b.dim());
  for (const auto& p : points.points()) {
    if (!p.is_exact()) throw std::invalid_argument("containment_system needs exact points");
    const auto& c = p.exact();
    if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; }))
      throw std::invalid_argument("point with all coordinates zero");
    containment_rows<Rational>(b, std::span<const Rational>(c), [&](const RationalVector& r) { out.append_row(r); });
  }
  return out;
}

RationalVector reduce_modulo_degenerate(const TensorSpaceBasis& b, const RationalVector& v) {
  std::vector<std::size_t> piv;
  const auto degen = b.degenerate_basis();
  ExactMatrix r = rref(ExactMatrix::from_rows(degen, b.dim()), &piv);
  RationalVector out = v;
  for (std::size_t i = 0; i < piv.size(); ++i) {
    const Rational c = out[piv[i]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < b.dim(); ++k) out[k] -= c * r(i, k);
  }
  return out;
}

KernelReport eigenscheme_kernel(const PointSet& points, int d, bool symmetric, const ReconstructionOptions& opts) {
  TensorSpaceBasis b(points.n(), d);
  KernelReport rep;
  rep.symmetric = symmetric;
  rep.degenerate_dimension = static_cast<std::size_t>(binomial_l(points.n() + d - 2, points.n()));
  const ExactMatrix exactness = b.exactness_conditions();
  const auto degen = b.degenerate_basis();

  if (symmetric) {
    // Degenerate tuples that are also gradients.
    ExactMatrix ed(exactness.rows(), degen.size());
    for (std::size_t c = 0; c < degen.size(); ++c) {
      auto col = exactness.apply(degen[c]);
      for (std::size_t r = 0; r < col.size(); ++r) ed(r, c) = col[r];
    }
    rep.reference_dimension = degen.size() - rank(ed);
  } else {
    rep.reference_dimension = rep.degenerate_dimension;
  }

  if (points.all_exact()) {
    const ExactMatrix a = containment_system(points, d);
    const ExactMatrix with_sym = stack(a, exactness);
    rep.basis = kernel(symmetric ? with_sym : a);
    rep.dimension = rep.basis.size();
    rep.symmetric_subspace_dimension = symmetric ? rep.dimension : b.dim() - rank(with_sym);
  } else {
    rep.numeric = true;
    Eigen::MatrixXcd ac = numeric_containment(points, b);
    for (Eigen::Index r = 0; r < ac.rows(); ++r) {
      const double nr = ac.row(r).norm();
      if (nr > 0) ac.row(r) /= nr;
    }
    Eigen::MatrixXd real(2 * ac.rows(), ac.cols());
    real << ac.real(), ac.imag();
    Eigen::MatrixXd ex = to_eigen(exactness);
    for (Eigen::Index r = 0; r < ex.rows(); ++r) {
      const double nr = ex.row(r).norm();
      if (nr > 0) ex.row(r) /= nr;
    }
    Eigen::MatrixXd both(real.rows() + ex.rows(), real.cols());
    both << real, ex;
    const Eigen::MatrixXd null_all = numeric_null_space(symmetric ? both : real, opts.rel_tol);
    rep.dimension = static_cast<std::size_t>(null_all.cols());
    rep.symmetric_subspace_dimension =
        symmetric ? rep.dimension : static_cast<std::size_t>(numeric_null_space(both, opts.rel_tol).cols());
    auto exact = rationalize_span(null_all, opts.max_denominator);
    if (exact) {
      double worst = 0;
      for (const auto& v : *exact) {
        Eigen::VectorXcd x(static_cast<Eigen::Index>(v.size()));
        for (std::size_t i = 0; i < v.size(); ++i) x(i) = v[i].get_d();
        const double denom = std::max(1.0, x.norm() * std::max(1.0, ac.norm()));
        worst = std::max(worst, (ac * x).norm() / denom);
        if (symmetric) {
          auto ev = exactness.apply(v);
          if (std::any_of(ev.begin(), ev.end(), [](const Rational& q) { return q != 0; })) worst = 1;
        }
      }
      rep.numeric_residual = worst;
      if (worst < opts.rel_tol) rep.basis = std::move(*exact);
      else rep.rationalized = false;
    } else {
      rep.rationalized = false;
    }
  }
  rep.contains_proper_tensor = rep.dimension > rep.reference_dimension;
  return rep;
}

bool kernel_contains(const KernelReport& k, const TensorSpaceBasis& b, const PartialSymTensor& t) {
  std::vector<RationalVector> span = k.basis;
  for (auto& v : b.degenerate_basis()) span.push_back(std::move(v));
  return in_span(span, b.coordinates(t));
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Yes: return "YES";
    case Decision::No: return "NO";
    case Decision::Undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

DecisionReport is_eigenscheme(const PointSet& points, int d, bool symmetric, const ReconstructionOptions& opts) {
  DecisionReport rep;
  TensorSpaceBasis b(points.n(), d);
  rep.kernel = eigenscheme_kernel(points, d, symmetric, opts);
  const long expected = expected_count(points.n(), d);
  rep.cardinality_ok = static_cast<long>(points.size()) == expected;

  if (!rep.kernel.contains_proper_tensor) {
    rep.decision = Decision::No;
    rep.diagnostic = "kernel is the degenerate subspace";
    return rep;
  }
  if (!rep.cardinality_ok) {
    rep.diagnostic = "expected " + std::to_string(expected) + " points, got " + std::to_string(points.size());
    return rep;
  }
  if (!rep.kernel.rationalized) {
    rep.diagnostic = "numeric kernel could not be rationalized";
    return rep;
  }

  for (int attempt = 0; attempt < opts.retries; ++attempt) {
    const std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(attempt);
    rep.seeds_tried.push_back(seed);
    std::mt19937_64 rng(seed);
    RationalVector w = random_combination(rep.kernel.basis, b.dim(), rng, opts.box);
    if (!symmetric) w = reduce_modulo_degenerate(b, w);
    if (std::all_of(w.begin(), w.end(), [](const Rational& q) { return q == 0; })) continue;
    PartialSymTensor t = b.tensor(primitive(w));
    EigenSolution sol = eigenpoints(t, opts.solver);
    if (!sol.certified || sol.points.size() != points.size()) continue;
    bool all = std::all_of(points.points().begin(), points.points().end(), [&](const ProjectivePoint& p) {
      return std::any_of(sol.points.begin(), sol.points.end(),
                         [&](const EigenPoint& e) { return same_point(p, e.point); });
    });
    if (!all) continue;
    rep.decision = Decision::Yes;
    rep.witness = std::move(t);
    rep.witness_solution = std::move(sol);
    return rep;
  }
  rep.diagnostic = "no kernel sample reproduced the point set after " + std::to_string(opts.retries) + " draws";
  return rep;
}

long enlarge_bound(int d) { return binomial_l(d - 1, 3) + 3 * binomial_l(d, 2) + 1; }

EnlargeResult enlarge(const PointSet& w, int d, const ReconstructionOptions& opts) {
  if (w.n() != 3) throw std::invalid_argument("enlarge works in P^3");
  if (d < 3) throw std::invalid_argument("enlarge needs d >= 3");
  const long bound = enlarge_bound(d);
  if (static_cast<long>(w.size()) > bound)
    throw std::invalid_argument(std::to_string(w.size()) + " points exceed the bound; bound is " +
                                std::to_string(bound));
  if (!w.all_exact()) throw std::invalid_argument("enlarge needs exact points");

  EnlargeResult res;
  TensorSpaceBasis b(3, d);
  res.kernel = eigenscheme_kernel(w, d, false, opts);
  if (!res.kernel.contains_proper_tensor) {
    res.diagnostic = "kernel is the degenerate subspace";
    return res;
  }
  const long expected = expected_count(3, d);
  for (int attempt = 0; attempt < opts.retries; ++attempt) {
    const std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(attempt);
    res.seeds_tried.push_back(seed);
    std::mt19937_64 rng(seed);
    RationalVector v = reduce_modulo_degenerate(b, random_combination(res.kernel.basis, b.dim(), rng, opts.box));
    if (std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; })) continue;
    PartialSymTensor t = b.tensor(primitive(v));
    EigenSolution sol = eigenpoints(t, opts.solver);
    if (!sol.certified || sol.total_multiplicity() != expected) continue;

    const auto gens = minor_ideal_generators(EigenMatrix::of(t));
    std::vector<bool> flag(sol.points.size(), false);
    bool ok = true;
    for (const auto& p : w.points()) {
      if (!vanishes_exactly(gens, p)) {
        ok = false;
        break;
      }
      auto it = std::find_if(sol.points.begin(), sol.points.end(),
                             [&](const EigenPoint& e) { return same_point(p, e.point); });
      if (it == sol.points.end()) {
        ok = false;
        break;
      }
      it->point = p;
      it->residual = 0;
      flag[static_cast<std::size_t>(it - sol.points.begin())] = true;
    }
    if (!ok) continue;
    res.success = true;
    res.tensor = std::move(t);
    res.solution = std::move(sol);
    res.from_input = std::move(flag);
    return res;
  }
  res.diagnostic = "no certified eigenscheme containing the input after " + std::to_string(opts.retries) + " draws";
  return res;
}

ConverseReport converse_hypothesis_report(const PointSet& points, int d, const ConfigOptions& opts) {
  if (points.n() != 3) throw std::invalid_argument("converse report is for points in P^3");
  if (d < 3) throw std::invalid_argument("converse report needs d >= 3");
  const long expected = expected_count(3, d);
  if (static_cast<long>(points.size()) != expected)
    throw std::invalid_argument("expected " + std::to_string(expected) + " points, got " +
                                std::to_string(points.size()));
  ConverseReport rep;
  rep.d = d;
  rep.curve_degree = static_cast<long>(d) * d - d + 1;
  rep.threshold = (d - 1) * rep.curve_degree;
  rep.curve_genus = static_cast<long>(d) * d * d - 7L * d * (d - 1) / 2 - 1;
  rep.surface_check = subset_on_hypersurface(points, d - 1, static_cast<std::size_t>(rep.threshold), opts);
  rep.condition_one = !rep.surface_check.found;
  return rep;
}

}  // namespace eigenpts
