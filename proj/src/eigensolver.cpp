#include "eigenpts/eigensolver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "eigenpts/groebner.hpp"
#include "eigenpts/univariate.hpp"

namespace eigenpts {

// ---------------------------------------------------------------------------
// ProjectivePoint

ProjectivePoint ProjectivePoint::from_exact(std::vector<Rational> coords) {
  auto first = std::find_if(coords.begin(), coords.end(), [](const Rational& c) { return c != 0; });
  if (first == coords.end()) throw std::invalid_argument("projective point with all coordinates zero");
  Rational inv = 1 / *first;
  for (auto& c : coords) c *= inv;
  std::vector<Complex> approx;
  for (const auto& c : coords) approx.emplace_back(c.get_d(), 0.0);
  ProjectivePoint p = from_complex(std::move(approx));
  p.exact_ = std::move(coords);
  return p;
}

ProjectivePoint ProjectivePoint::from_complex(std::vector<Complex> coords) {
  double mx = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (std::abs(coords[i]) > mx * (1 + 1e-12)) {
      mx = std::abs(coords[i]);
      k = i;
    }
  }
  if (mx == 0 || !std::isfinite(mx)) throw std::invalid_argument("projective point with all coordinates zero");
  Complex s = coords[k];
  for (auto& c : coords) {
    c /= s;
    // Components far below double resolution are rounding noise.
    if (std::abs(c.imag()) < 1e-30) c.imag(0.0);
    if (std::abs(c.real()) < 1e-30) c.real(0.0);
  }
  coords[k] = 1.0;
  ProjectivePoint p;
  p.approx_ = std::move(coords);
  return p;
}

bool ProjectivePoint::is_real(double tol) const {
  if (exact_) return true;
  // Real up to a common phase: compare against the first-nonzero chart.
  for (const auto& c : first_nonzero_normalized())
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

double ProjectivePoint::distance(const ProjectivePoint& o) const {
  if (o.size() != size()) throw std::invalid_argument("point dimension mismatch");
  std::size_t k = 0;
  for (std::size_t i = 0; i < size(); ++i)
    if (std::abs(approx_[i]) > std::abs(approx_[k])) k = i;
  if (std::abs(o.approx_[k]) < 1e-12) return std::numeric_limits<double>::infinity();
  double dist = 0;
  for (std::size_t i = 0; i < size(); ++i)
    dist = std::max(dist, std::abs(approx_[i] / approx_[k] - o.approx_[i] / o.approx_[k]));
  return dist;
}

bool ProjectivePoint::exact_equal(const ProjectivePoint& o) const {
  return exact_ && o.exact_ && *exact_ == *o.exact_;
}

std::vector<Complex> ProjectivePoint::first_nonzero_normalized(double tol) const {
  std::vector<Complex> out = approx_;
  for (const auto& c : approx_) {
    if (std::abs(c) > tol) {
      Complex s = c;
      for (auto& x : out) x /= s;
      break;
    }
  }
  return out;
}

bool point_less(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.is_exact() && b.is_exact()) {
    const auto& x = a.exact();
    const auto& y = b.exact();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
  auto x = a.first_nonzero_normalized(), y = b.first_nonzero_normalized();
  constexpr double eps = 1e-9;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (std::abs(x[i].real() - y[i].real()) > eps) return x[i].real() < y[i].real();
    if (std::abs(x[i].imag() - y[i].imag()) > eps) return x[i].imag() < y[i].imag();
  }
  return x.size() < y.size();
}

// ---------------------------------------------------------------------------
// Numeric helpers

namespace {

double affine_residual(const Polynomial& f, std::span<const Complex> x) {
  double scale = 1;
  for (const auto& c : x) scale = std::max(scale, std::abs(c));
  double norm = 0;
  for (const auto& [m, c] : f.terms()) norm += std::abs(c.get_d()) * std::pow(scale, m.degree());
  if (norm == 0) return 0;
  return std::abs(f.evaluate(x)) / norm;
}

double max_affine_residual(const std::vector<Polynomial>& sys, std::span<const Complex> x) {
  double r = 0;
  for (const auto& f : sys) r = std::max(r, affine_residual(f, x));
  return r;
}

// Gauss-Newton on a (possibly overdetermined) system.
void newton_polish(const std::vector<Polynomial>& sys, const std::vector<std::vector<Polynomial>>& jac,
                   std::vector<Complex>& x, int max_iter = 30) {
  const auto m = static_cast<Eigen::Index>(sys.size());
  const auto k = static_cast<Eigen::Index>(x.size());
  if (m == 0 || k == 0) return;
  double res = max_affine_residual(sys, x);
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXcd f(m);
    Eigen::MatrixXcd j(m, k);
    for (Eigen::Index r = 0; r < m; ++r) {
      f(r) = sys[r].evaluate(x);
      for (Eigen::Index c = 0; c < k; ++c) j(r, c) = jac[r][c].evaluate(x);
    }
    Eigen::VectorXcd dx = j.completeOrthogonalDecomposition().solve(-f);
    if (!dx.allFinite()) break;
    std::vector<Complex> nx = x;
    for (Eigen::Index c = 0; c < k; ++c) nx[c] += dx(c);
    double nres = max_affine_residual(sys, nx);
    if (nres > res && it > 0) break;
    x = std::move(nx);
    double step = dx.cwiseAbs().maxCoeff();
    double sz = 1;
    for (const auto& c : x) sz = std::max(sz, std::abs(c));
    res = nres;
    if (step < 1e-15 * sz || res < 1e-16) break;
  }
}

ExactMatrix linear_combination(const std::vector<ExactMatrix>& ms, const std::vector<Rational>& a) {
  ExactMatrix out(ms.front().rows(), ms.front().cols());
  for (std::size_t v = 0; v < ms.size(); ++v) {
    if (a[v] == 0) continue;
    for (std::size_t r = 0; r < out.rows(); ++r)
      for (std::size_t c = 0; c < out.cols(); ++c)
        if (ms[v](r, c) != 0) out(r, c) += a[v] * ms[v](r, c);
  }
  return out;
}

// Incremental elimination of the Krylov sequence e, Me, M^2 e, ...
class Krylov {
 public:
  Krylov(const ExactMatrix& m, std::size_t start) {
    const std::size_t dim = m.rows();
    RationalVector v(dim, Rational(0));
    v[start] = 1;
    for (std::size_t step = 0; step <= dim; ++step) {
      RationalVector comb(step + 1, Rational(0));
      comb[step] = 1;
      RationalVector r = v;
      reduce(r, comb);
      auto piv = std::find_if(r.begin(), r.end(), [](const Rational& c) { return c != 0; });
      if (piv == r.end()) {
        minpoly_ = UPoly(std::move(comb));
        return;
      }
      pivots_.push_back(static_cast<std::size_t>(piv - r.begin()));
      reduced_.push_back(std::move(r));
      combs_.push_back(std::move(comb));
      v = m.apply(v);
    }
    throw std::logic_error("Krylov sequence did not terminate");
  }

  const UPoly& minimal_polynomial() const { return minpoly_; }

  // Coefficients c with w = sum c_i M^i e, or nullopt if w is outside the span.
  std::optional<RationalVector> express(RationalVector w) const {
    RationalVector comb(reduced_.size(), Rational(0));
    for (std::size_t i = 0; i < reduced_.size(); ++i) {
      const Rational& a = w[pivots_[i]];
      if (a == 0) continue;
      Rational f = a / reduced_[i][pivots_[i]];
      for (std::size_t c = 0; c < w.size(); ++c)
        if (reduced_[i][c] != 0) w[c] -= f * reduced_[i][c];
      for (std::size_t c = 0; c < combs_[i].size(); ++c)
        if (combs_[i][c] != 0) comb[c] += f * combs_[i][c];
    }
    for (const auto& c : w)
      if (c != 0) return std::nullopt;
    return comb;
  }

 private:
  void reduce(RationalVector& r, RationalVector& comb) const {
    for (std::size_t i = 0; i < reduced_.size(); ++i) {
      const Rational& a = r[pivots_[i]];
      if (a == 0) continue;
      Rational f = a / reduced_[i][pivots_[i]];
      for (std::size_t c = 0; c < r.size(); ++c)
        if (reduced_[i][c] != 0) r[c] -= f * reduced_[i][c];
      for (std::size_t c = 0; c < combs_[i].size(); ++c)
        if (combs_[i][c] != 0) comb[c] -= f * combs_[i][c];
    }
  }

  std::vector<RationalVector> reduced_;
  std::vector<std::size_t> pivots_;
  std::vector<RationalVector> combs_;
  UPoly minpoly_;
};

struct ShapeRepresentation {
  std::vector<Rational> shear;
  std::uint64_t seed = 0;
  UPoly eliminant;                // minimal polynomial of the shear form
  std::vector<UPoly> coordinates;  // x_v = coordinates[v](t)
};

struct QuotientAlgebra {
  GroebnerBasis gb;
  std::vector<Monomial> basis;
  std::vector<ExactMatrix> mult;  // one per variable
  std::size_t one_index = 0;
};

QuotientAlgebra quotient_algebra(GroebnerBasis gb) {
  QuotientAlgebra q{std::move(gb), {}, {}, 0};
  q.basis = q.gb.standard_monomials();
  const std::size_t k = q.gb.nvars();
  for (std::size_t v = 0; v < k; ++v)
    q.mult.push_back(q.gb.multiplication_matrix(Polynomial::variable(k, v), q.basis));
  return q;
}

std::vector<Rational> draw_shear(std::size_t k, std::uint64_t seed, int box) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-box, box);
  std::vector<Rational> a(k);
  for (std::size_t v = 0; v + 1 < k; ++v) a[v] = dist(rng);
  a[k - 1] = 1;
  return a;
}

std::uint64_t shear_seed(std::uint64_t seed, int attempt) {
  return seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(attempt) + 1;
}

std::optional<ShapeRepresentation> shape_position(const QuotientAlgebra& q, std::uint64_t seed,
                                                  int attempt, int box) {
  const std::size_t dim = q.basis.size();
  const std::size_t k = q.gb.nvars();
  ShapeRepresentation s;
  s.seed = shear_seed(seed, attempt);
  // Box grows fourfold per attempt; symmetric point sets defeat small boxes.
  const int grown = box << std::min(2 * attempt, 20);
  s.shear = k == 1 ? std::vector<Rational>{Rational(1)} : draw_shear(k, s.seed, grown);
  ExactMatrix ml = linear_combination(q.mult, s.shear);
  Krylov kr(ml, q.one_index);
  if (kr.minimal_polynomial().degree() != static_cast<int>(dim)) return std::nullopt;
  s.eliminant = kr.minimal_polynomial();
  for (std::size_t v = 0; v < k; ++v) {
    RationalVector w(dim, Rational(0));
    for (std::size_t r = 0; r < dim; ++r) w[r] = q.mult[v](r, q.one_index);
    auto c = kr.express(std::move(w));
    if (!c) throw std::logic_error("coordinate outside the Krylov span in shape position");
    s.coordinates.push_back(UPoly(std::move(*c)));
  }
  return s;
}

Polynomial univariate_in(const UPoly& p, std::size_t nvars, std::size_t v) {
  Polynomial out(nvars);
  for (int i = 0; i <= p.degree(); ++i) out.add_term(Monomial::variable(nvars, v, static_cast<unsigned>(i)), p[i]);
  return out;
}

std::optional<std::vector<Rational>> recognize_rational(const std::vector<Complex>& x,
                                                        const std::vector<Polynomial>& sys,
                                                        long max_den) {
  std::vector<Rational> q;
  for (const auto& c : x) {
    double scale = std::max(1.0, std::abs(c));
    if (std::abs(c.imag()) > 1e-8 * scale) return std::nullopt;
    auto r = rationalize(c.real(), 1e-9, max_den);
    if (!r) return std::nullopt;
    q.push_back(*r);
  }
  for (const auto& f : sys)
    if (f.evaluate(q) != 0) return std::nullopt;
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// Zero-dimensional solving

ZeroDimResult solve_zero_dimensional(const std::vector<Polynomial>& system, const SolverOptions& opts) {
  ZeroDimResult res;
  if (system.empty()) {
    res.positive_dimensional = true;
    res.diagnostic = "empty system";
    return res;
  }
  const std::size_t k = system.front().nvars();
  std::vector<Polynomial> sys;
  for (const auto& f : system) {
    if (f.nvars() != k) throw std::invalid_argument("system polynomials differ in variable count");
    if (!f.is_zero()) sys.push_back(f);
  }
  if (k == 0) {
    // Constant system: solvable iff every equation vanishes.
    if (!sys.empty()) return res;
    res.positive_dimensional = false;
    res.quotient_dim = 1;
    res.solutions.push_back({{}, std::vector<Rational>{}, 1, 0});
    return res;
  }

  auto gb = GroebnerBasis::compute(sys, k);
  if (gb.is_unit()) return res;
  if (!gb.is_zero_dimensional()) {
    res.positive_dimensional = true;
    res.diagnostic = "positive-dimensional solution set (initial ideal misses a pure power)";
    return res;
  }
  QuotientAlgebra qa = quotient_algebra(std::move(gb));
  res.quotient_dim = qa.basis.size();

  std::optional<ShapeRepresentation> shape;
  for (int a = 0; a < opts.shear_attempts && !shape; ++a) shape = shape_position(qa, opts.seed, a, opts.shear_box);

  // Each entry: square-free factor whose roots have the given multiplicity.
  std::vector<std::pair<UPoly, int>> factors;
  if (shape) {
    auto sq = squarefree_decomposition(shape->eliminant);
    for (std::size_t i = 0; i < sq.size(); ++i)
      if (sq[i].degree() > 0) factors.emplace_back(sq[i], static_cast<int>(i + 1));
  } else {
    // Non-curvilinear point: work in the radical, multiplicities from the
    // characteristic polynomial of the shear form on the original algebra.
    std::vector<Polynomial> rad = sys;
    for (std::size_t v = 0; v < k; ++v) {
      UPoly mu = Krylov(qa.mult[v], qa.one_index).minimal_polynomial();
      UPoly sf = divmod(mu, gcd(mu, mu.derivative())).quotient;
      rad.push_back(univariate_in(sf, k, v));
    }
    QuotientAlgebra qr = quotient_algebra(GroebnerBasis::compute(rad, k));
    for (int a = 0; a < opts.shear_attempts && !shape; ++a) shape = shape_position(qr, opts.seed, a, opts.shear_box);
    if (!shape) {
      res.diagnostic = "no separating linear form found after " + std::to_string(opts.shear_attempts) + " shears";
      throw std::runtime_error(res.diagnostic);
    }
    UPoly chi = characteristic_polynomial(linear_combination(qa.mult, shape->shear));
    auto sq = squarefree_decomposition(chi);
    for (std::size_t i = 0; i < sq.size(); ++i)
      if (sq[i].degree() > 0) factors.emplace_back(sq[i], static_cast<int>(i + 1));
  }
  res.shear_seed = shape->seed;
  res.shear = shape->shear;

  std::vector<std::vector<Polynomial>> jac(sys.size());
  for (std::size_t r = 0; r < sys.size(); ++r)
    for (std::size_t v = 0; v < k; ++v) jac[r].push_back(sys[r].derivative(v));

  for (const auto& [factor, mult] : factors) {
    for (const auto& t : squarefree_roots_hp(factor)) {
      AffineSolution s;
      s.multiplicity = mult;
      for (const auto& p : shape->coordinates) s.coords.push_back(evaluate(p, t).to_complex());
      if (mult == 1) newton_polish(sys, jac, s.coords);
      s.exact = recognize_rational(s.coords, sys, opts.max_denominator);
      if (s.exact) {
        for (std::size_t v = 0; v < k; ++v) s.coords[v] = Complex((*s.exact)[v].get_d(), 0.0);
        s.residual = 0;
      } else {
        s.residual = max_affine_residual(sys, s.coords);
      }
      res.solutions.push_back(std::move(s));
    }
  }
  return res;
}

std::vector<Polynomial> chart_system(const PartialSymTensor& t, std::size_t j) {
  if (j >= t.nvars()) throw std::out_of_range("chart index out of range");
  std::vector<std::optional<Rational>> values(t.nvars());
  values[j] = Rational(1);
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < t.nvars(); ++k) {
    if (k == j) continue;
    Polynomial f = t.slice(k) - Polynomial::variable(t.nvars(), k) * t.slice(j);
    out.push_back(f.specialize(values));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Projective stratification

long EigenSolution::total_multiplicity() const {
  long s = 0;
  for (const auto& p : points) s += p.multiplicity;
  return s;
}

double EigenSolution::max_residual() const {
  double r = 0;
  for (const auto& p : points) r = std::max(r, p.residual);
  return r;
}

double generator_residual(const std::vector<Polynomial>& gens, const ProjectivePoint& p) {
  if (p.is_exact()) return vanishes_exactly(gens, p) ? 0.0 : generator_residual(gens, ProjectivePoint::from_complex(p.approx()));
  double r = 0;
  for (const auto& g : gens) {
    double norm = g.l1_norm();
    if (norm == 0) continue;
    r = std::max(r, std::abs(g.evaluate(std::span<const Complex>(p.approx()))) / norm);
  }
  return r;
}

bool vanishes_exactly(const std::vector<Polynomial>& gens, const ProjectivePoint& p) {
  if (!p.is_exact()) return false;
  for (const auto& g : gens)
    if (g.evaluate(std::span<const Rational>(p.exact())) != 0) return false;
  return true;
}

namespace {

void dedup_and_sort(std::vector<EigenPoint>& pts, double tol) {
  std::vector<EigenPoint> out;
  for (auto& p : pts) {
    bool merged = false;
    for (auto& q : out) {
      if (q.point.distance(p.point) < tol) {
        q.multiplicity += p.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const EigenPoint& a, const EigenPoint& b) {
    return point_less(a.point, b.point);
  });
  pts = std::move(out);
}

EigenSolution solve_strata(const std::vector<Polynomial>& gens, std::size_t nvars, const SolverOptions& opts,
                           const std::vector<Polynomial>* chart0, std::optional<long> stop_at) {
  EigenSolution sol;
  sol.seed = opts.seed;
  std::vector<EigenPoint> pts;
  long total = 0;
  for (std::size_t level = 0; level < nvars; ++level) {
    if (stop_at && total >= *stop_at) break;
    std::vector<std::optional<Rational>> values(nvars);
    for (std::size_t i = 0; i < level; ++i) values[i] = Rational(0);
    values[level] = Rational(1);
    std::vector<Polynomial> sys;
    if (level == 0 && chart0) {
      sys = *chart0;
    } else {
      for (const auto& g : gens) sys.push_back(g.specialize(values));
    }
    ChartRecord rec;
    rec.level = level;
    ZeroDimResult zr;
    if (level + 1 == nvars) {
      // Only the coordinate point e_level remains.
      bool all_zero = std::all_of(sys.begin(), sys.end(), [](const Polynomial& p) { return p.is_zero(); });
      zr.quotient_dim = all_zero ? 1 : 0;
      if (all_zero) zr.solutions.push_back({{}, std::vector<Rational>{}, 1, 0});
    } else {
      std::size_t rest = nvars - level - 1;
      bool any = std::any_of(sys.begin(), sys.end(), [](const Polynomial& p) { return !p.is_zero(); });
      if (!any) {
        sys.assign(1, Polynomial(rest));
      }
      zr = solve_zero_dimensional(sys, opts);
    }
    rec.quotient_dim = zr.quotient_dim;
    rec.shear_seed = zr.shear_seed;
    if (zr.positive_dimensional) {
      sol.positive_dimensional = true;
      std::ostringstream os;
      os << "positive-dimensional eigenscheme in the chart x_" << level << " = 1";
      if (level > 0) os << " of the stratum x_0 = ... = x_" << level - 1 << " = 0";
      sol.diagnostic = os.str();
      sol.charts.push_back(rec);
      break;
    }
    for (auto& s : zr.solutions) {
      EigenPoint ep;
      ep.multiplicity = s.multiplicity;
      if (s.exact) {
        std::vector<Rational> c(nvars, Rational(0));
        c[level] = 1;
        for (std::size_t v = 0; v < s.exact->size(); ++v) c[level + 1 + v] = (*s.exact)[v];
        ep.point = ProjectivePoint::from_exact(std::move(c));
      } else {
        std::vector<Complex> c(nvars, Complex(0));
        c[level] = 1;
        for (std::size_t v = 0; v < s.coords.size(); ++v) c[level + 1 + v] = s.coords[v];
        ep.point = ProjectivePoint::from_complex(std::move(c));
      }
      total += s.multiplicity;
      ++rec.found;
      pts.push_back(std::move(ep));
    }
    sol.charts.push_back(rec);
  }
  for (auto& p : pts) p.residual = generator_residual(gens, p.point);
  dedup_and_sort(pts, opts.dedup_tol);
  sol.points = std::move(pts);
  return sol;
}

}  // namespace

EigenSolution eigenpoints(const PartialSymTensor& t, const SolverOptions& opts) {
  auto gens = minor_ideal_generators(EigenMatrix::of(t));
  auto chart0 = chart_system(t, 0);
  const long expected = expected_count(t.n(), t.d());
  EigenSolution sol = solve_strata(gens, t.nvars(), opts, &chart0, expected);
  sol.n = t.n();
  sol.d = t.d();
  sol.expected = expected;
  for (auto& p : sol.points) {
    auto c = p.point.first_nonzero_normalized();
    std::size_t j = 0;
    while (j < c.size() && std::abs(c[j]) < 0.5) ++j;
    p.eigenvalue = j < c.size() ? t.slice(j).evaluate(std::span<const Complex>(c)) : Complex(0);
  }
  bool simple = std::all_of(sol.points.begin(), sol.points.end(), [](const EigenPoint& p) { return p.multiplicity == 1; });
  sol.certified = !sol.positive_dimensional && simple && sol.total_multiplicity() == expected &&
                  sol.max_residual() < 1e-8;
  if (!sol.certified && sol.diagnostic.empty()) {
    std::ostringstream os;
    os << "found total multiplicity " << sol.total_multiplicity() << " in " << sol.points.size()
       << " points, expected " << expected << " simple points";
    sol.diagnostic = os.str();
  }
  return sol;
}

EigenSolution solve_projective(const std::vector<Polynomial>& generators, std::size_t nvars,
                               const SolverOptions& opts) {
  EigenSolution sol = solve_strata(generators, nvars, opts, nullptr, std::nullopt);
  sol.n = static_cast<int>(nvars) - 1;
  return sol;
}

std::vector<EigenPoint> real_points(const EigenSolution& s, double tol) {
  std::vector<EigenPoint> out;
  for (const auto& p : s.points)
    if (p.point.is_real(tol)) out.push_back(p);
  return out;
}

MembershipReport curve_membership_check(const PartialSymTensor& t, std::size_t i, std::size_t j,
                                        const EigenSolution& solution, double tol) {
  if (i == j) throw std::invalid_argument("curve membership needs two distinct columns");
  MembershipReport rep;
  rep.i = i;
  rep.j = j;
  auto gi = minor_ideal_generators(EigenMatrix::of(t, {i}));
  auto gj = minor_ideal_generators(EigenMatrix::of(t, {j}));
  for (const auto& p : solution.points) {
    for (const auto* gens : {&gi, &gj}) {
      if (p.point.is_exact()) {
        ++rep.exact_points;
        if (!vanishes_exactly(*gens, p.point)) rep.exact_points_vanish = false;
      }
      rep.max_residual = std::max(rep.max_residual, generator_residual(*gens, p.point));
    }
  }
  rep.exact_points /= 2;
  rep.within_tolerance = rep.max_residual < tol && rep.exact_points_vanish;
  return rep;
}

}  // namespace eigenpts
