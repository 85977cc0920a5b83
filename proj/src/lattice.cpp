#include "eigenpts/lattice.hpp"

#include <stdexcept>

#include "eigenpts/tensor.hpp"

namespace eigenpts {

long SurfaceLattice::dot(const DivisorClass& a, const DivisorClass& b) const {
  if (a.size() != rank() || b.size() != rank()) throw std::invalid_argument("class rank does not match lattice");
  long s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += a[i] * gram[i][j] * b[j];
  return s;
}

DivisorClass SurfaceLattice::combine(long h, long l) const {
  DivisorClass c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = h * hyperplane[i] + l * line[i];
  return c;
}

SurfaceLattice rank_two_lattice(int n, int d) {
  if (n < 3 || d < 3) throw std::invalid_argument("eigensurface lattice needs n >= 3, d >= 3");
  SurfaceLattice lat;
  lat.labels = {"H", "L"};
  lat.gram = {{eigensurface_degree(n, d), 1}, {1, 2L - d}};
  lat.hyperplane = {1, 0};
  lat.line = {0, 1};
  lat.canonical = {static_cast<long>(n - 3) * (d - 1) + d - n - 1, n - 3L};
  return lat;
}

SurfaceLattice eigensurface_lattice(int n, int d) {
  if (n == 3 && d == 3) return cubic_surface_lattice();
  return rank_two_lattice(n, d);
}

DivisorClass eigencurve_class(const SurfaceLattice& lat, int n, int d) {
  DivisorClass c = lat.combine(d - 1, 1);
  const long deg = lat.dot(c, lat.hyperplane);
  if (deg != eigencurve_degree(n, d))
    throw std::logic_error("curve class has degree " + std::to_string(deg) + ", expected " +
                           std::to_string(eigencurve_degree(n, d)));
  return c;
}

long ci_degree(const SurfaceLattice& lat, const DivisorClass& c0, const DivisorClass& c1) { return lat.dot(c0, c1); }

long adjunction_genus(const SurfaceLattice& lat, const DivisorClass& c) {
  DivisorClass kc(c.size());
  if (c.size() != lat.rank()) throw std::invalid_argument("class rank does not match lattice");
  for (std::size_t i = 0; i < c.size(); ++i) kc[i] = lat.canonical[i] + c[i];
  const long v = lat.dot(kc, c);
  if (v % 2 != 0) throw std::domain_error("(K+C).C is odd");
  return v / 2 + 1;
}

AlphaBeta alpha_beta_solutions(int d) {
  if (d < 3) throw std::invalid_argument("alpha_beta_solutions needs d >= 3");
  AlphaBeta r;
  const Rational D(d);
  r.alpha1 = D - 1;
  r.beta1 = 1;
  r.alpha2 = Rational(d * d - d + 2, d);
  r.alpha2.canonicalize();
  r.beta2 = -1;
  auto linear = [&](const Rational& a, const Rational& b) { return D * a + b == D * D - D + 1; };
  auto quadratic = [&](const Rational& a, const Rational& b) {
    return 2 * D * D * D - 7 * D * (D - 1) - 4 == D * a * a + (2 - D) * b * b + 2 * a * b + (D - 4) * (a * D + b);
  };
  if (!linear(r.alpha1, r.beta1) || !quadratic(r.alpha1, r.beta1) || !linear(r.alpha2, r.beta2) ||
      !quadratic(r.alpha2, r.beta2))
    throw std::logic_error("alpha, beta solutions fail their equations");
  r.first_integral = r.alpha1.get_den() == 1 && r.beta1.get_den() == 1;
  r.second_integral = r.alpha2.get_den() == 1 && r.beta2.get_den() == 1;
  return r;
}

RiemannRoch riemann_roch_chi(int d) {
  if (d < 3) throw std::invalid_argument("riemann_roch_chi needs d >= 3");
  const SurfaceLattice lat = rank_two_lattice(3, d);
  const DivisorClass c = lat.combine(d - 1, 1);
  DivisorClass cmk(2);
  for (std::size_t i = 0; i < 2; ++i) cmk[i] = c[i] - lat.canonical[i];
  const long v = lat.dot(c, cmk);
  if (v % 2 != 0) throw std::logic_error("C.(C-K) is odd");
  RiemannRoch r;
  r.chi_lattice = v / 2 + 1 + binomial_l(d - 1, 3);
  r.chi_closed = 3 * binomial_l(d, 2) + 3 + binomial_l(d - 1, 3);
  if (r.chi_lattice != r.chi_closed)
    throw std::logic_error("Riemann-Roch mismatch: " + std::to_string(r.chi_lattice) + " vs " +
                           std::to_string(r.chi_closed));
  r.bound = r.chi_closed - 2;
  return r;
}

SurfaceLattice cubic_surface_lattice() {
  SurfaceLattice lat;
  lat.labels = {"l", "e1", "e2", "e3", "e4", "e5", "e6"};
  lat.gram.assign(7, std::vector<long>(7, 0));
  lat.gram[0][0] = 1;
  for (int i = 1; i < 7; ++i) lat.gram[i][i] = -1;
  lat.hyperplane = {3, -1, -1, -1, -1, -1, -1};
  lat.canonical = {-3, 1, 1, 1, 1, 1, 1};
  lat.line = {0, 1, 0, 0, 0, 0, 0};
  return lat;
}

LineCensus cubic_surface_lines(const SurfaceLattice& lat) {
  LineCensus c;
  for (int j = 1; j <= 6; ++j) {
    DivisorClass e(7, 0);
    e[j] = 1;
    c.lines.push_back(e);
  }
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) {
      DivisorClass e(7, 0);
      e[0] = 1;
      e[a] = e[b] = -1;
      c.lines.push_back(e);
    }
  for (int skip = 1; skip <= 6; ++skip) {
    DivisorClass e(7, -1);
    e[0] = 2;
    e[skip] = 0;
    c.lines.push_back(e);
  }
  for (const auto& l : c.lines) {
    if (lat.dot(l, l) != -1 || adjunction_genus(lat, l) != 0 || lat.dot(l, lat.hyperplane) != 1)
      c.all_exceptional = false;
    DivisorClass curve(7);
    for (int i = 0; i < 7; ++i) curve[i] = l[i] + 2 * lat.hyperplane[i];
    if (lat.dot(curve, lat.hyperplane) != 7 || adjunction_genus(lat, curve) != 5) c.curves_degree_seven = false;
  }
  return c;
}

namespace {

IdentityCheck check(std::string name, long expected, long actual) {
  return {std::move(name), std::to_string(expected), std::to_string(actual), expected == actual};
}

}  // namespace

std::vector<IdentityCheck> lattice_identities(int n, int d) {
  std::vector<IdentityCheck> out;
  const SurfaceLattice lat = eigensurface_lattice(n, d);
  out.push_back(check("H.H = surface degree", eigensurface_degree(n, d), lat.dot(lat.hyperplane, lat.hyperplane)));
  out.push_back(check("H.L", 1, lat.dot(lat.hyperplane, lat.line)));
  out.push_back(check("L.L", lat.rank() == 7 ? -1 : 2 - d, lat.dot(lat.line, lat.line)));
  out.push_back(check("genus of L", 0, adjunction_genus(lat, lat.line)));
  const DivisorClass c = eigencurve_class(lat, n, d);
  out.push_back(check("C.H = curve degree", eigencurve_degree(n, d), lat.dot(c, lat.hyperplane)));
  out.push_back(check("C.C = eigenpoint count", expected_count(n, d), ci_degree(lat, c, c)));
  if (n == 3) {
    out.push_back(check("genus of C", static_cast<long>(d) * d * d - 7L * d * (d - 1) / 2 - 1, adjunction_genus(lat, c)));
    const RiemannRoch rr = riemann_roch_chi(d);
    out.push_back(check("Riemann-Roch chi", rr.chi_closed, rr.chi_lattice));
    out.push_back(check("enlargement bound", binomial_l(d - 1, 3) + 3 * binomial_l(d, 2) + 1, rr.bound));
    const AlphaBeta ab = alpha_beta_solutions(d);
    out.push_back({"alpha,beta first solution integral", "true", ab.first_integral ? "true" : "false", ab.first_integral});
    out.push_back({"alpha,beta second solution non-integral", "true", ab.second_integral ? "false" : "true",
                   !ab.second_integral});
  }
  if (lat.rank() == 7) {
    const LineCensus census = cubic_surface_lines(lat);
    out.push_back(check("line census", 27, static_cast<long>(census.lines.size())));
    out.push_back({"lines are exceptional of degree 1", "true", census.all_exceptional ? "true" : "false",
                   census.all_exceptional});
    out.push_back({"line + 2H has degree 7, genus 5", "true", census.curves_degree_seven ? "true" : "false",
                   census.curves_degree_seven});
    out.push_back(check("K.K", 3, lat.dot(lat.canonical, lat.canonical)));
  }
  return out;
}

}  // namespace eigenpts
