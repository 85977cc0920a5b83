#include <doctest.h>

#include <algorithm>
#include <chrono>

#include "eigenpts/configuration.hpp"
#include "eigenpts/eigensolver.hpp"
#include "support.hpp"

using namespace eigenpts;

namespace {

Polynomial P(const char* s, std::size_t nvars) { return parse_polynomial(s, nvars); }

bool same_sets(const EigenSolution& a, const EigenSolution& b, double tol = 1e-8) {
  if (a.points.size() != b.points.size()) return false;
  return std::all_of(a.points.begin(), a.points.end(), [&](const EigenPoint& p) {
    return std::any_of(b.points.begin(), b.points.end(),
                       [&](const EigenPoint& q) { return p.point.distance(q.point) < tol; });
  });
}

}  // namespace

TEST_SUITE("eigensolver") {
  TEST_CASE("Fermat chart system") {
    auto sys = chart_system(fermat_tensor(3, 3).partial(), 0);
    REQUIRE(sys.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
      Polynomial want = Polynomial::variable(3, k) * Polynomial::variable(3, k) - Polynomial::variable(3, k);
      CHECK(sys[k] == want * Rational(3));
    }
    auto res = solve_zero_dimensional(sys);
    CHECK(res.solutions.size() == 8);
    for (const auto& s : res.solutions) {
      REQUIRE(s.exact);
      for (const auto& c : *s.exact) CHECK((c == 0 || c == 1));
    }
  }

  TEST_CASE("small zero-dimensional systems") {
    auto grid = solve_zero_dimensional({P("x0^2 - x0", 2), P("x1^2 - x1", 2)});
    CHECK(grid.solutions.size() == 4);
    for (const auto& s : grid.solutions) CHECK(s.multiplicity == 1);

    auto fat = solve_zero_dimensional({P("x0^2", 2), P("x1", 2)});
    REQUIRE(fat.solutions.size() == 1);
    CHECK(fat.solutions[0].multiplicity == 2);
    CHECK(std::abs(fat.solutions[0].coords[0]) < 1e-12);

    auto none = solve_zero_dimensional({P("x0 - 1", 2), P("x0 - 2", 2)});
    CHECK(none.solutions.empty());
    CHECK_FALSE(none.positive_dimensional);

    auto line = solve_zero_dimensional({P("x0 - x1", 2)});
    CHECK(line.positive_dimensional);
  }

  TEST_CASE("Fermat cubic eigenpoints") {
    auto t0 = std::chrono::steady_clock::now();
    auto sol = eigenpoints(fermat_tensor(3, 3).partial());
    CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 10);
    CHECK(sol.certified);
    REQUIRE(sol.points.size() == 15);
    auto want = oracle::fermat_cubic_points();
    for (const auto& w : want) {
      bool found = std::any_of(sol.points.begin(), sol.points.end(), [&](const EigenPoint& e) {
        return e.point.is_exact() && e.point.exact_equal(w);
      });
      CHECK(found);
    }
    for (std::size_t i = 1; i < sol.points.size(); ++i) CHECK(point_less(sol.points[i - 1].point, sol.points[i].point));
    CHECK(real_points(sol).size() == 15);
  }

  TEST_CASE("Fermat quartic eigenpoints") {
    // Gradient x_i^3: the points are the sign vectors in {0, 1, -1}^4 up to scale.
    auto sol = eigenpoints(fermat_tensor(3, 4).partial());
    CHECK(sol.certified);
    REQUIRE(sol.points.size() == 40);
    for (int code = 1; code < 81; ++code) {
      std::vector<Rational> v;
      for (int c = code, i = 0; i < 4; ++i, c /= 3) v.push_back(c % 3 == 2 ? -1 : c % 3);
      auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
      if (*first != 1) continue;
      auto w = ProjectivePoint::from_exact(v);
      CHECK(std::any_of(sol.points.begin(), sol.points.end(),
                        [&](const EigenPoint& e) { return e.point.is_exact() && e.point.exact_equal(w); }));
    }
  }

  TEST_CASE("eigenvalue relation in the chart") {
    auto t = random_tensor(2, 4, 3);
    auto sol = eigenpoints(t);
    REQUIRE(sol.certified);
    for (const auto& e : sol.points) {
      auto p = e.point.first_nonzero_normalized();
      std::size_t j = 0;
      while (std::abs(p[j]) < 1e-10) ++j;
      for (std::size_t k = 0; k < p.size(); ++k) {
        Complex gk = t.slice(k).evaluate(std::span<const Complex>(p));
        CHECK(std::abs(gk - e.eigenvalue * p[k]) < 1e-7 * (1 + std::abs(gk)));
      }
    }
  }

  TEST_CASE("seeded counts and residuals") {
    const std::vector<std::pair<int, int>> sizes{{2, 3}, {2, 4}, {2, 5}, {3, 3}};
    for (auto [n, d] : sizes) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        auto t = random_tensor(n, d, seed);
        auto sol = eigenpoints(t);
        CAPTURE(n);
        CAPTURE(d);
        CAPTURE(seed);
        CHECK(sol.certified);
        CHECK(sol.total_multiplicity() == expected_count(n, d));
        auto gens = minor_ideal_generators(EigenMatrix::of(t));
        for (const auto& e : sol.points) {
          if (e.point.is_exact()) CHECK(vanishes_exactly(gens, e.point));
          else CHECK(generator_residual(gens, e.point) < 1e-8);
        }
        CHECK(max_collinear(PointSet::from_solution(sol)).max_count <= static_cast<std::size_t>(d));
      }
    }
  }

  TEST_CASE("degenerate tensor is positive-dimensional") {
    Polynomial h = P("x0 + x1 - x2 + 3 * x3", 4);
    std::vector<Polynomial> s;
    for (std::size_t i = 0; i < 4; ++i) s.push_back(Polynomial::variable(4, i) * h);
    auto sol = eigenpoints(PartialSymTensor(3, 3, s));
    CHECK(sol.positive_dimensional);
    CHECK_FALSE(sol.certified);
    CHECK_FALSE(sol.diagnostic.empty());
  }

  TEST_CASE("curve membership") {
    auto t = fermat_tensor(3, 3).partial();
    auto sol = eigenpoints(t);
    auto rep = curve_membership_check(t, 0, 1, sol);
    CHECK(rep.exact_points == 15);
    CHECK(rep.exact_points_vanish);
    CHECK(rep.max_residual == 0);

    auto r = random_tensor(3, 3, 2);
    auto rs = eigenpoints(r);
    auto rr = curve_membership_check(r, 2, 3, rs);
    CHECK(rr.within_tolerance);
    CHECK(rr.max_residual < 1e-8);
  }

  TEST_CASE("two eigencurves cut out the eigenpoints") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto t = random_tensor(3, 3, seed);
      auto gens = minor_ideal_generators(EigenMatrix::of(t, {0}));
      for (auto& g : minor_ideal_generators(EigenMatrix::of(t, {1}))) gens.push_back(g);
      auto joint = solve_projective(gens, 4);
      auto sol = eigenpoints(t);
      CHECK_FALSE(joint.positive_dimensional);
      CHECK(same_sets(joint, sol));
    }
  }

  TEST_CASE("scaling and degenerate shift leave eigenpoints unchanged") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto t = random_tensor(3, 3, seed);
      auto base = eigenpoints(t);
      CHECK(same_sets(base, eigenpoints(t.scaled(Rational(-7, 3)))));
      auto shifted = eigenpoints(degenerate_shift(t, random_form(4, 1, seed + 10)));
      if (shifted.certified) CHECK(same_sets(base, shifted));
    }
  }

  TEST_CASE("results do not depend on the shear seed") {
    auto t = random_tensor(2, 5, 4);
    SolverOptions a, b;
    b.seed = 99;
    CHECK(same_sets(eigenpoints(t, a), eigenpoints(t, b)));
  }
}
