#include <doctest.h>

#include <algorithm>

#include "eigenpts/reconstruction.hpp"
#include "support.hpp"

using namespace eigenpts;

namespace {

PointSet fermat_points() { return PointSet(3, oracle::fermat_cubic_points()); }

bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a == b * (a.terms().begin()->second / b.terms().begin()->second);
}

bool is_gradient(const PartialSymTensor& t) {
  for (std::size_t i = 0; i < t.nvars(); ++i)
    for (std::size_t j = i + 1; j < t.nvars(); ++j)
      if (t.slice(i).derivative(j) != t.slice(j).derivative(i)) return false;
  return true;
}

}  // namespace

TEST_SUITE("reconstruction") {
  TEST_CASE("tensor space basis") {
    for (int n = 2; n <= 4; ++n)
      for (int d = 2; d <= 5; ++d) {
        TensorSpaceBasis b(n, d);
        CHECK(b.dim() == static_cast<std::size_t>((n + 1) * binomial_l(n + d - 1, n)));
        CHECK(b.degenerate_basis().size() == static_cast<std::size_t>(binomial_l(n + d - 2, n)));
      }
    TensorSpaceBasis b(3, 3);
    auto t = random_tensor(3, 3, 4);
    CHECK(b.tensor(b.coordinates(t)) == t);
  }

  TEST_CASE("single coordinate point imposes n conditions") {
    PointSet p(3, {ProjectivePoint::from_exact({1, 0, 0, 0})});
    auto a = containment_system(p, 3);
    CHECK(a.rows() == 6);
    CHECK(oracle::rank(a) == 3);
  }

  TEST_CASE("empty point set") {
    PointSet empty(3, {});
    auto k = eigenscheme_kernel(empty, 3, false);
    CHECK(k.dimension == 40);
  }

  TEST_CASE("zero point is rejected") {
    CHECK_THROWS_AS(ProjectivePoint::from_exact({0, 0, 0, 0}), std::invalid_argument);
  }

  TEST_CASE("Fermat containment kernel") {
    auto a = containment_system(fermat_points(), 3);
    CHECK(a.rows() == 90);
    CHECK(a.cols() == 40);
    const std::size_t oracle_dim = a.cols() - oracle::rank(a);
    auto k = eigenscheme_kernel(fermat_points(), 3, false);
    CHECK(k.dimension == oracle_dim);
    CHECK(k.dimension == 5);
    CHECK(k.degenerate_dimension == 4);
    CHECK(k.contains_proper_tensor);
    TensorSpaceBasis b(3, 3);
    CHECK(kernel_contains(k, b, fermat_tensor(3, 3).partial()));
  }

  TEST_CASE("symmetric Fermat kernel is the Fermat tensor") {
    auto k = eigenscheme_kernel(fermat_points(), 3, true);
    CHECK(k.dimension == 1);
    CHECK(k.reference_dimension == 0);
    TensorSpaceBasis b(3, 3);
    REQUIRE(k.basis.size() == 1);
    auto t = b.tensor(k.basis[0]);
    auto f = fermat_tensor(3, 3).partial();
    for (std::size_t i = 0; i < 4; ++i) CHECK(proportional(t.slice(i), f.slice(i)));
  }

  TEST_CASE("degenerate subspace lies in every kernel") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const int d = 2 + static_cast<int>(seed % 3);
      PointSet pts(3, oracle::random_points(3, 3 + seed, seed));
      auto k = eigenscheme_kernel(pts, d, false);
      TensorSpaceBasis b(3, d);
      for (const auto& v : b.degenerate_basis()) CHECK(in_span(k.basis, v));
      CHECK(k.dimension >= k.degenerate_dimension);
    }
  }

  TEST_CASE("kernel dimension does not grow as points are added") {
    auto pts = oracle::random_points(3, 14, 21);
    std::size_t last = 40;
    for (std::size_t m = 1; m <= pts.size(); ++m) {
      PointSet sub(3, std::vector<ProjectivePoint>(pts.begin(), pts.begin() + static_cast<long>(m)));
      auto k = eigenscheme_kernel(sub, 3, false);
      CHECK(k.dimension <= last);
      last = k.dimension;
    }
  }

  TEST_CASE("generic points admit only degenerate tensors") {
    PointSet pts(3, oracle::random_points(3, 40, 3));
    auto k = eigenscheme_kernel(pts, 3, false);
    CHECK(k.dimension == 4);
    CHECK_FALSE(k.contains_proper_tensor);
  }

  TEST_CASE("Fermat points are an eigenscheme") {
    auto sym = is_eigenscheme(fermat_points(), 3, true);
    CHECK(sym.decision == Decision::Yes);
    REQUIRE(sym.witness);
    auto f = fermat_tensor(3, 3).partial();
    for (std::size_t i = 0; i < 4; ++i) CHECK(proportional(sym.witness->slice(i), f.slice(i)));
    CHECK(is_eigenscheme(fermat_points(), 3, false).decision == Decision::Yes);
  }

  TEST_CASE("random points are not an eigenscheme") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto rep = is_eigenscheme(PointSet(3, oracle::random_points(3, 15, seed)), 3, false);
      CHECK(rep.decision == Decision::No);
      CHECK(rep.kernel.dimension == 4);
    }
  }

  TEST_CASE("wrong cardinality is reported") {
    auto pts = oracle::fermat_cubic_points();
    pts.pop_back();
    auto rep = is_eigenscheme(PointSet(3, pts), 3, false);
    CHECK_FALSE(rep.cardinality_ok);
    CHECK(rep.decision == Decision::Undecided);
    CHECK(rep.kernel.contains_proper_tensor);
  }

  TEST_CASE("round trip through forward solving") {
    std::vector<std::pair<int, int>> sizes{{3, 3}, {2, 3}, {2, 4}, {2, 5}};
    for (auto [n, d] : sizes) {
      for (std::uint64_t seed = 1; seed <= 2; ++seed) {
        auto t = random_tensor(n, d, seed);
        auto sol = eigenpoints(t);
        REQUIRE(sol.certified);
        auto rep = is_eigenscheme(PointSet::from_solution(sol), d, false);
        CAPTURE(n);
        CAPTURE(d);
        CAPTURE(seed);
        CHECK(rep.decision == Decision::Yes);
        CHECK(rep.kernel.numeric);
        CHECK(kernel_contains(rep.kernel, TensorSpaceBasis(n, d), t));
      }
    }
  }

  TEST_CASE("symmetric reconstruction returns gradients") {
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
      SymmetricTensor s(3, 3, random_form(4, 3, seed));
      auto sol = eigenpoints(s.partial());
      REQUIRE(sol.certified);
      auto rep = is_eigenscheme(PointSet::from_solution(sol), 3, true);
      CHECK(rep.decision == Decision::Yes);
      REQUIRE(rep.witness);
      CHECK(is_gradient(*rep.witness));
      // f = (1/d) sum x_i g_i, and its gradient gives back the slices.
      Polynomial f(4);
      for (std::size_t i = 0; i < 4; ++i) f += Polynomial::variable(4, i) * rep.witness->slice(i);
      f *= Rational(1, 3);
      for (std::size_t i = 0; i < 4; ++i) CHECK(f.derivative(i) == rep.witness->slice(i));
      TensorSpaceBasis b(3, 3);
      for (const auto& v : rep.kernel.basis) CHECK(is_gradient(b.tensor(v)));
    }
  }

  TEST_CASE("enlargement") {
    CHECK(enlarge_bound(3) == 10);
    CHECK(enlarge_bound(4) == 20);
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
      PointSet w(3, oracle::random_points(3, 10, seed + 40));
      auto res = enlarge(w, 3);
      REQUIRE(res.success);
      CHECK(res.solution->points.size() == 15);
      CHECK(std::count(res.from_input.begin(), res.from_input.end(), true) == 10);
      for (const auto& p : w.points()) {
        bool found = std::any_of(res.solution->points.begin(), res.solution->points.end(),
                                 [&](const EigenPoint& e) { return e.point.is_exact() && e.point.exact_equal(p); });
        CHECK(found);
      }
    }
    auto fp = oracle::fermat_cubic_points();
    auto fres = enlarge(PointSet(3, std::vector<ProjectivePoint>(fp.begin(), fp.begin() + 10)), 3);
    CHECK(fres.success);
    CHECK(enlarge(PointSet(3, oracle::random_points(3, 1, 8)), 3).success);
    try {
      enlarge(PointSet(3, oracle::random_points(3, 11, 9)), 3);
      FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("bound is 10") != std::string::npos);
    }
  }

  TEST_CASE("converse hypothesis targets") {
    auto r3 = converse_hypothesis_report(fermat_points(), 3);
    CHECK(r3.threshold == 14);
    CHECK(r3.curve_degree == 7);
    CHECK(r3.curve_genus == 5);
    // Regression value from an independent exact rank computation.
    CHECK(r3.condition_one);
    CHECK(r3.surface_check.subsets_checked == 15);

    auto f4 = eigenpoints(fermat_tensor(3, 4).partial());
    REQUIRE(f4.certified);
    auto r4 = converse_hypothesis_report(PointSet::from_solution(f4), 4);
    CHECK(r4.threshold == 39);
    CHECK(r4.curve_degree == 13);
    CHECK(r4.curve_genus == 21);

    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
      auto sol = eigenpoints(random_tensor(3, 3, seed));
      CHECK(converse_hypothesis_report(PointSet::from_solution(sol), 3).condition_one);
    }
    CHECK_THROWS_AS(converse_hypothesis_report(PointSet(3, oracle::random_points(3, 14, 1)), 3), std::invalid_argument);
  }
}
