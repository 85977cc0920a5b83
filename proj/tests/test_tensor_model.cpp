#include <doctest.h>

#include <algorithm>

#include "eigenpts/tensor.hpp"
#include "support.hpp"

using namespace eigenpts;

namespace {
Polynomial P(const char* s, std::size_t nvars = 4) { return parse_polynomial(s, nvars); }

bool same_up_to_scale(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const Rational r = a.terms().begin()->second / b.terms().begin()->second;
  return a == b * r;
}
}  // namespace

TEST_SUITE("tensor_model") {
  TEST_CASE("tensor validation") {
    CHECK_THROWS_AS(PartialSymTensor(3, 3, {P("x0^2"), P("x1^2"), P("x2^2")}), std::invalid_argument);
    CHECK_THROWS_AS(PartialSymTensor(3, 3, {P("x0^2"), P("x1^2"), P("x2^2"), P("x3")}), std::invalid_argument);
    CHECK_THROWS_AS(PartialSymTensor(1, 3, {P("x0^2", 2), P("x1^2", 2)}), std::invalid_argument);
    CHECK_NOTHROW(PartialSymTensor(3, 3, {P("x0^2"), P("x1^2"), P("x2^2"), Polynomial(4)}));
  }

  TEST_CASE("Fermat minors") {
    const auto t = fermat_tensor(3, 3).partial();
    auto gens = minor_ideal_generators(EigenMatrix::of(t));
    REQUIRE(gens.size() == 6);
    std::size_t k = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j, ++k) {
        Polynomial xi = Polynomial::variable(4, i), xj = Polynomial::variable(4, j);
        CHECK(same_up_to_scale(gens[k], xi * xj * (xj - xi)));
        CHECK(gens[k].is_homogeneous());
        CHECK(gens[k].total_degree() == 3);
      }
  }

  TEST_CASE("minor count is C(columns, 2)") {
    for (int n = 2; n <= 5; ++n) {
      auto t = random_tensor(n, 3, static_cast<std::uint64_t>(n));
      CHECK(minor_ideal_generators(EigenMatrix::of(t)).size() == static_cast<std::size_t>(binomial_l(n + 1, 2)));
      CHECK(minor_ideal_generators(EigenMatrix::of(t, {0})).size() == static_cast<std::size_t>(binomial_l(n, 2)));
      if (n >= 3)
        CHECK(minor_ideal_generators(EigenMatrix::of(t, {0, 1})).size() == static_cast<std::size_t>(binomial_l(n - 1, 2)));
    }
    auto small = random_tensor(2, 3, 1);
    CHECK_THROWS_AS(minor_ideal_generators(EigenMatrix::of(small, {0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(EigenMatrix::of(small, {0, 1, 2}), std::invalid_argument);
  }

  TEST_CASE("deleted-column minors are a subset of the full minors") {
    auto t = random_tensor(3, 3, 9);
    auto full = minor_ideal_generators(EigenMatrix::of(t));
    for (std::size_t i = 0; i < 4; ++i) {
      for (const auto& g : minor_ideal_generators(EigenMatrix::of(t, {i})))
        CHECK(std::find(full.begin(), full.end(), g) != full.end());
    }
  }

  TEST_CASE("degenerate tensor has vanishing minors") {
    Polynomial h = P("x0 + 2 * x1 - x3");
    std::vector<Polynomial> s;
    for (std::size_t i = 0; i < 4; ++i) s.push_back(Polynomial::variable(4, i) * h);
    for (const auto& g : minor_ideal_generators(EigenMatrix::of(PartialSymTensor(3, 3, s)))) CHECK(g.is_zero());
  }

  TEST_CASE("expected counts") {
    CHECK(expected_count(3, 3) == 15);
    CHECK(expected_count(2, 3) == 7);
    CHECK(expected_count(3, 4) == 40);
    for (int n = 1; n <= 6; ++n) CHECK(expected_count(n, 2) == n + 1);
    for (int n = 1; n <= 6; ++n)
      for (int d = 2; d <= 8; ++d) CHECK(expected_count(n, d) == oracle::count(n, d));
    CHECK(eigencurve_degree(3, 3) == 7);
    CHECK(eigensurface_degree(3, 3) == 3);
    CHECK(eigencurve_degree(3, 4) == 13);
  }

  TEST_CASE("Betti table of the (3,3) eigenscheme") {
    auto b = eagon_northcott_betti(3, 3);
    REQUIRE(b.steps.size() == 3);
    CHECK(b.steps[0] == std::vector<std::pair<long, long>>{{-3, 6}});
    CHECK(b.steps[1] == std::vector<std::pair<long, long>>{{-4, 4}, {-5, 4}});
    CHECK(b.steps[2] == std::vector<std::pair<long, long>>{{-5, 1}, {-6, 1}, {-7, 1}});
  }

  TEST_CASE("Betti table shape") {
    for (int n = 2; n <= 6; ++n)
      for (int d = 2; d <= 7; ++d) {
        auto b = eagon_northcott_betti(n, d);
        REQUIRE(b.steps.size() == static_cast<std::size_t>(n));
        CHECK(b.steps[0] == std::vector<std::pair<long, long>>{{-d, binomial_l(n + 1, 2)}});
        long last = 0;
        for (auto [tw, r] : b.steps.back()) last += r;
        CHECK(last == n);
        for (std::size_t i = 0; i < b.steps.size(); ++i) {
          long total = 0;
          for (auto [tw, r] : b.steps[i]) {
            CHECK(r > 0);
            total += r;
          }
          const long step = static_cast<long>(i) + 1;
          CHECK(total == binomial_l(n + 1, step + 1) * step);
        }
        // Second step carries twists -1-d and 1-2d.
        if (n >= 2 && d >= 3) {
          long a = 0, c = 0;
          for (auto [tw, r] : b.steps[1]) {
            if (tw == -1 - d) a = r;
            if (tw == 1 - 2 * d) c = r;
          }
          CHECK(a == binomial_l(n + 1, 3));
          CHECK(c == binomial_l(n + 1, 3));
        }
        // Last step: twists -(i+1)d - n + 2i + 1, i < n.
        std::vector<std::pair<long, long>> want;
        for (int i = 0; i < n; ++i) want.emplace_back(-(i + 1L) * d - n + 2L * i + 1, 1);
        std::sort(want.begin(), want.end(), [](auto x, auto y) { return x.first > y.first; });
        std::vector<std::pair<long, long>> merged;
        for (auto w : want) {
          if (!merged.empty() && merged.back().first == w.first) merged.back().second += w.second;
          else merged.push_back(w);
        }
        CHECK(b.steps.back() == merged);
      }
  }

  TEST_CASE("multiplicity from Betti tables equals the count") {
    CHECK(multiplicity_from_betti(eagon_northcott_betti(3, 3), 3) == 15);
    CHECK(multiplicity_from_betti(eagon_northcott_betti(2, 4), 2) == 13);
    CHECK(multiplicity_from_betti(eagon_northcott_betti(4, 3), 4) == 31);
    for (int n = 2; n <= 6; ++n)
      for (int d = 2; d <= 7; ++d) {
        auto b = eagon_northcott_betti(n, d);
        CHECK(multiplicity_from_betti(b, n) == expected_count(n, d));
        CHECK(oracle::hilbert_degree(b, n) == expected_count(n, d));
      }
  }

  TEST_CASE("malformed Betti table is rejected") {
    auto b = eagon_northcott_betti(3, 3);
    b.steps[1][0].second += 1;
    CHECK_THROWS_AS(multiplicity_from_betti(b, 3), std::domain_error);
  }

  TEST_CASE("Fermat tensors") {
    auto f = fermat_tensor(3, 3);
    CHECK(f.form() == P("x0^3 + x1^3 + x2^3 + x3^3"));
    for (std::size_t i = 0; i < 4; ++i) {
      Polynomial xi = Polynomial::variable(4, i);
      CHECK(same_up_to_scale(f.partial().slice(i), xi * xi));
    }
    CHECK(fermat_tensor(2, 4).form() == P("x0^4 + x1^4 + x2^4", 3));
  }

  TEST_CASE("degenerate shift") {
    auto t = fermat_tensor(3, 3).partial();
    CHECK(degenerate_shift(t, Polynomial(4)) == t);
    Polynomial h = P("x0");
    auto s = degenerate_shift(t, h);
    CHECK(minor_ideal_generators(EigenMatrix::of(s)) == minor_ideal_generators(EigenMatrix::of(t)));
    CHECK(degenerate_shift(s, -h) == t);
    CHECK_THROWS_AS(degenerate_shift(t, P("x0^2")), std::invalid_argument);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto r = random_tensor(3, 4, seed);
      auto hr = random_form(4, 2, seed + 50);
      CHECK(minor_ideal_generators(EigenMatrix::of(degenerate_shift(r, hr))) ==
            minor_ideal_generators(EigenMatrix::of(r)));
    }
  }
}
