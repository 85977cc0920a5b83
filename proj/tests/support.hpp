#pragma once

// Independent reference computations used to check the library.

#include <random>
#include <vector>

#include "eigenpts/configuration.hpp"
#include "eigenpts/exact_matrix.hpp"
#include "eigenpts/tensor.hpp"

namespace oracle {

using eigenpts::Rational;

// Textbook Gaussian elimination over Q with the row ops written out.
inline std::size_t rank(std::vector<std::vector<Rational>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const eigenpts::ExactMatrix& m) {
  std::vector<std::vector<Rational>> a;
  for (std::size_t i = 0; i < m.rows(); ++i) a.emplace_back(m.row(i).begin(), m.row(i).end());
  return rank(a);
}

inline long power(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Closed form of the eigenpoint count.
inline long count(int n, int d) {
  if (d == 2) return n + 1;
  return (power(d - 1, n + 1) - 1) / (d - 2);
}

// Degree read off the Hilbert function in a large degree:
// HF(k) = C(k+n, n) - sum_i (-1)^(i+1) sum rank * C(k + twist + n, n).
inline long hilbert_degree(const eigenpts::BettiTable& b, int n) {
  auto c = [&](long top) -> eigenpts::Integer { return top < n ? eigenpts::Integer(0) : eigenpts::binomial(top, n); };
  auto hf = [&](long k) {
    eigenpts::Integer v = c(k + n);
    for (std::size_t i = 0; i < b.steps.size(); ++i) {
      const int sign = (i % 2 == 0) ? 1 : -1;
      for (const auto& [twist, r] : b.steps[i]) v -= sign * r * c(k + twist + n);
    }
    return v;
  };
  const long k = 200;
  eigenpts::Integer a = hf(k), a1 = hf(k + 1);
  if (a != a1) return -1;  // not zero-dimensional
  return a.get_si();
}

inline std::vector<eigenpts::ProjectivePoint> random_points(int n, std::size_t count, std::uint64_t seed, int box = 9) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> u(-box, box);
  std::vector<eigenpts::ProjectivePoint> out;
  while (out.size() < count) {
    std::vector<Rational> c;
    bool zero = true;
    for (int k = 0; k <= n; ++k) {
      c.emplace_back(u(rng));
      if (c.back() != 0) zero = false;
    }
    if (zero) continue;
    out.push_back(eigenpts::ProjectivePoint::from_exact(std::move(c)));
  }
  return out;
}

// The fifteen points of P^3 with coordinates in {0, 1}.
inline std::vector<eigenpts::ProjectivePoint> fermat_cubic_points() {
  std::vector<eigenpts::ProjectivePoint> out;
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<Rational> c;
    for (int k = 3; k >= 0; --k) c.emplace_back((mask >> k) & 1);
    out.push_back(eigenpts::ProjectivePoint::from_exact(std::move(c)));
  }
  return out;
}

}  // namespace oracle
