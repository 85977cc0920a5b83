#include "eigenpts/configuration.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

#include "eigenpts/exact_matrix.hpp"

namespace eigenpts {

PointSet::PointSet(int n, std::vector<ProjectivePoint> points, double dedup_tol) : n_(n) {
  for (auto& p : points) {
    if (p.size() != static_cast<std::size_t>(n) + 1)
      throw std::invalid_argument("point has " + std::to_string(p.size()) + " coordinates, expected " +
                                  std::to_string(n + 1));
    bool dup = std::any_of(points_.begin(), points_.end(), [&](const ProjectivePoint& q) {
      if (p.is_exact() && q.is_exact()) return p.exact_equal(q);
      return p.distance(q) < dedup_tol;
    });
    if (!dup) points_.push_back(std::move(p));
  }
}

PointSet PointSet::from_solution(const EigenSolution& s) {
  std::vector<ProjectivePoint> pts;
  for (const auto& e : s.points) pts.push_back(e.point);
  return PointSet(s.n, std::move(pts));
}

bool PointSet::all_exact() const {
  return std::all_of(points_.begin(), points_.end(), [](const auto& p) { return p.is_exact(); });
}

PointSet PointSet::subset(const std::vector<std::size_t>& indices) const {
  PointSet out;
  out.n_ = n_;
  for (auto i : indices) out.points_.push_back(points_.at(i));
  return out;
}

namespace {

std::size_t numeric_rank(const Eigen::MatrixXcd& a, double rel_tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

// Rows: points, columns: monomials of degree e.
struct EvalTable {
  bool exact = true;
  std::vector<RationalVector> q;
  Eigen::MatrixXcd c;
};

EvalTable evaluation_table(const PointSet& z, int e) {
  const std::size_t nv = static_cast<std::size_t>(z.n()) + 1;
  auto mons = monomials_of_degree(nv, static_cast<unsigned>(e));
  EvalTable t;
  t.exact = z.all_exact();
  if (t.exact) {
    for (const auto& p : z.points()) {
      RationalVector row;
      for (const auto& m : mons) row.push_back(Polynomial::term(m, 1).evaluate(std::span<const Rational>(p.exact())));
      t.q.push_back(std::move(row));
    }
  } else {
    t.c.resize(static_cast<Eigen::Index>(z.size()), static_cast<Eigen::Index>(mons.size()));
    for (std::size_t r = 0; r < z.size(); ++r)
      for (std::size_t k = 0; k < mons.size(); ++k)
        t.c(r, k) = Polynomial::term(mons[k], 1).evaluate(std::span<const Complex>(z[r].approx()));
  }
  return t;
}

std::size_t table_rank(const EvalTable& t, const std::vector<std::size_t>& idx, double rel_tol) {
  if (t.exact) {
    std::vector<RationalVector> rows;
    for (auto i : idx) rows.push_back(t.q[i]);
    const std::size_t cols = t.q.empty() ? 0 : t.q[0].size();
    return rank(ExactMatrix::from_rows(rows, cols));
  }
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(idx.size()), t.c.cols());
  for (std::size_t r = 0; r < idx.size(); ++r) a.row(r) = t.c.row(idx[r]);
  return numeric_rank(a, rel_tol);
}

// Advances idx to the next combination of k out of n; false when done.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t evaluation_rank(const PointSet& z, const std::vector<std::size_t>& indices, int e,
                            const ConfigOptions& opts) {
  return table_rank(evaluation_table(z, e), indices, opts.rel_tol);
}

CollinearReport max_collinear(const PointSet& z, const ConfigOptions& opts) {
  CollinearReport rep;
  rep.numeric = !z.all_exact();
  if (z.size() < 2) {
    rep.max_count = z.size();
    for (std::size_t i = 0; i < z.size(); ++i) rep.witness.push_back(i);
    return rep;
  }
  const EvalTable t = evaluation_table(z, 1);
  for (std::size_t a = 0; a < z.size(); ++a) {
    for (std::size_t b = a + 1; b < z.size(); ++b) {
      std::vector<std::size_t> line{a, b};
      for (std::size_t c = 0; c < z.size(); ++c) {
        if (c == a || c == b) continue;
        if (table_rank(t, {a, b, c}, opts.rel_tol) <= 2) line.push_back(c);
      }
      if (line.size() > rep.max_count) {
        std::sort(line.begin(), line.end());
        rep.max_count = line.size();
        rep.witness = line;
      }
    }
  }
  return rep;
}

IncidenceReport subset_on_hypersurface(const PointSet& z, int e, std::size_t m,
                                       const ConfigOptions& opts) {
  if (e < 1) throw std::invalid_argument("hypersurface degree must be positive");
  if (m == 0 || m > z.size()) throw std::invalid_argument("subset size out of range");
  const Integer count = binomial(static_cast<long>(z.size()), static_cast<long>(m));
  if (count > Integer(static_cast<unsigned long>(opts.enumeration_cap)))
    throw std::length_error("subset enumeration of " + count.get_str() + " exceeds cap " +
                            std::to_string(opts.enumeration_cap));
  IncidenceReport rep;
  rep.predicate = "points_on_degree_" + std::to_string(e) + "_hypersurface";
  rep.threshold = static_cast<long>(m);
  rep.numeric = !z.all_exact();
  const EvalTable t = evaluation_table(z, e);
  const std::size_t nmons = static_cast<std::size_t>(binomial_l(z.n() + e, z.n()));
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  do {
    ++rep.subsets_checked;
    if (table_rank(t, idx, opts.rel_tol) < nmons) {
      rep.found = true;
      rep.witness = idx;
      break;
    }
  } while (next_combination(idx, z.size()));
  return rep;
}

BezoutReport bezout_guard(const PointSet& z, int d, const ConfigOptions& opts) {
  if (z.n() != 2) throw std::invalid_argument("bezout_guard requires points in P^2");
  BezoutReport rep;
  for (int s = 1; s <= std::max(1, d - 1); ++s) {
    const std::size_t m = static_cast<std::size_t>(s) * d + 1;
    if (m > z.size()) {
      IncidenceReport skipped;
      skipped.predicate = "points_on_degree_" + std::to_string(s) + "_hypersurface";
      skipped.threshold = static_cast<long>(m);
      skipped.numeric = !z.all_exact();
      rep.levels.push_back(skipped);
      continue;
    }
    auto r = subset_on_hypersurface(z, s, m, opts);
    if (r.found) rep.pass = false;
    rep.levels.push_back(std::move(r));
  }
  return rep;
}

}  // namespace eigenpts
