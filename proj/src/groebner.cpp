#include "eigenpts/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace eigenpts {

namespace {

struct ZTerm {
  Monomial m;
  Integer c;
};
using ZPoly = std::vector<ZTerm>;  // descending grevlex

struct MonomialGrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(b, a); }
};

ZPoly to_zpoly(const Polynomial& p) {
  Integer l = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  z.reserve(p.size());
  for (const auto& [m, c] : p.terms()) z.push_back({m, c.get_num() * (l / c.get_den())});
  std::sort(z.begin(), z.end(), [](const ZTerm& a, const ZTerm& b) { return grevlex_greater(a.m, b.m); });
  return z;
}

void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(p.front().c) < 0) g = -g;
  if (g != 1)
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

// a * h[start..] - b * q * g, with the leading terms cancelling.
ZPoly combine(const ZPoly& h, std::size_t start, const Integer& a, const ZPoly& g,
              const Monomial& q, const Integer& b) {
  ZPoly out;
  out.reserve(h.size() - start + g.size());
  std::size_t i = start + 1, j = 1;
  while (i < h.size() || j < g.size()) {
    if (j >= g.size()) {
      out.push_back({h[i].m, a * h[i].c});
      ++i;
      continue;
    }
    Monomial gm = g[j].m * q;
    if (i >= h.size() || grevlex_greater(gm, h[i].m)) {
      out.push_back({gm, -b * g[j].c});
      ++j;
    } else if (grevlex_greater(h[i].m, gm)) {
      out.push_back({h[i].m, a * h[i].c});
      ++i;
    } else {
      Integer c = a * h[i].c - b * g[j].c;
      if (c != 0) out.push_back({h[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Entry {
  ZPoly p;
  unsigned sugar = 0;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
  std::size_t serial;
};

class Buchberger {
 public:
  explicit Buchberger(std::size_t nvars) : nvars_(nvars) {}

  void add_input(ZPoly p) {
    const unsigned sugar = max_degree(p);
    auto r = reduce_full(std::move(p));
    if (r.empty()) return;
    insert(std::move(r), sugar);
  }

  std::vector<ZPoly> run() {
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        return a.serial < b.serial;
      });
      Pair pr = *it;
      *it = pairs_.back();
      pairs_.pop_back();
      ++processed_;
      auto s = spoly(entries_[pr.i].p, entries_[pr.j].p, pr.lcm);
      auto r = reduce_full(std::move(s));
      if (!r.empty()) insert(std::move(r), pr.sugar);
      if (!basis_.empty() && entries_[basis_.back()].p.front().m.degree() == 0) break;
    }
    return finalize();
  }

  std::size_t processed() const { return processed_; }

 private:
  static unsigned max_degree(const ZPoly& p) {
    unsigned d = 0;
    for (const auto& t : p) d = std::max<unsigned>(d, t.m.degree());
    return d;
  }

  ZPoly spoly(const ZPoly& f, const ZPoly& g, const Monomial& l) const {
    Integer gg;
    mpz_gcd(gg.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    Integer a = g.front().c / gg, b = f.front().c / gg;
    Monomial qf = l / f.front().m, qg = l / g.front().m;
    ZPoly af;
    af.reserve(f.size());
    for (const auto& t : f) af.push_back({t.m * qf, a * t.c});
    auto r = combine(af, 0, Integer(1), g, qg, b);
    make_primitive(r);
    return r;
  }

  const Entry* find_reducer(const Monomial& m) const {
    const Entry* best = nullptr;
    for (auto idx : basis_) {
      const auto& e = entries_[idx];
      if (e.p.front().m.divides(m) && (!best || e.p.size() < best->p.size())) best = &e;
    }
    return best;
  }

  ZPoly reduce_full(ZPoly h) {
    ZPoly r;
    std::size_t start = 0, steps = 0;
    while (start < h.size()) {
      const auto& lt = h[start];
      const Entry* g = find_reducer(lt.m);
      if (!g) {
        r.push_back(lt);
        ++start;
        continue;
      }
      Integer gg;
      mpz_gcd(gg.get_mpz_t(), g->p.front().c.get_mpz_t(), lt.c.get_mpz_t());
      Integer a = g->p.front().c / gg, b = lt.c / gg;
      h = combine(h, start, a, g->p, lt.m / g->p.front().m, b);
      start = 0;
      if (a != 1)
        for (auto& t : r) t.c *= a;
      if (++steps % 16 == 0) {
        Integer c = 0;
        for (const auto& t : r) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
        for (const auto& t : h) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
        if (c > 1) {
          for (auto& t : r) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
          for (auto& t : h) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        }
      }
    }
    make_primitive(r);
    return r;
  }

  // Gebauer-Moeller update.
  void insert(ZPoly p, unsigned sugar) {
    const std::size_t h = entries_.size();
    entries_.push_back({std::move(p), sugar});
    const Monomial lh = entries_[h].p.front().m;

    auto pair_sugar = [&](std::size_t i, std::size_t j, const Monomial& l) {
      const auto& ei = entries_[i];
      const auto& ej = entries_[j];
      return std::max(ei.sugar + l.degree() - ei.p.front().m.degree(),
                      ej.sugar + l.degree() - ej.p.front().m.degree());
    };

    std::vector<std::pair<std::size_t, Monomial>> c;
    for (auto g : basis_) c.emplace_back(g, lh.lcm(entries_[g].p.front().m));
    std::vector<std::pair<std::size_t, Monomial>> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto& [g1, l1] = c[k];
      bool keep = lh.coprime(entries_[g1].p.front().m);
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < c.size() && keep; ++m)
          if (c[m].second.divides(l1)) keep = false;
        for (std::size_t m = 0; m < d.size() && keep; ++m)
          if (d[m].second.divides(l1)) keep = false;
      }
      if (keep) d.push_back(c[k]);
    }
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (auto& pr : pairs_) {
      bool drop = lh.divides(pr.lcm) &&
                  !(lh.lcm(entries_[pr.i].p.front().m) == pr.lcm) &&
                  !(lh.lcm(entries_[pr.j].p.front().m) == pr.lcm);
      if (!drop) kept.push_back(pr);
    }
    for (const auto& [g, l] : d) {
      if (lh.coprime(entries_[g].p.front().m)) continue;
      kept.push_back({g, h, l, pair_sugar(g, h, l), serial_++});
    }
    pairs_ = std::move(kept);
    std::vector<std::size_t> nb;
    for (auto g : basis_)
      if (!lh.divides(entries_[g].p.front().m)) nb.push_back(g);
    nb.push_back(h);
    basis_ = std::move(nb);
  }

  std::vector<ZPoly> finalize() {
    std::vector<ZPoly> g;
    for (auto idx : basis_) g.push_back(entries_[idx].p);
    for (const auto& p : g)
      if (p.front().m.degree() == 0) return {ZPoly{{Monomial(nvars_), Integer(1)}}};
    // Minimal basis: drop elements whose leading monomial is a multiple of another's.
    std::vector<ZPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
        if (i == j) continue;
        const auto& mi = g[i].front().m;
        const auto& mj = g[j].front().m;
        if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(g[i]);
    }
    // Tail-reduce each element by the others.
    std::vector<ZPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      entries_.clear();
      basis_.clear();
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j == i) continue;
        entries_.push_back({minimal[j], 0});
        basis_.push_back(entries_.size() - 1);
      }
      // Reduce the tail; the leading term is irreducible by minimality.
      ZPoly work = minimal[i];
      ZPoly r;
      r.push_back(work.front());
      std::size_t start = 1;
      while (start < work.size()) {
        const auto& lt = work[start];
        const Entry* gr = find_reducer(lt.m);
        if (!gr) {
          r.push_back(lt);
          ++start;
          continue;
        }
        Integer gg;
        mpz_gcd(gg.get_mpz_t(), gr->p.front().c.get_mpz_t(), lt.c.get_mpz_t());
        Integer a = gr->p.front().c / gg, b = lt.c / gg;
        work = combine(work, start, a, gr->p, lt.m / gr->p.front().m, b);
        start = 0;
        for (auto& t : r) t.c *= a;
      }
      make_primitive(r);
      reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const ZPoly& a, const ZPoly& b) { return grevlex_greater(b.front().m, a.front().m); });
    return reduced;
  }

  std::size_t nvars_;
  std::vector<Entry> entries_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
  std::size_t serial_ = 0;
  std::size_t processed_ = 0;
};

}  // namespace

GroebnerBasis GroebnerBasis::compute(const std::vector<Polynomial>& generators, std::size_t nvars) {
  Buchberger bb(nvars);
  for (const auto& g : generators) {
    if (g.nvars() != nvars) throw std::invalid_argument("generator variable count mismatch");
    if (!g.is_zero()) bb.add_input(to_zpoly(g));
  }
  auto z = bb.run();
  GroebnerBasis gb;
  gb.nvars_ = nvars;
  gb.pairs_processed_ = bb.processed();
  for (auto& zp : z) {
    Poly p;
    Rational inv(Integer(1), zp.front().c);
    inv.canonicalize();
    for (auto& t : zp) p.push_back({t.m, Rational(t.c) * inv});
    gb.basis_.push_back(std::move(p));
  }
  return gb;
}

std::vector<Polynomial> GroebnerBasis::elements() const {
  std::vector<Polynomial> out;
  for (const auto& p : basis_) {
    Polynomial q(nvars_);
    for (const auto& t : p) q.add_term(t.m, t.c);
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& p : basis_) out.push_back(p.front().m);
  return out;
}

bool GroebnerBasis::is_unit() const {
  return basis_.size() == 1 && basis_.front().front().m.degree() == 0;
}

bool GroebnerBasis::is_zero_dimensional() const {
  for (std::size_t v = 0; v < nvars_; ++v) {
    bool found = false;
    for (const auto& p : basis_) {
      const auto& m = p.front().m;
      if (m[v] > 0 && m[v] == m.degree()) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Monomial> GroebnerBasis::standard_monomials() const {
  if (!is_zero_dimensional()) throw std::logic_error("standard monomials of a positive-dimensional ideal");
  std::vector<Monomial> out;
  if (is_unit()) return out;
  auto lms = leading_monomials();
  auto standard = [&](const Monomial& m) {
    for (const auto& l : lms)
      if (l.divides(m)) return false;
    return true;
  };
  std::set<Monomial, MonomialGrevlexLess> seen;
  std::vector<Monomial> frontier{Monomial(nvars_)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    Monomial m = frontier.back();
    frontier.pop_back();
    out.push_back(m);
    for (std::size_t v = 0; v < nvars_; ++v) {
      Monomial next = m * Monomial::variable(nvars_, v);
      if (standard(next) && seen.insert(next).second) frontier.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), MonomialGrevlexLess{});
  return out;
}

GroebnerBasis::Poly GroebnerBasis::reduce(Poly h) const {
  Poly r;
  while (!h.empty()) {
    const Term lt = h.front();
    const Poly* g = nullptr;
    for (const auto& p : basis_)
      if (p.front().m.divides(lt.m)) {
        g = &p;
        break;
      }
    if (!g) {
      r.push_back(lt);
      h.erase(h.begin());
      continue;
    }
    Monomial q = lt.m / g->front().m;
    Poly out;
    out.reserve(h.size() + g->size());
    std::size_t i = 1, j = 1;
    while (i < h.size() || j < g->size()) {
      if (j >= g->size()) {
        out.push_back(h[i++]);
        continue;
      }
      Monomial gm = (*g)[j].m * q;
      if (i >= h.size() || grevlex_greater(gm, h[i].m)) {
        out.push_back({gm, -lt.c * (*g)[j].c});
        ++j;
      } else if (grevlex_greater(h[i].m, gm)) {
        out.push_back(h[i++]);
      } else {
        Rational c = h[i].c - lt.c * (*g)[j].c;
        if (c != 0) out.push_back({h[i].m, c});
        ++i;
        ++j;
      }
    }
    h = std::move(out);
  }
  return r;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  if (p.nvars() != nvars_) throw std::invalid_argument("normal form variable count mismatch");
  Poly h;
  for (const auto& [m, c] : p.terms()) h.push_back({m, c});
  std::sort(h.begin(), h.end(), [](const Term& a, const Term& b) { return grevlex_greater(a.m, b.m); });
  Polynomial out(nvars_);
  for (const auto& t : reduce(std::move(h))) out.add_term(t.m, t.c);
  return out;
}

ExactMatrix GroebnerBasis::multiplication_matrix(const Polynomial& f,
                                                 const std::vector<Monomial>& basis) const {
  std::map<Monomial, std::size_t, GrlexGreater> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  ExactMatrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Polynomial prod = f * Polynomial::term(basis[j], 1);
    const Polynomial nf = normal_form(prod);
    for (const auto& [mon, c] : nf.terms()) {
      auto it = index.find(mon);
      if (it == index.end()) throw std::logic_error("normal form outside the standard basis");
      m(it->second, j) = c;
    }
  }
  return m;
}

}  // namespace eigenpts
