#include "eigenpts/polynomial.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace eigenpts {

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
}

Monomial::Monomial(std::initializer_list<unsigned> exps)
    : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const unsigned> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, unsigned power) {
  Monomial m(nvars);
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw std::out_of_range("monomial variable index");
  if (e > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
  exps_[i] = static_cast<std::uint16_t>(e);
}

std::vector<unsigned> Monomial::exponents() const {
  return {exps_.begin(), exps_.begin() + nvars_};
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = static_cast<std::uint16_t>(exps_[i] + o.exps_[i]);
  r.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - o.exps_[i]);
  r.degree_ = static_cast<std::uint16_t>(degree_ - o.degree_);
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.set(i, std::max(exps_[i], o.exps_[i]));
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] != 0 && o.exps_[i] != 0) return false;
  return true;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t i = a.nvars(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  return term(Monomial::variable(nvars, i), 1);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("monomial/polynomial variable count mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  Polynomial r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

namespace {

template <class T>
T monomial_value(const Monomial& m, std::span<const T> point) {
  T v(1);
  for (std::size_t i = 0; i < m.nvars(); ++i)
    for (unsigned e = 0; e < m[i]; ++e) v *= point[i];
  return v;
}

}  // namespace

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point dimension mismatch");
  Rational s = 0;
  for (const auto& [m, c] : terms_) s += c * monomial_value<Rational>(m, point);
  return s;
}

Complex Polynomial::evaluate(std::span<const Complex> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point dimension mismatch");
  Complex s = 0;
  for (const auto& [m, c] : terms_) s += c.get_d() * monomial_value<Complex>(m, point);
  return s;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= nvars_) throw std::out_of_range("derivative variable index out of range");
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial dm(m);
    dm.set(i, m[i] - 1);
    r.add_term(dm, c * m[i]);
  }
  return r;
}

Polynomial Polynomial::specialize(std::span<const std::optional<Rational>> values) const {
  if (values.size() != nvars_) throw std::invalid_argument("specialization dimension mismatch");
  std::size_t kept = 0;
  for (const auto& v : values) kept += v ? 0 : 1;
  Polynomial r(kept);
  for (const auto& [m, c] : terms_) {
    Rational coef = c;
    Monomial rm(kept);
    std::size_t k = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (values[i]) {
        for (unsigned e = 0; e < m[i]; ++e) coef *= *values[i];
      } else {
        rm.set(k++, m[i]);
      }
    }
    r.add_term(rm, coef);
  }
  return r;
}

double Polynomial::l1_norm() const {
  double s = 0;
  for (const auto& [m, c] : terms_) s += std::abs(c.get_d());
  return s;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    bool any = false;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      os << (any ? " " : " * ") << 'x' << i << '^' << m[i];
      any = true;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, std::size_t nvars) : s_(s), nvars_(nvars) {}

  Polynomial parse() {
    Polynomial p(nvars_);
    skip_ws();
    if (at_end()) throw error("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        // A leading sign on the first term is allowed.
        while (!at_end() && (peek() == '+' || peek() == '-')) {
          if (get() == '-') sign = -sign;
          skip_ws();
        }
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      first = false;
      parse_term(p, sign);
      skip_ws();
    }
    return p;
  }

 private:
  std::invalid_argument error(const std::string& what) const {
    return std::invalid_argument("polynomial parse error at " + std::to_string(pos_) +
                                 ": " + what + " in '" + std::string(s_) + "'");
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  std::string digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    return d;
  }

  void parse_term(Polynomial& p, int sign) {
    Rational coef = 1;
    Monomial m(nvars_);
    bool have_factor = false;
    skip_ws();
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      if (!at_end() && peek() == '/') {
        ++pos_;
        std::string den = digits();
        if (den.empty()) throw error("missing denominator");
        coef = parse_rational(num + "/" + den);
      } else {
        coef = parse_rational(num);
      }
      have_factor = true;
    }
    while (true) {
      skip_ws();
      if (at_end() || peek() == '+' || peek() == '-') break;
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      if (peek() != 'x') throw error("unexpected character");
      ++pos_;
      std::string idx = digits();
      if (idx.empty()) throw error("variable index expected");
      std::size_t i = std::stoul(idx);
      if (i >= nvars_) throw error("variable index out of range");
      unsigned e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        std::string ex = digits();
        if (ex.empty()) throw error("exponent expected");
        e = static_cast<unsigned>(std::stoul(ex));
      }
      m.set(i, m[i] + e);
      have_factor = true;
    }
    if (!have_factor) throw error("empty term");
    p.add_term(m, sign * coef);
  }

  std::string_view s_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

void fill_degree(std::size_t nvars, std::size_t var, unsigned remaining, Monomial& cur,
                 std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur.set(var, remaining);
    out.push_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur.set(var, e);
    fill_degree(nvars, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  return PolyParser(text, nvars).parse();
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) return out;
  Monomial cur(nvars);
  fill_degree(nvars, 0, degree, cur, out);
  return out;
}

}  // namespace eigenpts
