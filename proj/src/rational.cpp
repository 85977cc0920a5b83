#include "eigenpts/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace eigenpts {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  bool digits = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == 0 && s[i] == '-') continue;
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    digits = true;
  }
  if (!digits) throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::optional<Rational> rationalize(double x, double tol, long max_den) {
  if (!std::isfinite(x) || std::abs(x) > 1e15) return std::nullopt;
  // Convergents h/k of the continued fraction of x.
  Integer h_prev = 1, h = static_cast<long>(std::floor(x));
  Integer k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  const double scale = std::max(1.0, std::abs(x));
  for (int iter = 0; iter < 64; ++iter) {
    Rational cand(h, k);
    if (std::abs(cand.get_d() - x) <= tol * scale) {
      cand.canonicalize();
      return cand;
    }
    if (frac < 1e-300) break;
    double inv = 1.0 / frac;
    double a = std::floor(inv);
    frac = inv - a;
    Integer ai = static_cast<long>(a);
    Integer h_next = ai * h + h_prev;
    Integer k_next = ai * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h; h = h_next;
    k_prev = k; k = k_next;
  }
  return std::nullopt;
}

double to_double(const Rational& q) { return q.get_d(); }

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

long binomial_l(long n, long k) { return binomial(n, k).get_si(); }

}  // namespace eigenpts
