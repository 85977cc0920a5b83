#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace eigenpts {

// Canonical form is maintained by GMP after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

// "num" for integers, "num/den" otherwise.
std::string to_string(const Rational& q);

// Accepts "num", "num/den", optional sign and surrounding whitespace.
// Throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

// Best rational approximation with denominator <= max_den (continued
// fractions). Returns nullopt when no convergent is within tol.
std::optional<Rational> rationalize(double x, double tol = 1e-9,
                                    long max_den = 1'000'000);

double to_double(const Rational& q);

Integer binomial(long n, long k);
long binomial_l(long n, long k);

}  // namespace eigenpts
