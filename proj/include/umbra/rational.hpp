#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace umbra {

/// Arbitrary-precision rational. gmpxx keeps every arithmetic result in
/// lowest terms with a positive denominator.
using ExactScalar = mpq_class;
using BigInt = mpz_class;

/// num/den in lowest terms. Throws Error{InvalidArgument} when den == 0.
ExactScalar ratio(long num, long den);

/// Canonical text form: "p/q", or "p" when q == 1.
std::string to_string(const ExactScalar& q);

/// Parses "p", "-p", "p/q" or "-p/q" (decimal digits only) and canonicalizes.
/// Throws Error{InvalidArgument} on malformed text or a zero denominator.
ExactScalar parse_exact(std::string_view text);

/// True when the denominator is positive and coprime to the numerator.
bool is_canonical(const ExactScalar& q);

BigInt factorial(std::size_t n);
BigInt binomial(std::size_t n, std::size_t k);

/// base^exp with 0^0 = 1.
ExactScalar power(const ExactScalar& base, std::size_t exp);

}  // namespace umbra
