#ifndef KAPPA_ARITH_HPP
#define KAPPA_ARITH_HPP

// Exact integer and rational arithmetic shared by every module, plus the
// error hierarchy used across the library.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kappa {

using Integer = mpz_class;
using Rational = mpq_class;

/// Malformed input: bad syntax, wrong lengths, violated preconditions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input that the mathematics rejects (no such representation,
/// undefined quotient, unrealizable degree, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Lowest terms with positive denominator; integers print without "/1".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q". Rejects a zero denominator.
Rational parse_rational(std::string_view text);

/// Comma-separated list of integers ("2,1", " -3 , 4 ").
std::vector<std::int64_t> parse_int_list(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);

bool is_integral(const Rational& q);

/// gcd of absolute values; gcd of an all-zero list is 0.
Integer gcd_abs(std::span<const Integer> values);

bool is_power_of_two(const Integer& z);

/// Smallest odd prime dividing |z|. Returns 0 when |z| is 0 or a power of two.
Integer smallest_odd_prime_factor(const Integer& z);

Integer ipow(const Integer& base, unsigned long exponent);

/// Narrowing helper for JSON output; throws DomainError if out of range.
std::int64_t to_int64(const Integer& z);
bool fits_int64(const Integer& z);

}  // namespace kappa

#endif  // KAPPA_ARITH_HPP
