#pragma once

// Exact integer/rational value types and the combinatorial atoms
// (n!, odd m!!, multinomials) shared by every formula in the library.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tau2 {

using ExactInteger = mpz_class;

/// Always held in lowest terms with a positive denominator. GMP keeps the
/// results of mpq arithmetic canonical; values built from raw parts must go
/// through make_rational().
using ExactRational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error on den == 0.
ExactRational make_rational(const ExactInteger& num, const ExactInteger& den);

/// n! for n >= 0. Backed by a process-wide memo guarded by a mutex.
const ExactInteger& factorial(long n);

/// m!! for odd m >= -1, with (-1)!! = 1. Throws std::invalid_argument on
/// even or smaller arguments.
const ExactInteger& double_factorial_odd(long m);

/// (sum parts)! / prod(parts_i!). Throws std::invalid_argument on a
/// negative part.
ExactInteger multinomial(std::span<const long> parts);

/// Binomial coefficient n choose r, 0 for r outside 0..n.
ExactInteger binomial(long n, long r);

/// "p/q" or "p" when q == 1, sign on the numerator.
std::string to_string(const ExactRational& value);

/// Inverse of to_string(). Accepts only the canonical form so that a
/// round-trip through text is byte-identical; throws std::invalid_argument
/// otherwise.
ExactRational parse_rational(std::string_view text);

/// Bits in |numerator| plus bits in denominator.
std::size_t bit_size(const ExactRational& value);

}  // namespace tau2
