#pragma once

#include <span>

#include "tropdesc/rational.hpp"

namespace tropdesc {

/// C(n, k) for 0 <= k <= n, and 0 for every other (n, k), including negative n.
BigInt binomial(long n, long k);

/// n! / prod(parts!) when the parts sum to n, else 0. Throws DomainError on a negative part.
BigInt multinomial(long n, std::span<const long> parts);

BigInt factorial(long n);

/// base^exp with 0^0 = 1.
BigInt power(long base, unsigned long exp);

}  // namespace tropdesc
