#pragma once

#include "volkenborn/rational.hpp"

namespace volkenborn {

/// C(n, k) for n >= 0; zero outside 0 <= k <= n. Throws std::invalid_argument for n < 0.
Rational binom_int(long n, long k);

/// C(a, k) = a(a-1)...(a-k+1)/k! for any integer a; zero for k < 0.
Rational binom_general(long a, long k);

/// n! for n >= 0.
Integer factorial(long n);

/// a_(k) = a(a-1)...(a-k+1), with a_(0) = 1.
Integer falling_int(long a, long k);

/// base^exponent with 0^0 = 1.
Integer int_pow(long base, long exponent);

}  // namespace volkenborn
