#include "volkenborn/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace volkenborn {

Rational binom_int(long n, long k) {
    if (n < 0) throw std::invalid_argument("binom_int: negative n = " + std::to_string(n));
    if (k < 0 || k > n) return Rational(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational binom_general(long a, long k) {
    if (k < 0) return Rational(0);
    if (a >= 0) return binom_int(a, k);
    return Rational(falling_int(a, k), factorial(k));
}

Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer falling_int(long a, long k) {
    if (k < 0) throw std::invalid_argument("falling_int: negative length");
    Integer r = 1;
    for (long j = 0; j < k; ++j) r *= Integer(a - j);
    return r;
}

Integer int_pow(long base, long exponent) {
    if (exponent < 0) throw std::invalid_argument("int_pow: negative exponent");
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), Integer(base).get_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

}  // namespace volkenborn
