#include "volkenborn/padic.hpp"

#include <stdexcept>

#include "json.hpp"

#include "volkenborn/combinatorics.hpp"

namespace volkenborn {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PAdicContext::PAdicContext(long p, long precision) : p_(p), precision_(precision) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (precision < 1) throw std::invalid_argument("p-adic precision must be at least 1");
    modulus_ = int_pow(p, precision);
}

namespace {

// Strips every factor p from z in place and returns how many were removed.
long strip(Integer& z, long p) {
    long v = 0;
    const Integer P(p);
    while (z != 0 && mpz_divisible_ui_p(z.get_mpz_t(), static_cast<unsigned long>(p))) {
        z /= P;
        ++v;
    }
    return v;
}

Integer mod_positive(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

std::optional<long> valuation(const Rational& x, long p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (x.is_zero()) return std::nullopt;
    Integer num = x.numerator();
    Integer den = x.denominator();
    return strip(num, p) - strip(den, p);
}

PAdicValue reduce(const Rational& x, const PAdicContext& ctx) {
    PAdicValue out;
    out.prime = ctx.prime();
    out.precision = ctx.precision();
    if (x.is_zero()) return out;
    Integer num = x.numerator();
    Integer den = x.denominator();
    const long v = strip(num, ctx.prime()) - strip(den, ctx.prime());
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), ctx.modulus().get_mpz_t());
    out.zero = false;
    out.valuation = v;
    out.residue = mod_positive(num * inv, ctx.modulus());
    return out;
}

Integer PAdicValue::residue_class() const {
    if (zero) return 0;
    if (valuation < 0) throw std::domain_error("residue class needs a nonnegative valuation");
    const Integer m = int_pow(prime, precision);
    return mod_positive(residue * int_pow(prime, valuation), m);
}

PAdicValue operator+(const PAdicValue& a, const PAdicValue& b) {
    if (a.prime != b.prime || a.precision != b.precision) {
        throw std::domain_error("adding p-adic values from different contexts");
    }
    const PAdicContext ctx(a.prime, a.precision);
    const Integer sum = mod_positive(a.residue_class() + b.residue_class(), ctx.modulus());
    return reduce(Rational(sum), ctx);
}

std::string PAdicValue::str() const {
    if (zero) return "0";
    return std::to_string(prime) + "^" + std::to_string(valuation) + " * " + residue.get_str() + " (mod " +
           std::to_string(prime) + "^" + std::to_string(precision) + ")";
}

std::string PAdicValue::to_json() const {
    nlohmann::json j;
    j["prime"] = prime;
    j["precision"] = precision;
    if (zero) {
        j["valuation"] = nullptr;
        j["residue"] = "0";
    } else {
        j["valuation"] = valuation;
        j["residue"] = residue.get_str();
    }
    return j.dump();
}

Rational padic_distance(const Rational& x, const Rational& y, long p) {
    const auto v = valuation(x - y, p);
    if (!v) return Rational(0);
    return Rational(p).pow(-*v);
}

}  // namespace volkenborn
