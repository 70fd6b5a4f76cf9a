#pragma once

#include <optional>
#include <string>

#include "volkenborn/rational.hpp"

namespace volkenborn {

/// Deterministic trial-division primality test.
bool is_prime(long n);

/// A prime p and a working precision M; residues live in Z/p^M.
class PAdicContext {
public:
    /// Throws std::invalid_argument unless p is prime and precision >= 1.
    PAdicContext(long p, long precision);

    long prime() const { return p_; }
    long precision() const { return precision_; }
    /// p^M
    const Integer& modulus() const { return modulus_; }

private:
    long p_;
    long precision_;
    Integer modulus_;
};

/// x = p^valuation * u with u a p-adic unit, u known modulo p^M.
struct PAdicValue {
    long prime = 0;
    long precision = 0;
    bool zero = true;
    long valuation = 0;
    Integer residue = 0;

    /// "p^v * u (mod p^M)", or "0" for the zero flag.
    std::string str() const;
    std::string to_json() const;
    /// The image of the value in Z/p^M; requires valuation >= 0.
    Integer residue_class() const;

    friend bool operator==(const PAdicValue&, const PAdicValue&) = default;
};

/// nu_p(x); std::nullopt stands for +infinity at x = 0.
std::optional<long> valuation(const Rational& x, long p);

PAdicValue reduce(const Rational& x, const PAdicContext& ctx);

/// Sum of two values with nonnegative valuation, computed in Z/p^M. After
/// cancellation the unit part is only known modulo a lower power of p, so
/// compare residue classes rather than unit residues.
/// Throws std::domain_error for negative valuations or mismatched contexts.
PAdicValue operator+(const PAdicValue& a, const PAdicValue& b);

/// |x - y|_p = p^{-nu_p(x - y)}, and 0 when x = y.
Rational padic_distance(const Rational& x, const Rational& y, long p);

}  // namespace volkenborn
