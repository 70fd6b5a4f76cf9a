#pragma once

#include <vector>

#include "volkenborn/rational.hpp"

namespace volkenborn {

/// Truncated formal power series sum_{i < order} c_i t^i. Arithmetic between
/// two series keeps the smaller order. Coefficients at or beyond the order are
/// unknown, and coeff() throws for them.
class PowerSeries {
public:
    PowerSeries() = default;
    PowerSeries(std::vector<Rational> coeffs, long order);

    static PowerSeries zero(long order);
    static PowerSeries constant(const Rational& c, long order);
    /// t
    static PowerSeries variable(long order);
    /// exp(t) = sum t^n / n!
    static PowerSeries exp(long order);
    /// log(1 + t) = sum (-1)^(n+1) t^n / n
    static PowerSeries log1p(long order);
    /// exp(c t)
    static PowerSeries exp_scaled(const Rational& c, long order);
    /// (1 + t)^a for rational a, by the binomial series.
    static PowerSeries binomial(const Rational& a, long order);

    long order() const { return order_; }
    Rational coeff(long n) const;
    /// n! times coeff(n); the exponential-generating-function reading.
    Rational egf_coeff(long n) const;

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    PowerSeries& operator*=(const PowerSeries& rhs);
    PowerSeries& operator*=(const Rational& c);
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }
    friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }

    PowerSeries pow(long k) const;
    /// Multiplicative inverse; requires a nonzero constant term.
    PowerSeries inverse() const;
    /// this / rhs; rhs must have a nonzero constant term.
    PowerSeries divide(const PowerSeries& rhs) const;
    /// this(inner(t)); inner must have zero constant term, otherwise
    /// std::domain_error. The result order is min(order(), inner.order()).
    PowerSeries compose(const PowerSeries& inner) const;
    /// Drops the constant term and divides by t. Order drops by one.
    PowerSeries shift_down() const;

private:
    std::vector<Rational> c_;
    long order_ = 0;
};

}  // namespace volkenborn
