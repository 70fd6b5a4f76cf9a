#pragma once

#include <vector>

#include "volkenborn/polynomial.hpp"
#include "volkenborn/rational.hpp"

namespace volkenborn {

/// Dense polynomial in two variables x and y. coeff(i, j) multiplies x^i y^j.
class Bivariate {
public:
    Bivariate() = default;

    static Bivariate constant(const Rational& c);
    static Bivariate in_x(const Polynomial& f);
    static Bivariate in_y(const Polynomial& f);
    /// f(x) * g(y).
    static Bivariate product(const Polynomial& f, const Polynomial& g);

    Rational coeff(long i, long j) const;
    long degree_x() const { return static_cast<long>(rows_.size()) - 1; }
    long degree_y() const;
    bool is_zero() const { return rows_.empty(); }

    Rational eval(const Rational& x, const Rational& y) const;

    Bivariate& operator+=(const Bivariate& rhs);
    Bivariate& operator-=(const Bivariate& rhs);
    Bivariate& operator*=(const Bivariate& rhs);
    Bivariate& operator*=(const Rational& c);
    friend Bivariate operator+(Bivariate a, const Bivariate& b) { return a += b; }
    friend Bivariate operator-(Bivariate a, const Bivariate& b) { return a -= b; }
    friend Bivariate operator*(Bivariate a, const Bivariate& b) { return a *= b; }
    friend Bivariate operator*(Bivariate a, const Rational& c) { return a *= c; }

    /// Replaces every monomial x^i y^j by wx[i] * wy[j]. Used for iterated
    /// exact integrals, where wx and wy are the moment sequences of the two
    /// measures.
    Rational pair_moments(const std::vector<Rational>& wx, const std::vector<Rational>& wy) const;

private:
    void trim();
    // rows_[i] holds the y-polynomial multiplying x^i.
    std::vector<Polynomial> rows_;
};

/// (x + y)_(n).
Bivariate falling_sum(long n);
/// (xy)_(n).
Bivariate falling_product(long n);
/// C(x + y, n).
Bivariate binomial_sum(long n);

}  // namespace volkenborn
