#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "volkenborn/rational.hpp"

namespace volkenborn {

/// Dense univariate polynomial over the rationals. Coefficient i multiplies x^i.
/// The coefficient vector never carries a trailing zero, so the zero polynomial
/// is the empty vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(long degree, const Rational& c = Rational(1));
    static Polynomial x() { return monomial(1); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^i; zero beyond the degree.
    Rational coeff(long i) const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    Rational operator()(const Rational& at) const { return eval(at); }
    Rational eval(const Rational& at) const;

    /// f(x + a), expanded with binomial coefficients.
    Polynomial shift(const Rational& a) const;
    /// f(c x).
    Polynomial scale_argument(const Rational& c) const;
    Polynomial derivative() const;
    /// Antiderivative with zero constant term.
    Polynomial antiderivative() const;
    /// Riemann integral over [a, b], term by term.
    Rational integrate(const Rational& a, const Rational& b) const;
    /// f(x) / x; the constant term must vanish.
    Polynomial divide_by_x() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// JSON array of coefficient strings, constant term first: ["0","-1","1"].
    std::string to_json() const;
    /// Inverse of to_json. Throws std::invalid_argument.
    static Polynomial from_json(const std::string& text);
    /// Comma-separated rationals, constant term first ("0,1/2,-3").
    static Polynomial parse_list(const std::string& text);
    /// Human-readable form such as "x^2 - x".
    std::string pretty() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// x(x-1)...(x-n+1).
Polynomial falling_poly(long n);
/// x(x+1)...(x+n-1).
Polynomial rising_poly(long n);
/// C(scale*x + offset, n) = (scale*x + offset)_(n) / n!.
Polynomial binomial_poly(long n, const Rational& scale = Rational(1), const Rational& offset = Rational(0));

}  // namespace volkenborn
