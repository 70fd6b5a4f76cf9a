#include <random>
#include <vector>

#include "doctest.h"
#include "volkenborn/combinatorics.hpp"
#include "volkenborn/polynomial.hpp"
#include "volkenborn/power_series.hpp"
#include "volkenborn/rational.hpp"
#include "volkenborn/sequences.hpp"

using namespace volkenborn;

namespace {

Polynomial random_poly(std::mt19937& rng, long degree) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<Rational> c;
    for (long i = 0; i <= degree; ++i) c.emplace_back(num(rng), den(rng));
    return Polynomial(c);
}

}  // namespace

TEST_CASE("rational normalization and parsing") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS(Rational(0).inverse());
}

TEST_CASE("binomial coefficients") {
    CHECK(binom_int(4, 2) == 6);
    CHECK(binom_int(5, 0) == 1);
    CHECK(binom_int(3, 5) == 0);
    CHECK(binom_general(-1, 3) == -1);
    CHECK(binom_general(-2, 2) == 3);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    for (long n = 1; n <= 25; ++n)
        for (long k = 1; k <= n; ++k)
            CHECK(binom_int(n, k) == binom_int(n - 1, k - 1) + binom_int(n - 1, k));
}

TEST_CASE("falling and rising factorial polynomials") {
    CHECK(falling_poly(0) == Polynomial{1});
    CHECK(falling_poly(2) == Polynomial{0, -1, 1});
    CHECK(falling_poly(4) == Polynomial{0, -6, 11, -6, 1});
    CHECK(rising_poly(0) == Polynomial{1});
    CHECK(rising_poly(2) == Polynomial{0, 1, 1});
    CHECK(rising_poly(4) == Polynomial{0, 6, 11, 6, 1});
}

TEST_CASE("falling factorial rows are signed Stirling-1 rows") {
    for (long n = 0; n <= 30; ++n) {
        const Polynomial f = falling_poly(n);
        for (long k = 0; k <= n; ++k) CHECK(f.coeff(k) == stirling1(n, k));
    }
}

TEST_CASE("rising(x) = (-1)^n falling(-x)") {
    for (long n = 0; n <= 30; ++n)
        CHECK(rising_poly(n) == falling_poly(n).scale_argument(-1) * sign_power(n));
}

TEST_CASE("polynomial operations") {
    const Polynomial x2{0, 0, 1};
    CHECK(x2.shift(1) == Polynomial{1, 2, 1});
    CHECK(Polynomial{0, 0, 0, 1}.derivative() == Polynomial{0, 0, 3});
    CHECK(Polynomial{0, -1, 1}.eval(3) == 6);
    CHECK(Polynomial{0, 0, 1}.integrate(0, 1) == Rational(1, 3));
    CHECK(Polynomial{0, 2, 4}.divide_by_x() == Polynomial{2, 4});
    CHECK(Polynomial{1, 0, 0}.degree() == 0);
    CHECK(Polynomial().degree() == -1);
    CHECK(binomial_poly(2).eval(5) == 10);
    CHECK(binomial_poly(2, 3, 1).eval(1) == 6);
    CHECK(Polynomial::parse_list("0,1/2,-3") == Polynomial{0, Rational(1, 2), -3});
    const Polynomial p{Rational(1, 3), 0, -2};
    CHECK(Polynomial::from_json(p.to_json()) == p);
}

TEST_CASE("shift round trip on random polynomials") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial f = random_poly(rng, 12);
        CHECK(f.shift(1).shift(-1) == f);
        const Rational a(trial - 25, 3);
        CHECK(f.shift(a).eval(2) == f.eval(a + 2));
    }
}

TEST_CASE("power series examples") {
    CHECK(PowerSeries::log1p(6).coeff(2) == Rational(-1, 2));
    CHECK(PowerSeries::exp(6).coeff(3) == Rational(1, 6));
    const PowerSeries l = PowerSeries::log1p(8);
    CHECK((l * l * Rational(1, 2)).coeff(4) == Rational(11, 24));
    CHECK((l * l * Rational(1, 2)).coeff(4) == stirling1(4, 2) / Rational(factorial(4)));
    CHECK_THROWS(PowerSeries::exp(3).coeff(3));
    const PowerSeries e = PowerSeries::exp(10);
    const PowerSeries prod = e * e.inverse();
    CHECK(prod.coeff(0) == 1);
    for (long n = 1; n < 10; ++n) CHECK(prod.coeff(n) == 0);
    CHECK(PowerSeries::exp(10).compose(PowerSeries::log1p(10)).coeff(1) == 1);
    CHECK(PowerSeries::exp(10).compose(PowerSeries::log1p(10)).coeff(5) == 0);
}

TEST_CASE("series product equals an independent convolution") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-9, 9);
    std::vector<Rational> a, b;
    for (int i = 0; i <= 20; ++i) {
        a.emplace_back(num(rng), 1 + i % 4);
        b.emplace_back(num(rng), 1 + i % 3);
    }
    const PowerSeries prod = PowerSeries(a, 21) * PowerSeries(b, 21);
    for (long n = 0; n <= 20; ++n) {
        Rational conv;
        for (long i = 0; i <= n; ++i) conv += a[i] * b[n - i];
        CHECK(prod.coeff(n) == conv);
    }
}
