#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "volkenborn/combinatorics.hpp"
#include "volkenborn/polynomial.hpp"
#include "volkenborn/power_series.hpp"
#include "volkenborn/sequences.hpp"

using namespace volkenborn;

namespace {

// Calls visit(block_of) for every set partition of {0..n-1}, as restricted
// growth strings.
void for_each_partition(long n, const std::function<void(const std::vector<long>&, long)>& visit) {
    std::vector<long> a(n, 0);
    std::function<void(long, long)> rec = [&](long i, long blocks) {
        if (i == n) {
            visit(a, blocks);
            return;
        }
        for (long b = 0; b <= blocks; ++b) {
            a[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
}

long partitions_into(long n, long k) {
    long count = 0;
    for_each_partition(n, [&](const std::vector<long>&, long blocks) { count += blocks == k; });
    return count;
}

long ordered_partitions(long n) {
    long count = 0;
    for_each_partition(n, [&](const std::vector<long>&, long blocks) {
        long f = 1;
        for (long i = 2; i <= blocks; ++i) f *= i;
        count += f;
    });
    return count;
}

// Partitions into k nonempty linearly ordered lists.
long laguerre_configurations(long n, long k) {
    long count = 0;
    for_each_partition(n, [&](const std::vector<long>& a, long blocks) {
        if (blocks != k) return;
        std::vector<long> size(blocks, 0);
        for (long b : a) ++size[b];
        long orders = 1;
        for (long s : size)
            for (long i = 2; i <= s; ++i) orders *= i;
        count += orders;
    });
    return count;
}

long permutations_with_runs(long n, long k) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    long count = 0;
    do {
        long runs = n > 0 ? 1 : 0;
        for (long i = 1; i < n; ++i) runs += perm[i] < perm[i - 1];
        count += runs == k;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

Rational egf(const PowerSeries& s, long n) { return s.egf_coeff(n); }

}  // namespace

TEST_CASE("Bernoulli and Euler numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK(bernoulli(13) == 0);
    CHECK(euler(0) == 1);
    CHECK(euler(1) == Rational(-1, 2));
    CHECK(euler(2) == 0);
    CHECK(euler(3) == Rational(1, 4));
    CHECK_THROWS(bernoulli(-1));
    CHECK_THROWS(euler(-1));
    CHECK(bernoulli_poly(2) == Polynomial{Rational(1, 6), -1, 1});
    CHECK(euler_poly(1) == Polynomial{Rational(-1, 2), 1});
    CHECK(euler_second(0) == 1);
    for (long n = 0; n <= 10; ++n) CHECK(euler_second(n) == Rational(int_pow(2, n)) * euler_poly(n).eval(Rational(1, 2)));
}

TEST_CASE("Bernoulli and Euler numbers match their generating functions") {
    const long order = 16;
    const PowerSeries t = PowerSeries::variable(order + 1);
    const PowerSeries bern = t.shift_down().divide((PowerSeries::exp(order + 1) - PowerSeries::constant(1, order + 1)).shift_down());
    const PowerSeries eul = PowerSeries::constant(2, order).divide(PowerSeries::exp(order) + PowerSeries::constant(1, order));
    for (long n = 0; n < order; ++n) {
        CHECK(egf(bern, n) == bernoulli(n));
        CHECK(egf(eul, n) == euler(n));
    }
}

TEST_CASE("Apostol and Frobenius families") {
    CHECK(apostol_euler(0, 1) == 1);
    for (long n = 0; n <= 10; ++n) {
        CHECK(apostol_euler(n, 1) == euler(n));
        CHECK(frobenius_euler(n, -1) == euler(n));
    }
    CHECK(apostol_bernoulli(0, 2) == 0);
    CHECK(apostol_bernoulli(1, 2) == 1);
    for (long n = 2; n <= 10; ++n) {
        Rational s;
        for (long k = 0; k < n; ++k) s += binom_int(n, k) * apostol_bernoulli(k, 2);
        CHECK(2 * s + apostol_bernoulli(n, 2) == 0);
    }
    CHECK_THROWS(apostol_bernoulli(1, 1));
    CHECK_THROWS(apostol_euler(1, -1));
    CHECK_THROWS(frobenius_euler(1, 1));
}

TEST_CASE("Stirling numbers") {
    CHECK(stirling1(4, 2) == 11);
    CHECK(stirling1(0, 0) == 1);
    CHECK(stirling1(3, 1) == 2);
    CHECK(stirling1(5, 0) == 0);
    CHECK(stirling1_unsigned(4, 1) == 6);
    CHECK(stirling2(3, 2) == 3);
    for (long n = 0; n <= 15; ++n) CHECK(stirling2(n, n) == 1);
    Polynomial rebuilt;
    for (long k = 0; k <= 4; ++k) rebuilt += falling_poly(k) * stirling2(4, k);
    CHECK(rebuilt == Polynomial::monomial(4));
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k) {
            CHECK(stirling2(n, k) == partitions_into(n, k));
            CHECK(stirling2_lambda(n, k, 1) == stirling2(n, k));
            CHECK(stirling1_unsigned(n, k) == stirling1(n, k) * sign_power(n - k));
        }
}

TEST_CASE("Stirling duality") {
    for (long n = 0; n <= 15; ++n)
        for (long m = 0; m <= 15; ++m) {
            Rational s;
            for (long k = 0; k <= 15; ++k) s += stirling2(n, k) * stirling1(k, m);
            CHECK(s == (n == m ? 1 : 0));
        }
}

TEST_CASE("Schlomilch formula") {
    for (long n = 1; n <= 12; ++n)
        for (long k = 0; k <= n; ++k) {
            Rational s;
            for (long j = 0; j <= n - k; ++j)
                s += sign_power(j) * binom_int(n - 1 + j, n - k + j) * binom_int(2 * n - k, n - k - j) *
                     stirling2(n - k + j, j);
            CHECK(s == stirling1(n, k));
        }
}

TEST_CASE("lambda Stirling numbers and array polynomials match series") {
    const Rational lambda(3, 2);
    const long order = 10;
    for (long k = 0; k <= 4; ++k) {
        const PowerSeries base =
            (PowerSeries::exp(order) * lambda - PowerSeries::constant(1, order)).pow(k) *
            (Rational(1) / Rational(factorial(k)));
        for (long n = 0; n < order; ++n) CHECK(stirling2_lambda(n, k, lambda) == egf(base, n));
        for (long n = 0; n < 6; ++n) {
            const Polynomial a = array_poly(n, k, lambda);
            for (long x = 0; x <= 3; ++x) CHECK(a.eval(x) == egf(base * PowerSeries::exp_scaled(x, order), n));
        }
    }
}

TEST_CASE("associated Stirling numbers") {
    CHECK(assoc_stirling2(2, 1) == 1);
    CHECK(assoc_stirling1(3, 1) == 2);
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k)
            if (2 * k > n) {
                CHECK(assoc_stirling2(n, k) == 0);
                CHECK(assoc_stirling1(n, k) == 0);
            }
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= n; ++k) {
            Rational s1, s2;
            for (long j = 0; j <= k; ++j) {
                s1 += binom_int(n, j) * assoc_stirling1(n - j, k - j);
                s2 += binom_int(n, j) * assoc_stirling2(n - j, k - j);
            }
            CHECK(s1 == stirling1(n, k));
            CHECK(s2 == stirling2(n, k));
        }
}

TEST_CASE("Lah numbers") {
    CHECK(lah_unsigned(3, 1) == 6);
    CHECK(lah(2, 1) == 2);
    CHECK(lah(0, 0) == 1);
    CHECK(lah(3, 0) == 0);
    for (long n = 0; n <= 10; ++n) CHECK(lah(n, n) == sign_power(n));
    for (long n = 1; n <= 8; ++n)
        for (long k = 1; k <= n; ++k) CHECK(lah_unsigned(n, k) == laguerre_configurations(n, k));
    for (long n = 1; n < 15; ++n)
        for (long k = 1; k <= n + 1; ++k) CHECK(lah(n + 1, k) == -(n + k) * lah(n, k) - lah(n, k - 1));
    for (long n = 0; n <= 15; ++n) {
        Polynomial s, t;
        for (long k = 0; k <= n; ++k) {
            s += falling_poly(k) * lah_unsigned(n, k);
            t += falling_poly(k) * lah(n, k);
        }
        CHECK(s == rising_poly(n));
        CHECK(t == falling_poly(n).scale_argument(-1));
        for (long k = 0; k <= n; ++k) {
            Rational via;
            for (long j = 0; j <= n; ++j) via += sign_power(j) * stirling1(n, j) * stirling2(j, k);
            CHECK(via == lah(n, k));
        }
    }
    const long order = 10;
    const PowerSeries t = PowerSeries::variable(order);
    const PowerSeries ratio = t.divide(PowerSeries::constant(1, order) - t);
    for (long k = 1; k <= 5; ++k) {
        const PowerSeries g = ratio.pow(k) * (Rational(1) / Rational(factorial(k)));
        for (long n = 0; n < order; ++n) CHECK(egf(g, n) == lah_unsigned(n, k));
    }
}

TEST_CASE("Daehee and Changhee numbers") {
    const std::vector<Rational> y1{1, Rational(-1, 2), Rational(2, 3), Rational(-3, 2), Rational(24, 5)};
    const std::vector<Rational> y2{1, Rational(-1, 2), Rational(-1, 3), Rational(-1, 2), Rational(-6, 5)};
    const std::vector<Rational> c1{1, Rational(-1, 2), Rational(1, 2), Rational(-3, 4), Rational(3, 2)};
    const std::vector<Rational> c2{1, Rational(-1, 2), Rational(-1, 2), Rational(-3, 4), Rational(-3, 2)};
    for (long n = 0; n <= 4; ++n) {
        CHECK(daehee(n) == y1[n]);
        CHECK(daehee_hat(n) == y2[n]);
        CHECK(changhee(n) == c1[n]);
        CHECK(changhee_hat(n) == c2[n]);
    }
    for (long n = 0; n <= 20; ++n) {
        Rational d, c, dh;
        for (long k = 0; k <= n; ++k) {
            d += stirling1(n, k) * bernoulli(k);
            c += stirling1(n, k) * euler(k);
            dh += stirling1_unsigned(n, k) * bernoulli(k);
        }
        CHECK(d == daehee(n));
        CHECK(c == changhee(n));
        CHECK(dh == daehee_hat(n));
        CHECK(daehee_poly(n).eval(0) == daehee(n));
        CHECK(daehee_hat_poly(n).eval(0) == daehee_hat(n));
        CHECK(changhee_poly(n).eval(0) == changhee(n));
    }
}

TEST_CASE("Fubini numbers") {
    CHECK(fubini(0) == 1);
    CHECK(fubini(3) == 13);
    for (long n = 0; n <= 8; ++n) CHECK(fubini(n) == ordered_partitions(n));
    const long order = 12;
    const PowerSeries w = (PowerSeries::constant(2, order) - PowerSeries::exp(order)).inverse();
    for (long n = 0; n < order; ++n) {
        CHECK(fubini_order(n, 1) == fubini(n));
        CHECK(fubini_order(n, 2) == egf(w * w, n));
        CHECK(fubini_order(n, 3) == egf(w.pow(3), n));
        Rational conv;
        for (long j = 0; j <= n; ++j) conv += binom_int(n, j) * fubini(j) * fubini(n - j);
        CHECK(fubini_order(n, 2) == conv);
    }
    CHECK_THROWS(fubini_order(2, 0));
}

TEST_CASE("Cauchy numbers and Bernoulli polynomials of the second kind") {
    CHECK(cauchy(0) == 1);
    CHECK(cauchy(1) == Rational(1, 2));
    CHECK(cauchy(2) == Rational(-1, 6));
    for (long n = 0; n <= 20; ++n) {
        Rational s;
        for (long k = 0; k <= n; ++k) s += stirling1(n, k) / Rational(k + 1);
        CHECK(s == cauchy(n));
        CHECK(falling_poly(n).integrate(0, 1) == cauchy(n));
        CHECK(bernoulli_second_poly(n).eval(0) == cauchy(n));
    }
}

TEST_CASE("Eulerian numbers") {
    CHECK(eulerian(0, 0) == 1);
    CHECK(eulerian(4, 2) == 11);
    for (long n = 1; n <= 10; ++n) {
        CHECK(eulerian(n, 1) == 1);
        CHECK(eulerian(n, n) == 1);
    }
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k) CHECK(eulerian(n, k) == eulerian_explicit(n, k));
    for (long n = 1; n <= 7; ++n)
        for (long k = 1; k <= n; ++k) CHECK(eulerian(n, k) == permutations_with_runs(n, k));
    for (long n = 0; n <= 10; ++n) {
        Polynomial s;
        for (long k = 0; k <= n; ++k) s += binomial_poly(n, 1, n - k) * eulerian(n, k);
        CHECK(s == Polynomial::monomial(n));
    }
}

TEST_CASE("harmonic numbers and Osgood-Wu coefficients") {
    CHECK(harmonic(0) == 1);
    CHECK(harmonic(1) == Rational(3, 2));
    CHECK(harmonic(3) == Rational(25, 12));
    CHECK(osgood_wu(1, 1, 1) == 1);
    CHECK(osgood_wu(2, 1, 1) == 0);
    CHECK(osgood_wu(3, 1, 2) == 0);
    CHECK(osgood_wu(3, 2, 1) == 0);
    for (long k = 1; k <= 6; ++k) {
        for (long l = 1; l <= k; ++l)
            for (long m = 1; m <= k; ++m) CHECK(osgood_wu(k, l, m) == osgood_wu(k, m, l));
        for (long x = 0; x <= 4; ++x)
            for (long y = 0; y <= 4; ++y) {
                Rational s;
                for (long l = 1; l <= k; ++l)
                    for (long m = 1; m <= k; ++m) s += osgood_wu(k, l, m) * falling_int(x, l) * falling_int(y, m);
                CHECK(s == Rational(falling_int(x * y, k)));
            }
    }
}

TEST_CASE("tables survive cache clearing") {
    const Rational before = stirling1(14, 5) + bernoulli(18) + lah(9, 4) + eulerian(9, 3);
    clear_caches();
    CHECK(stirling1(14, 5) + bernoulli(18) + lah(9, 4) + eulerian(9, 3) == before);
}

TEST_CASE("triangular table grows lazily") {
    TriangularTable t("pascal", [](long n, const std::vector<std::vector<Rational>>& earlier) {
        std::vector<Rational> row(n + 1, Rational(1));
        for (long k = 1; k < n; ++k) row[k] = earlier[n - 1][k - 1] + earlier[n - 1][k];
        return row;
    });
    CHECK(t.rows_cached() == 0);
    CHECK(t.at(6, 3) == 20);
    CHECK(t.rows_cached() == 7);
    CHECK(t.at(6, 9) == 0);
    t.clear();
    CHECK(t.rows_cached() == 0);
}
