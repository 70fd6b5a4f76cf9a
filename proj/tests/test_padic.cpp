#include <random>

#include "doctest.h"
#include "volkenborn/padic.hpp"

using namespace volkenborn;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-5000, 5000);
    std::uniform_int_distribution<long> den(1, 5000);
    long n = num(rng);
    if (n == 0) n = 1;
    return Rational(n, den(rng));
}

}  // namespace

TEST_CASE("valuation examples") {
    CHECK(valuation(Rational(9, 2), 3) == 2);
    CHECK(valuation(Rational(1, 3), 3) == -1);
    CHECK_FALSE(valuation(Rational(0), 5).has_value());
    CHECK(valuation(Rational(-48), 2) == 4);
    CHECK_THROWS_AS(valuation(Rational(3), 4), std::invalid_argument);
}

TEST_CASE("primality and contexts") {
    CHECK(is_prime(2));
    CHECK(is_prime(9973));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(PAdicContext(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(PAdicContext(5, 0), std::invalid_argument);
    CHECK(PAdicContext(3, 4).modulus() == 81);
}

TEST_CASE("reduce examples") {
    const PAdicValue half = reduce(Rational(1, 2), PAdicContext(3, 2));
    CHECK_FALSE(half.zero);
    CHECK(half.valuation == 0);
    CHECK(half.residue == 5);
    const PAdicValue nine = reduce(Rational(9), PAdicContext(3, 3));
    CHECK(nine.valuation == 2);
    CHECK(nine.residue == 1);
    CHECK(reduce(Rational(0), PAdicContext(5, 4)).zero);
    CHECK(reduce(Rational(0), PAdicContext(5, 4)).str() == "0");
    const PAdicValue third = reduce(Rational(2, 3), PAdicContext(3, 2));
    CHECK(third.valuation == -1);
    CHECK(third.residue == 2);
}

TEST_CASE("distance examples") {
    CHECK(padic_distance(4, Rational(-1, 2), 3) == Rational(1, 9));
    CHECK(padic_distance(Rational(5, 7), Rational(5, 7), 11) == 0);
    CHECK(padic_distance(1, 0, 7) == 1);
    CHECK(padic_distance(Rational(1, 5), 0, 5) == 5);
}

TEST_CASE("ultrametric inequality and multiplicativity") {
    std::mt19937 rng(2024);
    for (long p : {2L, 3L, 5L, 7L}) {
        for (int i = 0; i < 500; ++i) {
            const Rational x = random_rational(rng);
            const Rational y = random_rational(rng);
            const long vx = *valuation(x, p);
            const long vy = *valuation(y, p);
            const auto vs = valuation(x + y, p);
            if (vs) {
                CHECK(*vs >= std::min(vx, vy));
                if (vx != vy) CHECK(*vs == std::min(vx, vy));
            } else {
                CHECK(vx == vy);
            }
            CHECK(*valuation(x * y, p) == vx + vy);
        }
    }
}

TEST_CASE("reduce respects addition") {
    std::mt19937 rng(99);
    int checked = 0;
    for (long p : {3L, 5L, 7L}) {
        const PAdicContext ctx(p, 5);
        while (checked < 200) {
            const Rational x = random_rational(rng);
            const Rational y = random_rational(rng);
            if (*valuation(x, p) < 0 || *valuation(y, p) < 0) continue;
            CHECK(reduce(x + y, ctx).residue_class() == (reduce(x, ctx) + reduce(y, ctx)).residue_class());
            ++checked;
        }
        checked = 0;
    }
}

TEST_CASE("addition without cancellation keeps the full value") {
    const PAdicContext ctx(5, 4);
    CHECK(reduce(Rational(3), ctx) + reduce(Rational(1, 2), ctx) == reduce(Rational(7, 2), ctx));
    CHECK((reduce(Rational(1), ctx) + reduce(Rational(624), ctx)).zero);
    CHECK_THROWS_AS(reduce(Rational(1), ctx) + reduce(Rational(1), PAdicContext(5, 3)), std::domain_error);
    CHECK_THROWS_AS(reduce(Rational(1, 5), ctx) + reduce(Rational(1), ctx), std::domain_error);
}

TEST_CASE("reduced residues are consistent with the rational") {
    const PAdicContext ctx(7, 3);
    for (long n = -30; n <= 30; ++n)
        for (long d = 1; d <= 12; ++d) {
            const Rational x(n, d);
            if (x.is_zero() || *valuation(x, 7) < 0) continue;
            const PAdicValue v = reduce(x, ctx);
            CHECK(v.residue % 7 != 0);
            const Integer lhs = v.residue_class() * x.denominator() - x.numerator();
            const Integer r = ((lhs % ctx.modulus()) + ctx.modulus()) % ctx.modulus();
            CHECK(r == 0);
        }
}
