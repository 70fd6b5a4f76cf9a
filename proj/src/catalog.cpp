#include <utility>

#include "volkenborn/bivariate.hpp"
#include "volkenborn/combinatorics.hpp"
#include "volkenborn/identities.hpp"
#include "volkenborn/integrals.hpp"
#include "volkenborn/polynomial.hpp"
#include "volkenborn/power_series.hpp"
#include "volkenborn/sequences.hpp"

namespace volkenborn {

namespace {

using R = Rational;
using PN = ParamName;

R fac(long n) { return R(factorial(n)); }
R sgn(long e) { return sign_power(e); }
R C(long a, long k) { return binom_general(a, k); }
R ff(long a, long k) { return R(falling_int(a, k)); }
R pw(long base, long e) { return R(int_pow(base, e)); }
R half_pow(long e) { return R(1, 2).pow(e); }

template <class F>
R sum(long lo, long hi, F f) {
    R s;
    for (long i = lo; i <= hi; ++i) s += f(i);
    return s;
}

R V(const Polynomial& f) { return volkenborn_exact(f); }
R F(const Polynomial& f) { return fermionic_exact(f); }
const Polynomial X = Polynomial::x();

ParamRange n_range(long lo, long hi = 15) { return {PN::n, lo, hi, true}; }
ParamRange range(PN name, long lo, long hi) { return {name, lo, hi, false}; }
ParamRange x_points() { return range(PN::x, -6, 18); }
ParamRange y_points(long lo, long hi) { return range(PN::y, lo, hi); }

Domain dom(std::vector<ParamRange> ranges) { return Domain{std::move(ranges), {}}; }
Domain n_dom(long lo, long hi = 15) { return dom({n_range(lo, hi)}); }

Clause verified(std::string name, std::vector<Side> sides, Domain domain) {
    Clause c;
    c.name = std::move(name);
    c.sides = std::move(sides);
    c.domain = std::move(domain);
    return c;
}

Clause corrected(std::string name, std::vector<Side> sides, Domain domain, std::string note,
                 std::vector<LiteralReading> literals) {
    Clause c = verified(std::move(name), std::move(sides), std::move(domain));
    c.status = ClauseStatus::corrected;
    c.note = std::move(note);
    c.literals = std::move(literals);
    return c;
}

// Osgood-Wu coefficients with the sign of the printed definition applied to
// the signed Stirling numbers of the first kind.
R osgood_wu_literal(long k, long l, long m) {
    return sum(1, k, [&](long j) { return sgn(k - j) * stirling1(k, j) * stirling2(j, l) * stirling2(j, m); });
}

R daehee_osgood(long k) {
    return sum(1, k, [&](long l) { return sum(1, k, [&](long m) { return daehee(l) * daehee(m) * osgood_wu(k, l, m); }); });
}

// Product of (x + a - j)/(j + 1) for j < n, without the polynomial module.
R binom_at(const R& top, long n) {
    R r(1);
    for (long j = 0; j < n; ++j) r *= (top - R(j)) / R(j + 1);
    return r;
}

// Mahler coefficients sum_j (-1)^j C(k, j) g(k - j) against a weight w(k).
template <class G, class W>
R mahler_sum(long top, G g, W w) {
    return sum(0, top, [&](long k) { return w(k) * sum(0, k, [&](long j) { return sgn(j) * C(k, j) * g(k - j); }); });
}

R bos_weight(long k) { return sgn(k) / R(k + 1); }
R fer_weight(long k) { return sgn(k) * half_pow(k); }

Polynomial gould_215(long n) { return X * binomial_poly(n - 1, 1, -2) + X * (X - Polynomial::constant(1)) * binomial_poly(n - 2, 1, -3); }
Polynomial gould_215_literal(long n) { return X * binomial_poly(n - 1, 1, -2) + X * (X - Polynomial::constant(1)) * C(n - 3, n - 2); }

IdentityRecord i01() {
    return {"I01",
            "Daehee numbers from Stirling numbers and Bernoulli numbers",
            {verified("Y1(n:B) three ways",
                      {{"sum S1(n,l) B_l", [](const Params& p) { return sum(0, p.n, [&](long l) { return stirling1(p.n, l) * bernoulli(l); }); }},
                       {"(-1)^n n!/(n+1)", [](const Params& p) { return sgn(p.n) * fac(p.n) / R(p.n + 1); }},
                       {"V(x_(n))", [](const Params& p) { return V(falling_poly(p.n)); }}},
                      n_dom(0))}};
}

IdentityRecord i02() {
    return {"I02",
            "Volkenborn integral of (x+1)_(n)",
            {verified("int (x+1)_(n)",
                      {{"V((x+1)_(n))", [](const Params& p) { return V(falling_poly(p.n).shift(1)); }},
                       {"(-1)^(n+1) n!/(n^2+n)", [](const Params& p) { return sgn(p.n + 1) * fac(p.n) / R(p.n * p.n + p.n); }}},
                      n_dom(1))}};
}

IdentityRecord i03() {
    return {"I03",
            "Volkenborn integral of the forward difference of x_(n)",
            {verified("int Delta x_(n)",
                      {{"V((x+1)_(n) - x_(n))", [](const Params& p) { return V(falling_poly(p.n).shift(1) - falling_poly(p.n)); }},
                       {"(-1)^(n+1) (n-1)!", [](const Params& p) { return sgn(p.n + 1) * fac(p.n - 1); }},
                       {"n D_(n-1)", [](const Params& p) { return R(p.n) * daehee(p.n - 1); }}},
                      n_dom(1))}};
}

IdentityRecord i04() {
    return {"I04",
            "Volkenborn integral of (-x)_(n) through Lah numbers",
            {verified("int (-x)_(n)",
                      {{"V((-x)_(n))", [](const Params& p) { return V(falling_poly(p.n).scale_argument(-1)); }},
                       {"sum (-1)^k k! L(n,k)/(k+1)",
                        [](const Params& p) { return sum(0, p.n, [&](long k) { return sgn(k) * fac(k) * lah(p.n, k) / R(k + 1); }); }},
                       {"sum (-1)^(k+n) C(n-1,k-1) n!/(k+1)",
                        [](const Params& p) { return sum(1, p.n, [&](long k) { return sgn(k + p.n) * C(p.n - 1, k - 1) * fac(p.n) / R(k + 1); }); }}},
                      n_dom(1))}};
}

IdentityRecord i05() {
    return {"I05",
            "Y2(n:B), the Volkenborn integral of the rising factorial",
            {verified("Y2(n:B) seven ways",
                      {{"V(x^(n))", [](const Params& p) { return V(rising_poly(p.n)); }},
                       {"sum |S1(n,k)| B_k", [](const Params& p) { return sum(0, p.n, [&](long k) { return stirling1_unsigned(p.n, k) * bernoulli(k); }); }},
                       {"sum (-1)^k n!/(k+1) C(n-1,k-1)",
                        [](const Params& p) { return sum(1, p.n, [&](long k) { return sgn(k) * fac(p.n) / R(k + 1) * C(p.n - 1, k - 1); }); }},
                       {"sum (-1)^k |L(n,k)| k!/(k+1)",
                        [](const Params& p) { return sum(0, p.n, [&](long k) { return sgn(k) * lah_unsigned(p.n, k) * fac(k) / R(k + 1); }); }},
                       {"sum |L(n,k)| S1(k,j) B_j",
                        [](const Params& p) {
                            return sum(0, p.n, [&](long k) {
                                return lah_unsigned(p.n, k) * sum(0, k, [&](long j) { return stirling1(k, j) * bernoulli(j); });
                            });
                        }},
                       {"sum |L(n,k)| D_k", [](const Params& p) { return sum(0, p.n, [&](long k) { return lah_unsigned(p.n, k) * daehee(k); }); }},
                       {"daehee_hat(n)", [](const Params& p) { return daehee_hat(p.n); }}},
                      n_dom(1))}};
}

R i06_sum(long n) {
    return sum(1, n, [&](long k) { return sgn(k + 1) * C(n - 1, k - 1) * fac(n) / R(k * k + 3 * k + 2); });
}

R lah_weighted(long n) {
    return sum(1, n, [&](long k) { return sgn(k + 1) * lah_unsigned(n, k) * fac(k) / R(k * k + 3 * k + 2); });
}

IdentityRecord i06() {
    return {"I06",
            "Volkenborn integral of x times the rising factorial",
            {verified("int x x^(n)",
                      {{"V(x x^(n))", [](const Params& p) { return V(X * rising_poly(p.n)); }},
                       {"sum (-1)^(k+1) C(n-1,k-1) n!/(k^2+3k+2)", [](const Params& p) { return i06_sum(p.n); }},
                       {"sum |S1(n,k)| B_(k+1)", [](const Params& p) { return sum(1, p.n, [&](long k) { return stirling1_unsigned(p.n, k) * bernoulli(k + 1); }); }}},
                      n_dom(1))}};
}

IdentityRecord i07() {
    return {"I07",
            "Recurrence for Y2(n:B)",
            {verified("Y2(n+1:B) - n Y2(n:B)",
                      {{"V(x^(n+1)) - n V(x^(n))", [](const Params& p) { return V(rising_poly(p.n + 1)) - R(p.n) * V(rising_poly(p.n)); }},
                       {"sum (-1)^(k+1) |L(n,k)| k!/(k^2+3k+2)", [](const Params& p) { return lah_weighted(p.n); }}},
                      n_dom(1)),
             verified("Stirling rearrangement",
                      {{"sum_(k<=n) (|S1(n+1,k)| - n|S1(n,k)|) B_k",
                        [](const Params& p) {
                            return sum(1, p.n, [&](long k) {
                                return (stirling1_unsigned(p.n + 1, k) - R(p.n) * stirling1_unsigned(p.n, k)) * bernoulli(k);
                            });
                        }},
                       {"Lah sum - B_(n+1)", [](const Params& p) { return lah_weighted(p.n) - bernoulli(p.n + 1); }}},
                      n_dom(1))}};
}

R i08_closed(long n) { return sgn(n + 1) * fac(n) / R(n * n + 3 * n + 2); }
R i08_stirling(long n) { return sum(1, n, [&](long k) { return stirling1(n, k - 1) * bernoulli(k); }); }

IdentityRecord i08() {
    return {"I08",
            "Volkenborn integral of x x_(n)",
            {verified("int x x_(n)",
                      {{"V(x x_(n))", [](const Params& p) { return V(X * falling_poly(p.n)); }},
                       {"(-1)^(n+1) n!/(n^2+3n+2)", [](const Params& p) { return i08_closed(p.n); }},
                       {"sum S1(n,k-1) B_k + B_(n+1)", [](const Params& p) { return i08_stirling(p.n) + bernoulli(p.n + 1); }}},
                      n_dom(0)),
             verified("Stirling sum isolated",
                      {{"sum S1(n,k-1) B_k", [](const Params& p) { return i08_stirling(p.n); }},
                       {"(-1)^(n+1) n!/(n^2+3n+2) - B_(n+1)", [](const Params& p) { return i08_closed(p.n) - bernoulli(p.n + 1); }}},
                      n_dom(0))}};
}

IdentityRecord i09() {
    const auto lhs = [](const Params& p) { return ff(p.x, p.n + 1); };
    return {"I09",
            "Volkenborn integral of x_(n+1)/x",
            {verified("int x_(n+1)/x",
                      {{"V(x_(n+1)/x)", [](const Params& p) { return V(falling_poly(p.n + 1).divide_by_x()); }},
                       {"(-1)^n sum n_(n-k) k!/(k+1)",
                        [](const Params& p) { return sgn(p.n) * sum(0, p.n, [&](long k) { return ff(p.n, p.n - k) * fac(k) / R(k + 1); }); }}},
                      n_dom(0)),
             corrected("expansion of x_(n+1) in x x_(k)",
                       {{"x_(n+1)", lhs},
                        {"x sum (-1)^(n-k) n_(n-k) x_(k)",
                         [](const Params& p) { return R(p.x) * sum(0, p.n, [&](long k) { return sgn(p.n - k) * ff(p.n, p.n - k) * ff(p.x, k); }); }}},
                       dom({n_range(0, 12), x_points()}),
                       "the sign is (-1)^(n-k), not (-1)^k",
                       {{"x_(n+1) = x sum (-1)^k n_(n-k) x_(k)",
                         lhs,
                         [](const Params& p) { return R(p.x) * sum(0, p.n, [&](long k) { return sgn(k) * ff(p.n, p.n - k) * ff(p.x, k); }); },
                         Params{.n = 1, .x = 2},
                         R(2),
                         R(-2)}})}};
}

IdentityRecord i10() {
    return {"I10",
            "Volkenborn integral of (x+1)_(n+1)",
            {verified("int (x+1)_(n+1)",
                      {{"V((x+1)_(n+1))", [](const Params& p) { return V(falling_poly(p.n + 1).shift(1)); }},
                       {"(-1)^n n!/(n+2)", [](const Params& p) { return sgn(p.n) * fac(p.n) / R(p.n + 2); }},
                       {"D_(n+1) + (n+1) D_n", [](const Params& p) { return daehee(p.n + 1) + R(p.n + 1) * daehee(p.n); }}},
                      n_dom(0))}};
}

IdentityRecord i11() {
    return {"I11",
            "Recurrence for Y1(n:B)",
            {verified("D_(n+1) + n D_n",
                      {{"D_(n+1) + n D_n", [](const Params& p) { return daehee(p.n + 1) + R(p.n) * daehee(p.n); }},
                       {"sum S1(n,k-1) B_k + B_(n+1)", [](const Params& p) { return i08_stirling(p.n) + bernoulli(p.n + 1); }},
                       {"(-1)^(n+1) n!/(n^2+3n+2)", [](const Params& p) { return i08_closed(p.n); }}},
                      n_dom(0))}};
}

IdentityRecord i12() {
    return {"I12",
            "Double Volkenborn integrals from the Chu-Vandermonde identity",
            {verified("int int (x+y)_(n)",
                      {{"V(D_n(x))", [](const Params& p) { return V(daehee_poly(p.n)); }},
                       {"iterated integral of (x+y)_(n)",
                        [](const Params& p) { return double_integral(falling_sum(p.n), MeasureKind::bosonic, MeasureKind::bosonic); }},
                       {"sum C(n,k) D_k D_(n-k)", [](const Params& p) { return sum(0, p.n, [&](long k) { return C(p.n, k) * daehee(k) * daehee(p.n - k); }); }},
                       {"(-1)^n sum n!/((k+1)(n-k+1))",
                        [](const Params& p) { return sgn(p.n) * sum(0, p.n, [&](long k) { return fac(p.n) / R((k + 1) * (p.n - k + 1)); }); }},
                       {"sum C(k,j) S1(n,k) B_j B_(k-j)",
                        [](const Params& p) {
                            return sum(0, p.n, [&](long k) {
                                return stirling1(p.n, k) * sum(0, k, [&](long j) { return C(k, j) * bernoulli(j) * bernoulli(k - j); });
                            });
                        }}},
                      n_dom(0)),
             verified("int int C(x+y,n)",
                      {{"iterated integral of C(x+y,n)",
                        [](const Params& p) { return double_integral(binomial_sum(p.n), MeasureKind::bosonic, MeasureKind::bosonic); }},
                       {"(-1)^n sum 1/((k+1)(n-k+1))",
                        [](const Params& p) { return sgn(p.n) * sum(0, p.n, [&](long k) { return R(1) / R((k + 1) * (p.n - k + 1)); }); }}},
                      n_dom(0)),
             verified("Chu-Vandermonde at integer points",
                      {{"C(x+y,n)", [](const Params& p) { return C(p.x + p.y, p.n); }},
                       {"sum C(x,k) C(y,n-k)", [](const Params& p) { return sum(0, p.n, [&](long k) { return C(p.x, k) * C(p.y, p.n - k); }); }}},
                      dom({n_range(0, 8), range(PN::x, -4, 5), y_points(-4, 5)}))}};
}

IdentityRecord i13() {
    return {"I13",
            "Volkenborn integrals of C(x+1,n)",
            {verified("int C(x+1,n)",
                      {{"V(C(x+1,n))", [](const Params& p) { return V(binomial_poly(p.n, 1, 1)); }},
                       {"(-1)^(n+1)/(n^2+n)", [](const Params& p) { return sgn(p.n + 1) / R(p.n * p.n + p.n); }}},
                      n_dom(1)),
             verified("int C(x+1,n+1)",
                      {{"V(C(x+1,n+1))", [](const Params& p) { return V(binomial_poly(p.n + 1, 1, 1)); }},
                       {"(-1)^n/(n^2+3n+2)", [](const Params& p) { return sgn(p.n) / R(p.n * p.n + 3 * p.n + 2); }}},
                      n_dom(0))}};
}

Side bos_double_product() {
    return {"iterated integral of (xy)_(k)",
            [](const Params& p) { return double_integral(falling_product(p.k), MeasureKind::bosonic, MeasureKind::bosonic); }};
}

Side fer_double_product() {
    return {"iterated fermionic integral of (xy)_(k)",
            [](const Params& p) { return double_integral(falling_product(p.k), MeasureKind::fermionic, MeasureKind::fermionic); }};
}

R osgood_expansion(long k, long x, long y) {
    return sum(1, k, [&](long l) { return sum(1, k, [&](long m) { return osgood_wu(k, l, m) * ff(x, l) * ff(y, m); }); });
}

IdentityRecord i14() {
    const Domain tensor = dom({range(PN::k, 1, 8)});
    return {"I14",
            "Double Volkenborn integrals of (xy)_(k) through Osgood-Wu coefficients",
            {verified("Osgood-Wu form",
                      {bos_double_product(),
                       {"sum (-1)^(l+m) l! m!/((l+1)(m+1)) C(k;l,m)",
                        [](const Params& p) {
                            return sum(1, p.k, [&](long l) {
                                return sum(1, p.k, [&](long m) {
                                    return sgn(l + m) * fac(l) * fac(m) / R((l + 1) * (m + 1)) * osgood_wu(p.k, l, m);
                                });
                            });
                        }},
                       {"sum D_l D_m C(k;l,m)", [](const Params& p) { return daehee_osgood(p.k); }}},
                      tensor),
             corrected("Stirling form",
                       {bos_double_product(),
                        {"sum_m S1(k,m) B_m^2", [](const Params& p) { return sum(0, p.k, [&](long m) { return stirling1(p.k, m) * bernoulli(m).pow(2); }); }}},
                       tensor,
                       "the squared Bernoulli number carries the summation index m",
                       {{"sum_m S1(k,m) (B_l)^2 with l read as k",
                         bos_double_product().eval,
                         [](const Params& p) { return sum(0, p.k, [&](long m) { return stirling1(p.k, m) * bernoulli(p.k).pow(2); }); },
                         Params{.k = 2},
                         R(-2, 9),
                         R(0)}}),
             verified("symmetry C(k;l,m) = C(k;m,l)",
                      {{"C(k;l,m)", [](const Params& p) { return osgood_wu(p.k, p.l, p.m); }},
                       {"C(k;m,l)", [](const Params& p) { return osgood_wu(p.k, p.m, p.l); }}},
                      dom({range(PN::k, 1, 8), range(PN::l, 0, 8), range(PN::m, 0, 8)})),
             corrected("expansion of (xy)_(k)",
                       {{"(xy)_(k)", [](const Params& p) { return ff(p.x * p.y, p.k); }},
                        {"sum C(k;l,m) x_(l) y_(m)", [](const Params& p) { return osgood_expansion(p.k, p.x, p.y); }}},
                       dom({range(PN::k, 1, 6), range(PN::x, -2, 5), y_points(-2, 5)}),
                       "C(k;l,m) = sum_j S1(k,j) S2(j,l) S2(j,m) with signed S1 and no extra sign; "
                       "this gives the stated values C(2;1,1) = 0 and C(3;1,2) = 0",
                       {{"C(k;l,m) = sum_j (-1)^(k-j) S1(k,j) S2(j,l) S2(j,m)",
                         [](const Params& p) { return ff(p.x * p.y, p.k); },
                         [](const Params& p) {
                             return sum(1, p.k, [&](long l) {
                                 return sum(1, p.k, [&](long m) { return osgood_wu_literal(p.k, l, m) * ff(p.x, l) * ff(p.y, m); });
                             });
                         },
                         Params{.k = 2, .x = 1, .y = 1},
                         R(0),
                         R(2)}})}};
}

IdentityRecord i15() {
    return {"I15",
            "Volkenborn integral from Gould (4.20)",
            {verified("int x C(x-2,n-1)",
                      {{"V(x C(x-2,n-1))", [](const Params& p) { return V(X * binomial_poly(p.n - 1, 1, -2)); }},
                       {"(-1)^n sum k/(k+1)", [](const Params& p) { return sgn(p.n) * sum(1, p.n, [](long k) { return R(k, k + 1); }); }}},
                      n_dom(1)),
             verified("Gould (4.20) at integer points",
                      {{"(-1)^n x C(x-2,n-1)", [](const Params& p) { return sgn(p.n) * R(p.x) * C(p.x - 2, p.n - 1); }},
                       {"sum (-1)^k C(x,k) k", [](const Params& p) { return sum(1, p.n, [&](long k) { return sgn(k) * C(p.x, k) * R(k); }); }}},
                      dom({n_range(1, 12), x_points()}))}};
}

IdentityRecord i16() {
    const auto bos = [](const Params& p) { return V(binomial_poly(p.n, -1, p.n)); };
    const auto fer = [](const Params& p) { return F(binomial_poly(p.n, -1, p.n)); };
    const auto signed_h = [](const Params& p) { return sgn(p.n) * harmonic(p.n); };
    return {"I16",
            "Harmonic numbers from Gould (4.19)",
            {corrected("int C(n-x,n)",
                       {{"V(C(n-x,n))", bos}, {"H_n", [](const Params& p) { return harmonic(p.n); }}},
                       n_dom(0),
                       "holds for the Volkenborn measure without the sign (-1)^n; the fermionic integral "
                       "equals sum_(k<=n) 2^(-k) instead",
                       {{"int C(n-x,n) dmu_-1 = (-1)^n H_n", fer, signed_h, Params{.n = 1}, R(3, 2), R(-3, 2)},
                        {"int C(n-x,n) dmu_1 = (-1)^n H_n", bos, signed_h, Params{.n = 1}, R(3, 2), R(-3, 2)}}),
             corrected("Gould (4.19) at integer points",
                       {{"C(n-x,n)", [](const Params& p) { return C(p.n - p.x, p.n); }},
                        {"sum (-1)^k C(x,k)", [](const Params& p) { return sum(0, p.n, [&](long k) { return sgn(k) * C(p.x, k); }); }}},
                       dom({n_range(0, 12), x_points()}),
                       "no factor (-1)^n on the left",
                       {{"(-1)^n C(n-x,n) = sum (-1)^k C(x,k)",
                         [](const Params& p) { return sgn(p.n) * C(p.n - p.x, p.n); },
                         [](const Params& p) { return sum(0, p.n, [&](long k) { return sgn(k) * C(p.x, k); }); },
                         Params{.n = 1, .x = 0},
                         R(-1),
                         R(1)}})}};
}

IdentityRecord i17() {
    return {"I17",
            "Volkenborn integral of C(mx,n) from Gould (2.65)",
            {verified("int C(mx,n)",
                      {{"V(C(mx,n))", [](const Params& p) { return V(binomial_poly(p.n, p.m, 0)); }},
                       {"sum (-1)^k/(k+1) sum (-1)^j C(k,j) C(mk-mj,n)",
                        [](const Params& p) { return mahler_sum(p.n, [&](long d) { return C(p.m * d, p.n); }, bos_weight); }}},
                      dom({n_range(0, 12), range(PN::m, 0, 6)}))}};
}

Polynomial binomial_power(long n, long r) {
    Polynomial b = binomial_poly(n);
    Polynomial out = Polynomial::constant(1);
    for (long i = 0; i < r; ++i) out *= b;
    return out;
}

IdentityRecord i18() {
    return {"I18",
            "Volkenborn integral of C(x,n)^r from Gould (2.66)",
            {verified("int C(x,n)^r",
                      {{"V(C(x,n)^r)", [](const Params& p) { return V(binomial_power(p.n, p.r)); }},
                       {"sum_(k<=nr) (-1)^k/(k+1) sum (-1)^j C(k,j) C(k-j,n)^r",
                        [](const Params& p) { return mahler_sum(p.n * p.r, [&](long d) { return C(d, p.n).pow(p.r); }, bos_weight); }}},
                      dom({n_range(0), range(PN::r, 1, 3)}))}};
}

R gould_215_rhs(long n, long x) { return sum(0, n, [&](long k) { return sgn(k) * C(x, k) * R(k * k); }); }

IdentityRecord i19() {
    const auto rhs = [](const Params& p) { return sgn(p.n) * sum(0, p.n, [](long k) { return R(k * k, k + 1); }); };
    return {"I19",
            "Volkenborn integral from Gould (2.15)",
            {corrected("int x C(x-2,n-1) + x(x-1) C(x-3,n-2)",
                       {{"V(x C(x-2,n-1) + x(x-1) C(x-3,n-2))", [](const Params& p) { return V(gould_215(p.n)); }},
                        {"(-1)^n sum k^2/(k+1)", rhs}},
                       n_dom(2),
                       "the second binomial is C(x-3,n-2), a polynomial in x, not the constant C(n-3,n-2)",
                       {{"int x C(x-2,n-1) + x(x-1) C(n-3,n-2) dmu_1 = (-1)^n sum k^2/(k+1)",
                         [](const Params& p) { return V(gould_215_literal(p.n)); },
                         rhs,
                         Params{.n = 3},
                         R(-23, 12),
                         R(-49, 12)}}),
             corrected("Gould (2.15) at integer points",
                       {{"(-1)^n (x C(x-2,n-1) + x(x-1) C(x-3,n-2))",
                         [](const Params& p) {
                             return sgn(p.n) * (R(p.x) * C(p.x - 2, p.n - 1) + R(p.x * (p.x - 1)) * C(p.x - 3, p.n - 2));
                         }},
                        {"sum (-1)^k C(x,k) k^2", [](const Params& p) { return gould_215_rhs(p.n, p.x); }}},
                       dom({n_range(2, 12), x_points()}),
                       "the left side needs the factor (-1)^n and the binomial C(x-3,n-2)",
                       {{"x C(x-2,n-1) + x(x-1) C(n-3,n-2) = sum (-1)^k C(x,k) k^2",
                         [](const Params& p) { return R(p.x) * C(p.x - 2, p.n - 1) + R(p.x * (p.x - 1)) * C(p.n - 3, p.n - 2); },
                         [](const Params& p) { return gould_215_rhs(p.n, p.x); },
                         Params{.n = 3, .x = 4},
                         R(4),
                         R(-16)}})}};
}

R gould_264_coeff(long n, long d) { return C(d + n, n); }

R gould_617(long n, long k) { return sum(0, n, [&](long j) { return C(n, j) * stirling1(j, k) / fac(j); }); }

IdentityRecord i20() {
    return {"I20",
            "Volkenborn integral of C(x+n,n)",
            {verified("int C(x+n,n)",
                      {{"V(C(x+n,n))", [](const Params& p) { return V(binomial_poly(p.n, 1, p.n)); }},
                       {"sum (-1)^k/(k+1) sum (-1)^j C(k,j) C(k-j+n,n)",
                        [](const Params& p) { return mahler_sum(p.n, [&](long d) { return gould_264_coeff(p.n, d); }, bos_weight); }},
                       {"sum B_k sum C(n,j) S1(j,k)/j!", [](const Params& p) { return sum(0, p.n, [&](long k) { return bernoulli(k) * gould_617(p.n, k); }); }},
                       {"sum (-1)^(k+j) C(k,j) C(k-j+n,n)/(k+1)",
                        [](const Params& p) {
                            return sum(0, p.n, [&](long k) {
                                return sum(0, k, [&](long j) { return sgn(k + j) * C(k, j) * C(k - j + p.n, p.n) / R(k + 1); });
                            });
                        }},
                       {"sum (-1)^j C(k,j) C(k-j+n,n) D_k/k!",
                        [](const Params& p) {
                            return sum(0, p.n, [&](long k) {
                                return sum(0, k, [&](long j) { return sgn(j) * C(k, j) * C(k - j + p.n, p.n) * daehee(k) / fac(k); });
                            });
                        }}},
                      n_dom(0))}};
}

R gould_626_term(long n, long k) { return C(n, k) / (R(2 * k + 1) * C(2 * k, k)); }

IdentityRecord i21() {
    return {"I21",
            "Volkenborn integral of C(x+n+1/2,n) from Gould (6.26)",
            {verified("int C(x+n+1/2,n)",
                      {{"V(C(x+n+1/2,n))", [](const Params& p) { return V(binomial_poly(p.n, 1, R(2 * p.n + 1, 2))); }},
                       {"C(2n,n) sum (-1)^k C(n,k) 2^(2k-2n) (2n+1)/((k+1)(2k+1)C(2k,k))",
                        [](const Params& p) {
                            return C(2 * p.n, p.n) * R(2 * p.n + 1) *
                                   sum(0, p.n, [&](long k) { return sgn(k) * half_pow(2 * p.n - 2 * k) * gould_626_term(p.n, k) / R(k + 1); });
                        }}},
                      n_dom(0, 12)),
             verified("Gould (6.26) at integer points",
                      {{"C(x+n+1/2,n)", [](const Params& p) { return binom_at(R(2 * (p.x + p.n) + 1, 2), p.n); }},
                       {"(2n+1) C(2n,n) sum C(n,k) C(x,k) 2^(2k-2n)/((2k+1)C(2k,k))",
                        [](const Params& p) {
                            return R(2 * p.n + 1) * C(2 * p.n, p.n) *
                                   sum(0, p.n, [&](long k) { return C(p.x, k) * half_pow(2 * p.n - 2 * k) * gould_626_term(p.n, k); });
                        }}},
                      dom({n_range(0, 10), x_points()}))}};
}

IdentityRecord i22() {
    return {"I22",
            "Volkenborn integral of x^m x_(n)",
            {verified("int x^m x_(n)",
                      {{"V(x^m x_(n))", [](const Params& p) { return V(Polynomial::monomial(p.m) * falling_poly(p.n)); }},
                       {"sum S1(n,k) B_(k+m)", [](const Params& p) { return sum(0, p.n, [&](long k) { return stirling1(p.n, k) * bernoulli(k + p.m); }); }}},
                      dom({n_range(0), range(PN::m, 0, 15)}))}};
}

R connection_daehee(long m, long n) {
    return sum(0, std::min(m, n), [&](long k) { return C(m, k) * C(n, k) * fac(k) * daehee(m + n - k); });
}

IdentityRecord i23() {
    const auto lhs = [](const Params& p) { return V(falling_poly(p.m) * falling_poly(p.n)); };
    const Domain grid = dom({n_range(0), range(PN::m, 0, 15)});
    return {"I23",
            "Volkenborn integrals of products of falling factorials",
            {corrected("int x_(m) x_(n)",
                       {{"V(x_(m) x_(n))", lhs},
                        {"sum C(m,k) C(n,k) k! D_(m+n-k)", [](const Params& p) { return connection_daehee(p.m, p.n); }},
                        {"sum (-1)^(m+n-k) C(m,k) C(n,k) k!(m+n-k)!/(m+n-k+1)",
                         [](const Params& p) {
                             return sum(0, p.m, [&](long k) {
                                 const long d = p.m + p.n - k;
                                 return sgn(d) * C(p.m, k) * C(p.n, k) * fac(k) * fac(d) / R(d + 1);
                             });
                         }},
                        {"sum S1(n,j) S1(m,l) B_(j+l)",
                         [](const Params& p) {
                             return sum(0, p.n, [&](long j) {
                                 return sum(0, p.m, [&](long l) { return stirling1(p.n, j) * stirling1(p.m, l) * bernoulli(j + l); });
                             });
                         }},
                        {"sum C(m,k) C(n,k) k! sum S1(m+n-k,l) B_l",
                         [](const Params& p) {
                             return sum(0, p.m, [&](long k) {
                                 const long d = p.m + p.n - k;
                                 return C(p.m, k) * C(p.n, k) * fac(k) * sum(0, d, [&](long l) { return stirling1(d, l) * bernoulli(l); });
                             });
                         }}},
                       grid,
                       "the Daehee form needs k! and no sign, since D_j already carries (-1)^j; "
                       "the Stirling double sum binds S1(n,j) to the summation index j",
                       {{"int x_(m) x_(n) dmu_1 = sum (-1)^(m+n-k) C(m,k) C(n,k) Y1(m+n-k:B)",
                         lhs,
                         [](const Params& p) {
                             return sum(0, p.m, [&](long k) { return sgn(p.m + p.n - k) * C(p.m, k) * C(p.n, k) * daehee(p.m + p.n - k); });
                         },
                         Params{.n = 1, .m = 1},
                         R(1, 6),
                         R(7, 6)}}),
             verified("connection coefficients at integer points",
                      {{"x_(m) x_(n)", [](const Params& p) { return ff(p.x, p.m) * ff(p.x, p.n); }},
                       {"sum C(m,k) C(n,k) k! x_(m+n-k)",
                        [](const Params& p) {
                            return sum(0, p.m, [&](long k) { return C(p.m, k) * C(p.n, k) * fac(k) * ff(p.x, p.m + p.n - k); });
                        }}},
                      dom({range(PN::n, 0, 6), range(PN::m, 0, 6), x_points()}))}};
}

R idd4_sum(long n) { return sum(0, n, [&](long m) { return sgn(m) * C(n - 1, n - m) * fac(n) / R(m + 1); }); }
R idd3_sum(long n) { return sum(0, n + 1, [&](long m) { return sgn(m + n) * stirling1(n, m) * bernoulli(m); }); }

IdentityRecord i24() {
    const auto y2 = [](const Params& p) { return V(rising_poly(p.n)); };
    return {"I24",
            "Volkenborn integrals of (x+n-1)_(n) and (-x)_(n)",
            {verified("IDD-3 Stirling form",
                      {{"V((x+n-1)_(n))", [](const Params& p) { return V(falling_poly(p.n).shift(p.n - 1)); }},
                       {"sum (-1)^(m+n) S1(n,m) B_m", [](const Params& p) { return idd3_sum(p.n); }}},
                      n_dom(0)),
             verified("int (-x)_(n)",
                      {{"V((-x)_(n))", [](const Params& p) { return V(falling_poly(p.n).scale_argument(-1)); }},
                       {"sum (-1)^m S1(n,m) B_m", [](const Params& p) { return sum(0, p.n + 1, [&](long m) { return sgn(m) * stirling1(p.n, m) * bernoulli(m); }); }}},
                      n_dom(0)),
             verified("int C(x+n-1,n)",
                      {{"V(C(x+n-1,n))", [](const Params& p) { return V(binomial_poly(p.n, 1, p.n - 1)); }},
                       {"sum (-1)^m C(n-1,n-m)/(m+1)", [](const Params& p) { return sum(0, p.n, [&](long m) { return sgn(m) * C(p.n - 1, p.n - m) / R(m + 1); }); }}},
                      n_dom(1)),
             verified("IDD-4 binomial form",
                      {{"V((x+n-1)_(n))", [](const Params& p) { return V(falling_poly(p.n).shift(p.n - 1)); }},
                       {"sum (-1)^m C(n-1,n-m) n!/(m+1)", [](const Params& p) { return idd4_sum(p.n); }}},
                      n_dom(1)),
             corrected("Y2(n:B) binomial formula",
                       {{"V(x^(n))", y2}, {"n! sum (-1)^m C(n-1,n-m)/(m+1)", [](const Params& p) { return idd4_sum(p.n); }}},
                       n_dom(1),
                       "the factor is n!, not 1/n!",
                       {{"Y2(n:B) = (1/n!) sum (-1)^m C(n-1,n-m)/(m+1)",
                         y2,
                         [](const Params& p) { return idd4_sum(p.n) / fac(p.n).pow(2); },
                         Params{.n = 2},
                         R(-1, 3),
                         R(-1, 12)}}),
             corrected("IDD-3 against IDD-4",
                       {{"sum (-1)^m C(n-1,n-m) n!/(m+1)", [](const Params& p) { return idd4_sum(p.n); }},
                        {"sum (-1)^(m+n) S1(n,m) B_m", [](const Params& p) { return idd3_sum(p.n); }}},
                       n_dom(1),
                       "the Stirling side needs the sign (-1)^(m+n), as in IDD-3",
                       {{"sum (-1)^m C(n-1,n-m) n!/(m+1) = sum (-1)^m S1(n,m) B_m",
                         [](const Params& p) { return idd4_sum(p.n); },
                         [](const Params& p) { return sum(0, p.n + 1, [&](long m) { return sgn(m) * stirling1(p.n, m) * bernoulli(m); }); },
                         Params{.n = 1},
                         R(-1, 2),
                         R(1, 2)}})}};
}

IdentityRecord i25() {
    const auto y2 = [](const Params& p) { return V(rising_poly(p.n)); };
    return {"I25",
            "Y2(n:B) from Y1(k:B) through unsigned Lah numbers",
            {corrected("Y2 = sum |L(n,k)| Y1(k:B)",
                       {{"V(x^(n))", y2}, {"sum |L(n,k)| D_k", [](const Params& p) { return sum(0, p.n, [&](long k) { return lah_unsigned(p.n, k) * daehee(k); }); }}},
                       n_dom(0),
                       "the summation index is k, shared by L(n,k) and Y1(k:B)",
                       {{"Y2(n:B) = sum_m |L(n,k)| Y1(m:B) with k read as n",
                         y2,
                         [](const Params& p) { return sum(0, p.n, [&](long m) { return lah_unsigned(p.n, p.n) * daehee(m); }); },
                         Params{.n = 1},
                         R(-1, 2),
                         R(1, 2)}})}};
}

R fer_osgood(long k, bool with_factorials) {
    return sum(1, k, [&](long l) {
        return sum(1, k, [&](long m) {
            R w = sgn(l + m) * half_pow(l + m) * osgood_wu(k, l, m);
            return with_factorials ? w * fac(l) * fac(m) : w;
        });
    });
}

IdentityRecord i26() {
    const Domain tensor = dom({range(PN::k, 1, 8)});
    const auto idd1 = [](const Params& p) { return F(falling_poly(p.n + 1).divide_by_x()); };
    return {
        "I26",
        "Fermionic analogues for the sequence y1(n:E)",
        {verified("int (x+1)_(n) dmu_-1",
                  {{"F((x+1)_(n))", [](const Params& p) { return F(falling_poly(p.n).shift(1)); }},
                   {"(-1)^(n+1) n!/2^n", [](const Params& p) { return sgn(p.n + 1) * fac(p.n) * half_pow(p.n); }},
                   {"Ch_n + n Ch_(n-1)", [](const Params& p) { return changhee(p.n) + R(p.n) * changhee(p.n - 1); }}},
                  n_dom(1)),
         verified("int C(x+1,n) dmu_-1",
                  {{"F(C(x+1,n))", [](const Params& p) { return F(binomial_poly(p.n, 1, 1)); }},
                   {"(-1)^(n+1)/2^n", [](const Params& p) { return sgn(p.n + 1) * half_pow(p.n); }}},
                  n_dom(1)),
         verified("int x_(n+1)/x dmu_-1",
                  {{"F(x_(n+1)/x)", idd1},
                   {"(-1)^n sum n_(n-k) k!/2^k",
                    [](const Params& p) { return sgn(p.n) * sum(0, p.n, [&](long k) { return ff(p.n, p.n - k) * fac(k) * half_pow(k); }); }}},
                  n_dom(0)),
         corrected("y1 recurrence",
                   {{"Ch_(n+1) + n Ch_n", [](const Params& p) { return changhee(p.n + 1) + R(p.n) * changhee(p.n); }},
                    {"(-1)^n n!(n-1)/2^(n+1)", [](const Params& p) { return sgn(p.n) * fac(p.n) * R(p.n - 1) * half_pow(p.n + 1); }},
                    {"F(x x_(n))", [](const Params& p) { return F(X * falling_poly(p.n)); }}},
                   n_dom(0),
                   "the closed form is the fermionic integral of x x_(n); the intermediate step names mu_1",
                   {{"int x x_(n) dmu_1 = (-1)^n n!(n-1)/2^(n+1)",
                     [](const Params& p) { return V(X * falling_poly(p.n)); },
                     [](const Params& p) { return sgn(p.n) * fac(p.n) * R(p.n - 1) * half_pow(p.n + 1); },
                     Params{.n = 1},
                     R(1, 6),
                     R(0)}}),
         corrected("Osgood-Wu form, fermionic",
                   {fer_double_product(),
                    {"sum (-1)^(l+m) l! m! 2^(-l-m) C(k;l,m)", [](const Params& p) { return fer_osgood(p.k, true); }},
                    {"sum Ch_l Ch_m C(k;l,m)",
                     [](const Params& p) {
                         return sum(1, p.k, [&](long l) { return sum(1, p.k, [&](long m) { return changhee(l) * changhee(m) * osgood_wu(p.k, l, m); }); });
                     }}},
                   tensor,
                   "each x_(l) integrates to l!(-1)^l 2^(-l), so the factorials l! m! belong in the sum",
                   {{"sum (-1)^(l+m) 2^(-l-m) C(k;l,m)", fer_double_product().eval, [](const Params& p) { return fer_osgood(p.k, false); },
                     Params{.k = 2}, R(-1, 4), R(-3, 16)}}),
         corrected("Stirling form, fermionic",
                   {fer_double_product(),
                    {"sum_m S1(k,m) E_m^2", [](const Params& p) { return sum(0, p.k, [&](long m) { return stirling1(p.k, m) * euler(m).pow(2); }); }}},
                   tensor,
                   "the squared Euler number carries the summation index m",
                   {{"sum_m S1(k,m) (E_l)^2 with l read as k",
                     fer_double_product().eval,
                     [](const Params& p) { return sum(0, p.k, [&](long m) { return stirling1(p.k, m) * euler(p.k).pow(2); }); },
                     Params{.k = 2},
                     R(-1, 4),
                     R(0)}}),
         corrected("Gould (2.15), fermionic",
                   {{"F(x C(x-2,n-1) + x(x-1) C(x-3,n-2))", [](const Params& p) { return F(gould_215(p.n)); }},
                    {"(-1)^n sum k^2/2^k", [](const Params& p) { return sgn(p.n) * sum(0, p.n, [](long k) { return R(k * k) * half_pow(k); }); }}},
                   n_dom(2),
                   "the second binomial is C(x-3,n-2)",
                   {{"int x C(x-2,n-1) + x(x-1) C(n-3,n-2) dmu_-1 = (-1)^n sum k^2/2^k",
                     [](const Params& p) { return F(gould_215_literal(p.n)); },
                     [](const Params& p) { return sgn(p.n) * sum(0, p.n, [](long k) { return R(k * k) * half_pow(k); }); },
                     Params{.n = 3},
                     R(-11, 8),
                     R(-21, 8)}}),
         verified("int C(x+n,n) dmu_-1",
                  {{"F(C(x+n,n))", [](const Params& p) { return F(binomial_poly(p.n, 1, p.n)); }},
                   {"sum (-1)^k 2^(-k) sum (-1)^j C(k,j) C(k-j+n,n)",
                    [](const Params& p) { return mahler_sum(p.n, [&](long d) { return gould_264_coeff(p.n, d); }, fer_weight); }},
                   {"sum E_k sum C(n,j) S1(j,k)/j!", [](const Params& p) { return sum(0, p.n, [&](long k) { return euler(k) * gould_617(p.n, k); }); }},
                   {"sum (-1)^(j+k) C(k,j) C(k-j+n,n)/2^k",
                    [](const Params& p) {
                        return sum(0, p.n, [&](long k) {
                            return sum(0, k, [&](long j) { return sgn(j + k) * C(k, j) * C(k - j + p.n, p.n) * half_pow(k); });
                        });
                    }}},
                  n_dom(0)),
         verified("int C(mx,n) dmu_-1",
                  {{"F(C(mx,n))", [](const Params& p) { return F(binomial_poly(p.n, p.m, 0)); }},
                   {"sum (-1)^k 2^(-k) sum (-1)^j C(k,j) C(mk-mj,n)",
                    [](const Params& p) { return mahler_sum(p.n, [&](long d) { return C(p.m * d, p.n); }, fer_weight); }}},
                  dom({n_range(0, 12), range(PN::m, 0, 6)})),
         verified("int C(x,n)^r dmu_-1",
                  {{"F(C(x,n)^r)", [](const Params& p) { return F(binomial_power(p.n, p.r)); }},
                   {"sum_(k<=nr) (-1)^k 2^(-k) sum (-1)^j C(k,j) C(k-j,n)^r",
                    [](const Params& p) { return mahler_sum(p.n * p.r, [&](long d) { return C(d, p.n).pow(p.r); }, fer_weight); }}},
                  dom({n_range(0), range(PN::r, 1, 3)})),
         verified("Gould (4.20), fermionic",
                  {{"F(x C(x-2,n-1))", [](const Params& p) { return F(X * binomial_poly(p.n - 1, 1, -2)); }},
                   {"(-1)^n sum k 2^(-k)", [](const Params& p) { return sgn(p.n) * sum(1, p.n, [](long k) { return R(k) * half_pow(k); }); }}},
                  n_dom(1)),
         corrected("Gould (4.19), fermionic",
                   {{"F(C(n-x,n))", [](const Params& p) { return F(binomial_poly(p.n, -1, p.n)); }},
                    {"sum_(k=0..n) 2^(-k)", [](const Params& p) { return sum(0, p.n, [](long k) { return half_pow(k); }); }}},
                   n_dom(0),
                   "no sign (-1)^n and the sum starts at k = 0",
                   {{"int C(n-x,n) dmu_-1 = (-1)^n sum_(k=1..n) 2^(-k)",
                     [](const Params& p) { return F(binomial_poly(p.n, -1, p.n)); },
                     [](const Params& p) { return sgn(p.n) * sum(1, p.n, [](long k) { return half_pow(k); }); },
                     Params{.n = 1},
                     R(3, 2),
                     R(-1, 2)}}),
         verified("Gould (6.26), fermionic",
                  {{"F(C(x+n+1/2,n))", [](const Params& p) { return F(binomial_poly(p.n, 1, R(2 * p.n + 1, 2))); }},
                   {"(2n+1) C(2n,n) sum (-1)^k C(n,k) 2^(k-2n)/((2k+1)C(2k,k))",
                    [](const Params& p) {
                        return R(2 * p.n + 1) * C(2 * p.n, p.n) *
                               sum(0, p.n, [&](long k) { return sgn(k) * half_pow(2 * p.n - k) * gould_626_term(p.n, k); });
                    }}},
                  n_dom(0, 12))}};
}

IdentityRecord i27() {
    return {"I27",
            "y2(n:E), the fermionic integral of the rising factorial",
            {verified("y2(n:E) eight ways",
                      {{"changhee_hat(n)", [](const Params& p) { return changhee_hat(p.n); }},
                       {"F(x^(n))", [](const Params& p) { return F(rising_poly(p.n)); }},
                       {"sum (-1)^k |L(n,k)| k! 2^(-k)",
                        [](const Params& p) { return sum(1, p.n, [&](long k) { return sgn(k) * lah_unsigned(p.n, k) * fac(k) * half_pow(k); }); }},
                       {"sum |S1(n,k)| E_k", [](const Params& p) { return sum(1, p.n, [&](long k) { return stirling1_unsigned(p.n, k) * euler(k); }); }},
                       {"sum |L(n,k)| S1(k,j) E_j",
                        [](const Params& p) {
                            return sum(0, p.n, [&](long k) {
                                return lah_unsigned(p.n, k) * sum(0, k, [&](long j) { return stirling1(k, j) * euler(j); });
                            });
                        }},
                       {"n! sum (-1)^m C(n-1,n-m) 2^(-m)",
                        [](const Params& p) { return fac(p.n) * sum(0, p.n, [&](long m) { return sgn(m) * C(p.n - 1, p.n - m) * half_pow(m); }); }},
                       {"sum (-1)^(m+n) S1(n,m) E_m",
                        [](const Params& p) { return sum(0, p.n + 1, [&](long m) { return sgn(m + p.n) * stirling1(p.n, m) * euler(m); }); }},
                       {"F((x+n-1)_(n))", [](const Params& p) { return F(falling_poly(p.n).shift(p.n - 1)); }}},
                      n_dom(1))}};
}

template <class W>
R eulerian_reconstruction(long n, W weight, bool literal) {
    const R total = sum(0, n, [&](long k) {
        return eulerian(n, k) * sum(0, n, [&](long j) {
                   return stirling1(n, j) *
                          sum(0, j, [&](long l) { return (literal ? C(j, j) : C(j, l)) * pw(n - k, j - l) * weight(l); });
               });
    });
    return total / fac(n);
}

IdentityRecord i28() {
    return {"I28",
            "Bernoulli and Euler numbers through Eulerian numbers",
            {corrected("Bernoulli form",
                       {{"B_n", [](const Params& p) { return bernoulli(p.n); }},
                        {"(1/n!) sum A(n,k) sum S1(n,j) sum C(j,l) (n-k)^(j-l) B_l",
                         [](const Params& p) { return eulerian_reconstruction(p.n, bernoulli, false); }}},
                       n_dom(0, 12),
                       "the inner binomial is C(j,l) from expanding (x+n-k)^j",
                       {{"binomial C(j,j) in the Bernoulli form",
                         [](const Params& p) { return bernoulli(p.n); },
                         [](const Params& p) { return eulerian_reconstruction(p.n, bernoulli, true); },
                         Params{.n = 2},
                         R(1, 6),
                         R(5, 12)}}),
             corrected("Euler form",
                       {{"E_n", [](const Params& p) { return euler(p.n); }},
                        {"(1/n!) sum A(n,k) sum S1(n,j) sum C(j,l) (n-k)^(j-l) E_l",
                         [](const Params& p) { return eulerian_reconstruction(p.n, euler, false); }}},
                       n_dom(0, 12),
                       "the inner binomial is C(j,l)",
                       {{"binomial C(j,j) in the Euler form",
                         [](const Params& p) { return euler(p.n); },
                         [](const Params& p) { return eulerian_reconstruction(p.n, euler, true); },
                         Params{.n = 2},
                         R(0),
                         R(1, 4)}}),
             verified("Worpitzky identity at integer points",
                      {{"x^n", [](const Params& p) { return pw(p.x, p.n); }},
                       {"sum A(n,k) C(x+n-k,n)", [](const Params& p) { return sum(0, p.n, [&](long k) { return eulerian(p.n, k) * C(p.x + p.n - k, p.n); }); }}},
                      dom({n_range(0, 12), x_points()}))}};
}

R gl1_coeff(long n, long j) {
    return sum(0, j, [&](long k) { return sgn(j + k) * C(n + 1, j - k) * pw(k, n); });
}

template <class W>
R gould41_amended(long n, W weight) {
    return sum(0, n, [&](long j) { return gl1_coeff(n, j) * sum(0, n, [&](long i) { return C(j - 1, n - i) * sgn(i) * weight(i); }); });
}

template <class W>
R gould41_literal(long n, W weight) {
    return sum(0, n, [&](long j) {
        return fac(j) / fac(n) * sum(0, j, [&](long m) {
                   return sum(0, j, [&](long k) { return sgn(j + k + m) * C(j - 1, j - m) * C(n + 1, j - k) * pw(k, n) * weight(m); });
               });
    });
}

R inv_succ(long i) { return R(1, i + 1); }

IdentityRecord i29() {
    return {"I29",
            "Bernoulli and Euler numbers from Gould (4.1)",
            {corrected("Bernoulli form",
                       {{"B_n", [](const Params& p) { return bernoulli(p.n); }},
                        {"sum_j sum_k (-1)^(j+k) C(n+1,j-k) k^n sum_i C(j-1,n-i) (-1)^i/(i+1)",
                         [](const Params& p) { return gould41_amended(p.n, inv_succ); }}},
                       n_dom(0, 12),
                       "C(x+j-1,n) integrates to sum_i C(j-1,n-i)(-1)^i/(i+1); the printed form integrates C(x+j-1,j) instead",
                       {{"B_n = sum (j!/n!) sum (-1)^(j+k+m) C(j-1,j-m) C(n+1,j-k) k^n/(m+1)",
                         [](const Params& p) { return bernoulli(p.n); },
                         [](const Params& p) { return gould41_literal(p.n, inv_succ); },
                         Params{.n = 2},
                         R(1, 6),
                         R(-5, 12)}}),
             corrected("Euler form",
                       {{"E_n", [](const Params& p) { return euler(p.n); }},
                        {"sum_j sum_k (-1)^(j+k) C(n+1,j-k) k^n sum_i C(j-1,n-i) (-1)^i 2^(-i)",
                         [](const Params& p) { return gould41_amended(p.n, half_pow); }}},
                       n_dom(0, 12),
                       "same correction with 2^(-i) in place of 1/(i+1)",
                       {{"E_n = sum (j!/n!) sum (-1)^(j+k+m) C(j-1,j-m) C(n+1,j-k) k^n/2^m",
                         [](const Params& p) { return euler(p.n); },
                         [](const Params& p) { return gould41_literal(p.n, half_pow); },
                         Params{.n = 2},
                         R(0),
                         R(-1, 2)}}),
             verified("Gould (4.1) at integer points",
                      {{"x^n", [](const Params& p) { return pw(p.x, p.n); }},
                       {"sum C(x+j-1,n) sum (-1)^(j+k) C(n+1,j-k) k^n",
                        [](const Params& p) { return sum(0, p.n, [&](long j) { return C(p.x + j - 1, p.n) * gl1_coeff(p.n, j); }); }}},
                      dom({n_range(0, 12), x_points()}))}};
}

R fubini_lah_rhs(long n, long k) {
    return sum(0, n, [&](long m) { return C(n, m) * stirling2(n - m, k) * fubini_order(m, k); });
}

IdentityRecord i30() {
    const Domain grid = dom({n_range(0, 12), range(PN::k, 1, 8)});
    return {"I30",
            "Stirling-Lah sums through Fubini numbers of order k",
            {corrected("sum S2(n,m) |L(m,k)|",
                       {{"sum S2(n,m) |L(m,k)|", [](const Params& p) { return sum(0, p.n, [&](long m) { return stirling2(p.n, m) * lah_unsigned(m, p.k); }); }},
                        {"sum C(n,m) S2(n-m,k) w^(k)(m)", [](const Params& p) { return fubini_lah_rhs(p.n, p.k); }}},
                       grid,
                       "the Lah number is |L(m,k)| inside the sum over m",
                       {{"sum_m S2(n,m) L(n,k) = sum C(n,m) S2(n-m,k) w^(k)(m)",
                         [](const Params& p) { return sum(0, p.n, [&](long m) { return stirling2(p.n, m) * lah(p.n, p.k); }); },
                         [](const Params& p) { return fubini_lah_rhs(p.n, p.k); },
                         Params{.n = 1, .k = 1},
                         R(-1),
                         R(1)}}),
             verified("functional equation",
                      {{"n! [t^n] F_L(e^t - 1, k)",
                        [](const Params& p) {
                            const long order = p.n + 1;
                            const PowerSeries u = PowerSeries::variable(order);
                            const PowerSeries lah_gf =
                                (u * (PowerSeries::constant(1, order) - u).inverse()).pow(p.k) * fac(p.k).inverse();
                            return lah_gf.compose(PowerSeries::exp(order) - PowerSeries::constant(1, order)).egf_coeff(p.n);
                        }},
                       {"n! [t^n] F_S(t,k) F_Fu(t,k)",
                        [](const Params& p) {
                            const long order = p.n + 1;
                            const PowerSeries e = PowerSeries::exp(order);
                            const PowerSeries stirling_gf = (e - PowerSeries::constant(1, order)).pow(p.k) * fac(p.k).inverse();
                            const PowerSeries fubini_gf = (PowerSeries::constant(2, order) - e).pow(-p.k);
                            return (stirling_gf * fubini_gf).egf_coeff(p.n);
                        }},
                       {"sum C(n,m) S2(n-m,k) w^(k)(m)", [](const Params& p) { return fubini_lah_rhs(p.n, p.k); }}},
                      grid)}};
}

R roman_sum(long n) { return sum(0, n, [&](long k) { return ff(n, n - k) * fac(k) / R(k * k + 3 * k + 2); }); }

IdentityRecord i31() {
    return {"I31",
            "A falling-factorial sum from the Roman identity",
            {corrected("sum n_(n-k) k!/(k^2+3k+2)",
                       {{"sum n_(n-k) k!/(k^2+3k+2)", [](const Params& p) { return roman_sum(p.n); }},
                        {"(n+1)!/(n+2)", [](const Params& p) { return fac(p.n + 1) / R(p.n + 2); }},
                        {"(-1)^(n+1) V(x_(n+1))", [](const Params& p) { return sgn(p.n + 1) * V(falling_poly(p.n + 1)); }}},
                       n_dom(0),
                       "the sum equals (-1)^(n+1) D_(n+1) = (n+1)!/(n+2)",
                       {{"sum n_(n-k) k!/(k^2+3k+2) = (n-1)!/(n+1)",
                         [](const Params& p) { return roman_sum(p.n); },
                         [](const Params& p) { return fac(p.n - 1) / R(p.n + 1); },
                         Params{.n = 1},
                         R(2, 3),
                         R(1, 2)}})}};
}

template <class T>
R s12_sum(long n, T term) {
    return sum(0, n, [&](long j) { return sum(0, n - j, [&](long k) { return C(n, j) * assoc_stirling1(n - j, k) * term(j + k); }); });
}

R s22_relation(long n, long k, bool literal) {
    return sum(0, k, [&](long j) { return (literal ? C(k, j) : C(n, j)) * assoc_stirling2(n - j, k - j); });
}

IdentityRecord i32() {
    const Domain triangle = dom({n_range(0, 12), range(PN::k, 0, 12)});
    return {"I32",
            "Associated Stirling numbers",
            {verified("Bernoulli form",
                      {{"sum C(n,j) S12(n-j,k) B_(k+j)", [](const Params& p) { return s12_sum(p.n, bernoulli); }},
                       {"(-1)^n n!/(n+1)", [](const Params& p) { return sgn(p.n) * fac(p.n) / R(p.n + 1); }},
                       {"sum S1(n,j) B_j", [](const Params& p) { return sum(0, p.n, [&](long j) { return stirling1(p.n, j) * bernoulli(j); }); }}},
                      n_dom(0)),
             verified("Euler form",
                      {{"sum C(n,j) S12(n-j,k) E_(k+j)", [](const Params& p) { return s12_sum(p.n, euler); }},
                       {"(-1)^n n!/2^n", [](const Params& p) { return sgn(p.n) * fac(p.n) * half_pow(p.n); }}},
                      n_dom(0)),
             verified("Cauchy numbers",
                      {{"b_n(0)", [](const Params& p) { return cauchy(p.n); }},
                       {"sum C(n,j) S12(n-j,k)/(j+k+1)", [](const Params& p) { return s12_sum(p.n, inv_succ); }}},
                      n_dom(0)),
             verified("S1 from S12",
                      {{"S1(n,k)", [](const Params& p) { return stirling1(p.n, p.k); }},
                       {"sum C(n,j) S12(n-j,k-j)",
                        [](const Params& p) { return sum(0, p.k, [&](long j) { return C(p.n, j) * assoc_stirling1(p.n - j, p.k - j); }); }}},
                      triangle),
             corrected("S2 from S22",
                       {{"S2(n,k)", [](const Params& p) { return stirling2(p.n, p.k); }},
                        {"sum C(n,j) S22(n-j,k-j)", [](const Params& p) { return s22_relation(p.n, p.k, false); }}},
                       triangle,
                       "the binomial is C(n,j), choosing the singleton blocks",
                       {{"S2(n,k) = sum C(k,j) S22(n-j,k-j)",
                         [](const Params& p) { return stirling2(p.n, p.k); },
                         [](const Params& p) { return s22_relation(p.n, p.k, true); },
                         Params{.n = 3, .k = 2},
                         R(3),
                         R(2)}})}};
}

IdentityRecord i33() {
    return {"I33",
            "Stirling sums for Cauchy, Daehee and Changhee numbers",
            {verified("Cauchy numbers",
                      {{"b_n(0)", [](const Params& p) { return cauchy(p.n); }},
                       {"sum S1(n,k)/(k+1)", [](const Params& p) { return sum(0, p.n, [&](long k) { return stirling1(p.n, k) / R(k + 1); }); }},
                       {"int_0^1 x_(n) dx", [](const Params& p) { return falling_poly(p.n).integrate(0, 1); }}},
                      n_dom(0)),
             verified("Daehee numbers",
                      {{"sum S1(n,k) B_k", [](const Params& p) { return sum(0, p.n, [&](long k) { return stirling1(p.n, k) * bernoulli(k); }); }},
                       {"(-1)^n n!/(n+1)", [](const Params& p) { return sgn(p.n) * fac(p.n) / R(p.n + 1); }}},
                      n_dom(0)),
             verified("Changhee numbers",
                      {{"sum S1(n,k) E_k", [](const Params& p) { return sum(0, p.n, [&](long k) { return stirling1(p.n, k) * euler(k); }); }},
                       {"(-1)^n n!/2^n", [](const Params& p) { return sgn(p.n) * fac(p.n) * half_pow(p.n); }},
                       {"F(x_(n))", [](const Params& p) { return F(falling_poly(p.n)); }}},
                      n_dom(0)),
             verified("C(x,n) in powers of x at integer points",
                      {{"C(x,n)", [](const Params& p) { return C(p.x, p.n); }},
                       {"sum S1(n,k) x^k/n!", [](const Params& p) { return sum(0, p.n, [&](long k) { return stirling1(p.n, k) * pw(p.x, k); }) / fac(p.n); }}},
                      dom({n_range(0, 12), x_points()}))}};
}

R daehee_stirling2(long n, long top) {
    return sum(0, top, [&](long k) { return sgn(k) * fac(k) / R(k + 1) * stirling2(n, k); });
}

IdentityRecord i34() {
    return {"I34",
            "Bernoulli numbers from Stirling numbers of the second kind",
            {corrected("B_n = sum (-1)^k k!/(k+1) S2(n,k)",
                       {{"B_n", [](const Params& p) { return bernoulli(p.n); }},
                        {"sum_(k<=n) (-1)^k k!/(k+1) S2(n,k)", [](const Params& p) { return daehee_stirling2(p.n, p.n); }},
                        {"sum_(k<=n) D_k S2(n,k)", [](const Params& p) { return sum(0, p.n, [&](long k) { return daehee(k) * stirling2(p.n, k); }); }}},
                       n_dom(1),
                       "the sum runs to k = n; the term k = n never vanishes",
                       {{"B_n = sum_(k<=n-1) (-1)^k k!/(k+1) S2(n,k)",
                         [](const Params& p) { return bernoulli(p.n); },
                         [](const Params& p) { return daehee_stirling2(p.n, p.n - 1); },
                         Params{.n = 1},
                         R(-1, 2),
                         R(0)}}),
             verified("integral form",
                      {{"B_n", [](const Params& p) { return bernoulli(p.n); }},
                       {"sum S2(n,k) (V(x x_(k-1)) - (k-1) V(x_(k-1)))",
                        [](const Params& p) {
                            return sum(1, p.n, [&](long k) {
                                return stirling2(p.n, k) * (V(X * falling_poly(k - 1)) - R(k - 1) * V(falling_poly(k - 1)));
                            });
                        }}},
                      n_dom(1))}};
}

IdentityRecord i35() {
    return {"I35",
            "Bernoulli numbers from a Stirling double sum",
            {verified("S2/S1 double sum",
                      {{"B_n", [](const Params& p) { return bernoulli(p.n); }},
                       {"sum S2(n,k) sum_(j<k) S1(k,j) B_j + sum S2(n,k) B_k",
                        [](const Params& p) {
                            return sum(0, p.n, [&](long k) {
                                return stirling2(p.n, k) * (sum(0, k - 1, [&](long j) { return stirling1(k, j) * bernoulli(j); }) + bernoulli(k));
                            });
                        }}},
                      n_dom(0))}};
}

std::vector<IdentityRecord> build() {
    return {i01(), i02(), i03(), i04(), i05(), i06(), i07(), i08(), i09(), i10(), i11(), i12(),
            i13(), i14(), i15(), i16(), i17(), i18(), i19(), i20(), i21(), i22(), i23(), i24(),
            i25(), i26(), i27(), i28(), i29(), i30(), i31(), i32(), i33(), i34(), i35()};
}

}  // namespace

const std::vector<IdentityRecord>& catalog() {
    static const std::vector<IdentityRecord> records = build();
    return records;
}

}  // namespace volkenborn
