#pragma once

#include <optional>
#include <string>
#include <vector>

#include "volkenborn/bivariate.hpp"
#include "volkenborn/polynomial.hpp"
#include "volkenborn/rational.hpp"

namespace volkenborn {

enum class MeasureKind { bosonic, fermionic, q_weighted };

struct Measure {
    MeasureKind kind = MeasureKind::bosonic;
    Rational q{1};

    static Measure bosonic() { return {MeasureKind::bosonic, Rational(1)}; }
    static Measure fermionic() { return {MeasureKind::fermionic, Rational(-1)}; }
    static Measure q_weighted(const Rational& q) { return {MeasureKind::q_weighted, q}; }

    /// "bosonic", "fermionic" or "q=<q>".
    std::string name() const;
};

/// sum_i c_i B_i.
Rational volkenborn_exact(const Polynomial& f);
/// sum_i c_i E_i.
Rational fermionic_exact(const Polynomial& f);
/// Dispatches on kind; q-weighted has no exact evaluator and throws.
Rational exact_integral(const Polynomial& f, MeasureKind kind);

/// Values of the integral on x^0 .. x^max_degree.
std::vector<Rational> witt_moments(MeasureKind kind, long max_degree);

/// Iterated exact integral of f(x, y): kx acts on x and ky on y.
Rational double_integral(const Bivariate& f, MeasureKind kx, MeasureKind ky);

/// sum_{x=0}^{m-1} x^n, from Bernoulli polynomials.
Rational power_sum(long n, const Integer& m);
/// sum_{x=0}^{m-1} (-1)^x x^n, from Euler polynomials.
Rational alternating_power_sum(long n, const Integer& m);

/// Largest p^N the q-weighted level sum will loop over.
inline constexpr long kQLevelGuard = 1000000;

/// Level-N Riemann sum. Bosonic and fermionic sums use the closed-form power
/// sums; the q-weighted sum is a direct loop over p^N points.
Rational level_integral(const Polynomial& f, const Measure& measure, long p, long N);

/// Direct q-weighted sum sum_{x<p^N} f(x) q^x / [p^N]_q. The parallel kernel
/// splits the range across OpenMP threads; both return identical values.
Rational q_level_serial(const Polynomial& f, const Rational& q, long p, long N);
Rational q_level_parallel(const Polynomial& f, const Rational& q, long p, long N);

struct ConvergenceRow {
    long N = 0;
    Rational value;
    /// False on the first q-weighted row, which has nothing to compare with.
    bool has_error = true;
    /// nu_p of the error; nullopt means the error is exactly zero.
    std::optional<long> err_valuation;
};

/// Level values for N = 1..N_max. Bosonic and fermionic errors are measured
/// against the exact integral. The q-weighted measure has no exact rational
/// target, so its error column is nu_p(level_N - level_{N-1}).
struct ConvergenceReport {
    Measure measure;
    Polynomial polynomial;
    long prime = 0;
    std::vector<ConvergenceRow> rows;

    std::string to_csv() const;
    std::string to_json() const;
    std::string to_table() const;
};

ConvergenceReport convergence_report(const Polynomial& f, const Measure& measure, long p, long N_max);

/// Checks int f(x+m) dmu_1 = int f dmu_1 + sum_{k<m} f'(k).
bool check_shift_equation(const Polynomial& f, long m);
/// Checks int f(x+n) dmu_-1 + (-1)^{n+1} int f dmu_-1 = 2 sum_{j<n} (-1)^{n-1-j} f(j).
bool check_fermionic_shift(const Polynomial& f, long n);

}  // namespace volkenborn
