#pragma once

#include <functional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "volkenborn/polynomial.hpp"
#include "volkenborn/rational.hpp"

namespace volkenborn {

/// Lazily grown table of rows. Row n is produced once from the rows before it
/// and never changes afterwards. Readers share the lock; growth takes it
/// exclusively, so concurrent queries are safe.
class TriangularTable {
public:
    using RowFn = std::function<std::vector<Rational>(long n, const std::vector<std::vector<Rational>>& earlier)>;

    TriangularTable(std::string name, RowFn make_row);

    const std::string& name() const { return name_; }
    /// Entry (n, k); zero when k falls outside the stored row.
    Rational at(long n, long k) const;
    std::vector<Rational> row(long n) const;
    /// Drops every memoized row.
    void clear();
    long rows_cached() const;

private:
    void ensure(long n) const;

    std::string name_;
    RowFn make_row_;
    mutable std::shared_mutex mutex_;
    mutable std::vector<std::vector<Rational>> rows_;
};

/// Empties the memo tables of every family.
void clear_caches();

Rational bernoulli(long n);
Polynomial bernoulli_poly(long n);
Rational euler(long n);
Polynomial euler_poly(long n);
/// E*_n = 2^n E_n(1/2).
Rational euler_second(long n);

/// Coefficients of t/(lambda e^t - 1); lambda = 1 is rejected.
Rational apostol_bernoulli(long n, const Rational& lambda);
/// Coefficients of 2/(lambda e^t + 1); lambda = -1 is rejected.
Rational apostol_euler(long n, const Rational& lambda);
/// Coefficients of (1 - u)/(e^t - u); u = 1 is rejected.
Rational frobenius_euler(long n, const Rational& u);

/// Signed, so that x_(n) = sum_k S1(n,k) x^k.
Rational stirling1(long n, long k);
Rational stirling1_unsigned(long n, long k);
Rational stirling2(long n, long k);
/// n! [t^n] (lambda e^t - 1)^k / k!.
Rational stirling2_lambda(long n, long k, const Rational& lambda);
/// n! [t^n] (lambda e^t - 1)^v / v! * e^{tx}, as a polynomial in x.
Polynomial array_poly(long n, long v, const Rational& lambda);
/// n! [t^n] (log(1+t) - t)^k / k!.
Rational assoc_stirling1(long n, long k);
/// n! [t^n] (e^t - 1 - t)^k / k!.
Rational assoc_stirling2(long n, long k);

/// L(n,k) = (-1)^n n!/k! C(n-1,k-1), with L(n,0) = L(0,n) = [n = 0].
Rational lah(long n, long k);
Rational lah_unsigned(long n, long k);

/// (-1)^n n!/(n+1).
Rational daehee(long n);
/// Daehee numbers of the second kind.
Rational daehee_hat(long n);
/// sum_k S1(n,k) B_k(x).
Polynomial daehee_poly(long n);
/// sum_k |S1(n,k)| B_k(x).
Polynomial daehee_hat_poly(long n);
/// (-1)^n n!/2^n.
Rational changhee(long n);
Rational changhee_hat(long n);
/// sum_k S1(n,k) E_k(x).
Polynomial changhee_poly(long n);

/// Ordered set partitions; coefficients of 1/(2 - e^t).
Rational fubini(long n);
/// n! [t^n] (2 - e^t)^{-k}, k >= 1.
Rational fubini_order(long n, long k);

/// b_n(0) = integral of u_(n) over [0, 1].
Rational cauchy(long n);
/// b_n(x) from t/log(1+t) (1+t)^x.
Polynomial bernoulli_second_poly(long n);

/// Permutations of n letters with k ascending runs; A(0,0) = 1.
Rational eulerian(long n, long k);
/// The alternating sum sum_j (-1)^j C(n+1,j) (k-j)^n.
Rational eulerian_explicit(long n, long k);

/// sum_{k=0}^{n} 1/(k+1).
Rational harmonic(long n);

/// C^(k)_{l,m}, the coefficients in (xy)_(k) = sum C^(k)_{l,m} x_(l) y_(m).
Rational osgood_wu(long k, long l, long m);

}  // namespace volkenborn
