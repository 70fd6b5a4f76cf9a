#include "volkenborn/sequences.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

#include "volkenborn/combinatorics.hpp"
#include "volkenborn/power_series.hpp"

namespace volkenborn {

TriangularTable::TriangularTable(std::string name, RowFn make_row)
    : name_(std::move(name)), make_row_(std::move(make_row)) {}

void TriangularTable::ensure(long n) const {
    {
        std::shared_lock lock(mutex_);
        if (static_cast<long>(rows_.size()) > n) return;
    }
    std::unique_lock lock(mutex_);
    while (static_cast<long>(rows_.size()) <= n) {
        auto next = make_row_(static_cast<long>(rows_.size()), rows_);
        rows_.push_back(std::move(next));
    }
}

Rational TriangularTable::at(long n, long k) const {
    if (n < 0 || k < 0) return Rational(0);
    ensure(n);
    std::shared_lock lock(mutex_);
    const auto& r = rows_[static_cast<size_t>(n)];
    if (k >= static_cast<long>(r.size())) return Rational(0);
    return r[static_cast<size_t>(k)];
}

std::vector<Rational> TriangularTable::row(long n) const {
    if (n < 0) return {};
    ensure(n);
    std::shared_lock lock(mutex_);
    return rows_[static_cast<size_t>(n)];
}

void TriangularTable::clear() {
    std::unique_lock lock(mutex_);
    rows_.clear();
}

long TriangularTable::rows_cached() const {
    std::shared_lock lock(mutex_);
    return static_cast<long>(rows_.size());
}

namespace {

void require_nonnegative(long n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative index " + std::to_string(n));
}

using Rows = std::vector<std::vector<Rational>>;

TriangularTable& bernoulli_table() {
    static TriangularTable t("bernoulli", [](long n, const Rows& e) {
        if (n == 0) return std::vector<Rational>{Rational(1)};
        Rational s;
        for (long k = 0; k < n; ++k) s += binom_int(n + 1, k) * e[static_cast<size_t>(k)][0];
        return std::vector<Rational>{-s / Rational(n + 1)};
    });
    return t;
}

TriangularTable& euler_table() {
    static TriangularTable t("euler", [](long n, const Rows& e) {
        Rational s = n == 0 ? Rational(2) : Rational(0);
        for (long k = 0; k < n; ++k) s -= binom_int(n, k) * e[static_cast<size_t>(k)][0];
        return std::vector<Rational>{s / Rational(2)};
    });
    return t;
}

TriangularTable& stirling1_table() {
    static TriangularTable t("stirling1", [](long n, const Rows& e) {
        std::vector<Rational> r(static_cast<size_t>(n) + 1);
        if (n == 0) {
            r[0] = Rational(1);
            return r;
        }
        const auto& prev = e[static_cast<size_t>(n - 1)];
        for (long k = 1; k <= n; ++k) {
            Rational v = k - 1 < n ? prev[static_cast<size_t>(k - 1)] : Rational(0);
            if (k <= n - 1) v -= Rational(n - 1) * prev[static_cast<size_t>(k)];
            r[static_cast<size_t>(k)] = v;
        }
        return r;
    });
    return t;
}

TriangularTable& stirling2_table() {
    static TriangularTable t("stirling2", [](long n, const Rows& e) {
        std::vector<Rational> r(static_cast<size_t>(n) + 1);
        if (n == 0) {
            r[0] = Rational(1);
            return r;
        }
        const auto& prev = e[static_cast<size_t>(n - 1)];
        for (long k = 1; k <= n; ++k) {
            Rational v = prev[static_cast<size_t>(k - 1)];
            if (k <= n - 1) v += Rational(k) * prev[static_cast<size_t>(k)];
            r[static_cast<size_t>(k)] = v;
        }
        return r;
    });
    return t;
}

TriangularTable& eulerian_table() {
    static TriangularTable t("eulerian", [](long n, const Rows& e) {
        std::vector<Rational> r(static_cast<size_t>(n) + 1);
        if (n == 0) {
            r[0] = Rational(1);
        } else {
            const auto& prev = e[static_cast<size_t>(n - 1)];
            for (long k = 1; k <= n; ++k) {
                Rational v = Rational(n - k + 1) * prev[static_cast<size_t>(k - 1)];
                if (k <= n - 1) v += Rational(k) * prev[static_cast<size_t>(k)];
                r[static_cast<size_t>(k)] = v;
            }
        }
        for (long k = 0; k <= n; ++k) {
            if (r[static_cast<size_t>(k)] != eulerian_explicit(n, k)) {
                throw std::logic_error("Eulerian recurrence disagrees with the explicit formula at (" +
                                       std::to_string(n) + "," + std::to_string(k) + ")");
            }
        }
        return r;
    });
    return t;
}

TriangularTable& fubini_table() {
    static TriangularTable t("fubini", [](long n, const Rows& e) {
        if (n == 0) return std::vector<Rational>{Rational(1)};
        Rational s;
        for (long j = 1; j <= n; ++j) s += binom_int(n, j) * e[static_cast<size_t>(n - j)][0];
        return std::vector<Rational>{s};
    });
    return t;
}

// Row n of an associated family: n! [t^n] g(t)^k / k! for k <= n/2, where g
// starts at t^2.
std::vector<Rational> associated_row(long n, const PowerSeries& g) {
    std::vector<Rational> r(static_cast<size_t>(n / 2) + 1);
    PowerSeries power = PowerSeries::constant(Rational(1), n + 1);
    for (long k = 0; k <= n / 2; ++k) {
        r[static_cast<size_t>(k)] = power.egf_coeff(n) / Rational(factorial(k));
        power *= g;
    }
    return r;
}

TriangularTable& assoc1_table() {
    static TriangularTable t("assoc-stirling1", [](long n, const Rows&) {
        const long order = n + 1;
        return associated_row(n, PowerSeries::log1p(order) - PowerSeries::variable(order));
    });
    return t;
}

TriangularTable& assoc2_table() {
    static TriangularTable t("assoc-stirling2", [](long n, const Rows&) {
        const long order = n + 1;
        return associated_row(n, PowerSeries::exp(order) - PowerSeries::constant(Rational(1), order) -
                                     PowerSeries::variable(order));
    });
    return t;
}

TriangularTable& cauchy_table() {
    static TriangularTable t("cauchy", [](long n, const Rows&) {
        const Rational v = falling_poly(n).integrate(Rational(0), Rational(1));
        return std::vector<Rational>{v};
    });
    return t;
}

}  // namespace

void clear_caches() {
    bernoulli_table().clear();
    euler_table().clear();
    stirling1_table().clear();
    stirling2_table().clear();
    eulerian_table().clear();
    fubini_table().clear();
    assoc1_table().clear();
    assoc2_table().clear();
    cauchy_table().clear();
}

Rational bernoulli(long n) {
    require_nonnegative(n, "bernoulli");
    return bernoulli_table().at(n, 0);
}

Polynomial bernoulli_poly(long n) {
    require_nonnegative(n, "bernoulli_poly");
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) c[static_cast<size_t>(n - k)] = binom_int(n, k) * bernoulli(k);
    return Polynomial(std::move(c));
}

Rational euler(long n) {
    require_nonnegative(n, "euler");
    return euler_table().at(n, 0);
}

Polynomial euler_poly(long n) {
    require_nonnegative(n, "euler_poly");
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) c[static_cast<size_t>(n - k)] = binom_int(n, k) * euler(k);
    return Polynomial(std::move(c));
}

Rational euler_second(long n) {
    require_nonnegative(n, "euler_second");
    return Rational(int_pow(2, n)) * euler_poly(n).eval(Rational(1, 2));
}

Rational apostol_bernoulli(long n, const Rational& lambda) {
    require_nonnegative(n, "apostol_bernoulli");
    if (lambda == Rational(1)) throw std::invalid_argument("apostol_bernoulli: lambda = 1 is excluded");
    const long order = n + 1;
    const PowerSeries den = PowerSeries::exp(order) * lambda - PowerSeries::constant(Rational(1), order);
    return PowerSeries::variable(order).divide(den).egf_coeff(n);
}

Rational apostol_euler(long n, const Rational& lambda) {
    require_nonnegative(n, "apostol_euler");
    if (lambda == Rational(-1)) throw std::invalid_argument("apostol_euler: lambda = -1 is excluded");
    const long order = n + 1;
    const PowerSeries den = PowerSeries::exp(order) * lambda + PowerSeries::constant(Rational(1), order);
    return PowerSeries::constant(Rational(2), order).divide(den).egf_coeff(n);
}

Rational frobenius_euler(long n, const Rational& u) {
    require_nonnegative(n, "frobenius_euler");
    if (u == Rational(1)) throw std::invalid_argument("frobenius_euler: u = 1 is excluded");
    const long order = n + 1;
    const PowerSeries den = PowerSeries::exp(order) - PowerSeries::constant(u, order);
    return PowerSeries::constant(Rational(1) - u, order).divide(den).egf_coeff(n);
}

Rational stirling1(long n, long k) { return stirling1_table().at(n, k); }

Rational stirling1_unsigned(long n, long k) { return stirling1(n, k).abs(); }

Rational stirling2(long n, long k) { return stirling2_table().at(n, k); }

Rational stirling2_lambda(long n, long k, const Rational& lambda) {
    if (n < 0 || k < 0) return Rational(0);
    const long order = n + 1;
    const PowerSeries base = PowerSeries::exp(order) * lambda - PowerSeries::constant(Rational(1), order);
    return base.pow(k).egf_coeff(n) / Rational(factorial(k));
}

Polynomial array_poly(long n, long v, const Rational& lambda) {
    require_nonnegative(n, "array_poly");
    require_nonnegative(v, "array_poly");
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (long j = 0; j <= n; ++j) c[static_cast<size_t>(n - j)] = binom_int(n, j) * stirling2_lambda(j, v, lambda);
    return Polynomial(std::move(c));
}

Rational assoc_stirling1(long n, long k) { return assoc1_table().at(n, k); }

Rational assoc_stirling2(long n, long k) { return assoc2_table().at(n, k); }

Rational lah(long n, long k) {
    if (n < 0 || k < 0) return Rational(0);
    if (n == 0 || k == 0) return Rational(n == k ? 1 : 0);
    if (k > n) return Rational(0);
    return sign_power(n) * Rational(factorial(n), factorial(k)) * binom_int(n - 1, k - 1);
}

Rational lah_unsigned(long n, long k) { return lah(n, k).abs(); }

Rational daehee(long n) {
    require_nonnegative(n, "daehee");
    return sign_power(n) * Rational(factorial(n), Integer(n + 1));
}

Rational daehee_hat(long n) {
    require_nonnegative(n, "daehee_hat");
    if (n == 0) return Rational(1);
    Rational s;
    for (long k = 1; k <= n; ++k) {
        s += sign_power(k) * Rational(factorial(n), Integer(k + 1)) * binom_int(n - 1, k - 1);
    }
    return s;
}

Polynomial daehee_poly(long n) {
    require_nonnegative(n, "daehee_poly");
    Polynomial p;
    for (long k = 0; k <= n; ++k) p += bernoulli_poly(k) * stirling1(n, k);
    return p;
}

Polynomial daehee_hat_poly(long n) {
    require_nonnegative(n, "daehee_hat_poly");
    Polynomial p;
    for (long k = 0; k <= n; ++k) p += bernoulli_poly(k) * stirling1_unsigned(n, k);
    return p;
}

Rational changhee(long n) {
    require_nonnegative(n, "changhee");
    return sign_power(n) * Rational(factorial(n), int_pow(2, n));
}

Rational changhee_hat(long n) {
    require_nonnegative(n, "changhee_hat");
    if (n == 0) return Rational(1);
    Rational s;
    for (long m = 1; m <= n; ++m) s += sign_power(m) * binom_int(n - 1, n - m) / Rational(int_pow(2, m));
    return s * Rational(factorial(n));
}

Polynomial changhee_poly(long n) {
    require_nonnegative(n, "changhee_poly");
    Polynomial p;
    for (long k = 0; k <= n; ++k) p += euler_poly(k) * stirling1(n, k);
    return p;
}

Rational fubini(long n) {
    require_nonnegative(n, "fubini");
    return fubini_table().at(n, 0);
}

Rational fubini_order(long n, long k) {
    require_nonnegative(n, "fubini_order");
    if (k <= 0) throw std::invalid_argument("fubini_order: order must be positive");
    const long order = n + 1;
    const PowerSeries base = PowerSeries::constant(Rational(2), order) - PowerSeries::exp(order);
    return base.inverse().pow(k).egf_coeff(n);
}

Rational cauchy(long n) {
    require_nonnegative(n, "cauchy");
    return cauchy_table().at(n, 0);
}

Polynomial bernoulli_second_poly(long n) {
    require_nonnegative(n, "bernoulli_second_poly");
    // t/log(1+t) = 1 / (log(1+t)/t); (1+t)^x = sum C(x,i) t^i.
    const long order = n + 2;
    const PowerSeries kernel = PowerSeries::log1p(order).shift_down().inverse();
    Polynomial p;
    for (long j = 0; j <= n; ++j) p += binomial_poly(n - j) * kernel.coeff(j);
    return p * Rational(factorial(n));
}

Rational eulerian(long n, long k) {
    require_nonnegative(n, "eulerian");
    return eulerian_table().at(n, k);
}

Rational eulerian_explicit(long n, long k) {
    require_nonnegative(n, "eulerian_explicit");
    if (k < 0) return Rational(0);
    Rational s;
    for (long j = 0; j <= k; ++j) s += sign_power(j) * binom_int(n + 1, j) * Rational(int_pow(k - j, n));
    return s;
}

Rational harmonic(long n) {
    require_nonnegative(n, "harmonic");
    Rational s;
    for (long k = 0; k <= n; ++k) s += Rational(1, k + 1);
    return s;
}

Rational osgood_wu(long k, long l, long m) {
    if (k < 1) throw std::invalid_argument("osgood_wu: k must be at least 1");
    Rational s;
    for (long j = 1; j <= k; ++j) s += stirling1(k, j) * stirling2(j, l) * stirling2(j, m);
    return s;
}

}  // namespace volkenborn
