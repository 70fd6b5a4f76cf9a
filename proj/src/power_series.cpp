#include "volkenborn/power_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "volkenborn/combinatorics.hpp"

namespace volkenborn {

PowerSeries::PowerSeries(std::vector<Rational> coeffs, long order) : c_(std::move(coeffs)), order_(order) {
    if (order < 0) throw std::invalid_argument("power series order must be nonnegative");
    c_.resize(static_cast<size_t>(order));
}

PowerSeries PowerSeries::zero(long order) { return PowerSeries({}, order); }

PowerSeries PowerSeries::constant(const Rational& c, long order) { return PowerSeries({c}, order); }

PowerSeries PowerSeries::variable(long order) { return PowerSeries({Rational(0), Rational(1)}, order); }

PowerSeries PowerSeries::exp(long order) { return exp_scaled(Rational(1), order); }

PowerSeries PowerSeries::exp_scaled(const Rational& c, long order) {
    std::vector<Rational> v(static_cast<size_t>(std::max(order, 0L)));
    Rational term(1);
    for (long n = 0; n < order; ++n) {
        v[static_cast<size_t>(n)] = term;
        term = term * c / Rational(n + 1);
    }
    return PowerSeries(std::move(v), order);
}

PowerSeries PowerSeries::log1p(long order) {
    std::vector<Rational> v(static_cast<size_t>(std::max(order, 0L)));
    for (long n = 1; n < order; ++n) v[static_cast<size_t>(n)] = Rational(n % 2 == 1 ? 1 : -1, n);
    return PowerSeries(std::move(v), order);
}

PowerSeries PowerSeries::binomial(const Rational& a, long order) {
    std::vector<Rational> v(static_cast<size_t>(std::max(order, 0L)));
    Rational term(1);
    for (long n = 0; n < order; ++n) {
        v[static_cast<size_t>(n)] = term;
        term = term * (a - Rational(n)) / Rational(n + 1);
    }
    return PowerSeries(std::move(v), order);
}

Rational PowerSeries::coeff(long n) const {
    if (n < 0) return Rational(0);
    if (n >= order_) {
        throw std::out_of_range("coefficient " + std::to_string(n) + " beyond series order " + std::to_string(order_));
    }
    return c_[static_cast<size_t>(n)];
}

Rational PowerSeries::egf_coeff(long n) const { return coeff(n) * Rational(factorial(n)); }

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
    order_ = std::min(order_, rhs.order_);
    c_.resize(static_cast<size_t>(order_));
    for (long i = 0; i < order_; ++i) c_[static_cast<size_t>(i)] += rhs.c_[static_cast<size_t>(i)];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
    order_ = std::min(order_, rhs.order_);
    c_.resize(static_cast<size_t>(order_));
    for (long i = 0; i < order_; ++i) c_[static_cast<size_t>(i)] -= rhs.c_[static_cast<size_t>(i)];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& rhs) {
    const long order = std::min(order_, rhs.order_);
    std::vector<Rational> out(static_cast<size_t>(order));
    for (long i = 0; i < order; ++i) {
        const Rational& a = c_[static_cast<size_t>(i)];
        if (a.is_zero()) continue;
        for (long j = 0; i + j < order; ++j) out[static_cast<size_t>(i + j)] += a * rhs.c_[static_cast<size_t>(j)];
    }
    c_ = std::move(out);
    order_ = order;
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
    for (auto& v : c_) v *= c;
    return *this;
}

PowerSeries PowerSeries::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    PowerSeries result = constant(Rational(1), order_);
    PowerSeries base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

PowerSeries PowerSeries::inverse() const {
    if (order_ == 0) return *this;
    if (c_[0].is_zero()) throw std::domain_error("series inverse needs a nonzero constant term");
    std::vector<Rational> out(static_cast<size_t>(order_));
    const Rational inv0 = c_[0].inverse();
    out[0] = inv0;
    for (long n = 1; n < order_; ++n) {
        Rational s;
        for (long i = 1; i <= n; ++i) s += c_[static_cast<size_t>(i)] * out[static_cast<size_t>(n - i)];
        out[static_cast<size_t>(n)] = -s * inv0;
    }
    return PowerSeries(std::move(out), order_);
}

PowerSeries PowerSeries::divide(const PowerSeries& rhs) const { return *this * rhs.inverse(); }

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
    const long order = std::min(order_, inner.order_);
    if (order == 0) return zero(0);
    if (!inner.c_[0].is_zero()) {
        throw std::domain_error("series composition needs an inner series with zero constant term");
    }
    // Horner in the inner series: (((c_{T-1}) g + c_{T-2}) g + ...) + c_0.
    PowerSeries g = inner;
    g.c_.resize(static_cast<size_t>(order));
    g.order_ = order;
    PowerSeries acc = zero(order);
    for (long i = order - 1; i >= 0; --i) {
        acc *= g;
        acc.c_[0] += c_[static_cast<size_t>(i)];
    }
    return acc;
}

PowerSeries PowerSeries::shift_down() const {
    if (order_ == 0) return *this;
    return PowerSeries(std::vector<Rational>(c_.begin() + 1, c_.end()), order_ - 1);
}

}  // namespace volkenborn
