#include "volkenborn/bivariate.hpp"

#include <algorithm>
#include <stdexcept>

#include "volkenborn/combinatorics.hpp"

namespace volkenborn {

Bivariate Bivariate::constant(const Rational& c) { return in_x(Polynomial::constant(c)); }

Bivariate Bivariate::in_x(const Polynomial& f) {
    Bivariate b;
    for (long i = 0; i <= f.degree(); ++i) b.rows_.push_back(Polynomial::constant(f.coeff(i)));
    b.trim();
    return b;
}

Bivariate Bivariate::in_y(const Polynomial& f) {
    Bivariate b;
    b.rows_.push_back(f);
    b.trim();
    return b;
}

Bivariate Bivariate::product(const Polynomial& f, const Polynomial& g) {
    Bivariate b;
    for (long i = 0; i <= f.degree(); ++i) b.rows_.push_back(g * f.coeff(i));
    b.trim();
    return b;
}

void Bivariate::trim() {
    while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

Rational Bivariate::coeff(long i, long j) const {
    if (i < 0 || i > degree_x()) return Rational(0);
    return rows_[static_cast<size_t>(i)].coeff(j);
}

long Bivariate::degree_y() const {
    long d = -1;
    for (const auto& r : rows_) d = std::max(d, r.degree());
    return d;
}

Rational Bivariate::eval(const Rational& x, const Rational& y) const {
    Rational acc;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        acc *= x;
        acc += it->eval(y);
    }
    return acc;
}

Bivariate& Bivariate::operator+=(const Bivariate& rhs) {
    if (rhs.rows_.size() > rows_.size()) rows_.resize(rhs.rows_.size());
    for (size_t i = 0; i < rhs.rows_.size(); ++i) rows_[i] += rhs.rows_[i];
    trim();
    return *this;
}

Bivariate& Bivariate::operator-=(const Bivariate& rhs) {
    if (rhs.rows_.size() > rows_.size()) rows_.resize(rhs.rows_.size());
    for (size_t i = 0; i < rhs.rows_.size(); ++i) rows_[i] -= rhs.rows_[i];
    trim();
    return *this;
}

Bivariate& Bivariate::operator*=(const Bivariate& rhs) {
    if (is_zero() || rhs.is_zero()) {
        rows_.clear();
        return *this;
    }
    std::vector<Polynomial> out(rows_.size() + rhs.rows_.size() - 1);
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].is_zero()) continue;
        for (size_t j = 0; j < rhs.rows_.size(); ++j) out[i + j] += rows_[i] * rhs.rows_[j];
    }
    rows_ = std::move(out);
    trim();
    return *this;
}

Bivariate& Bivariate::operator*=(const Rational& c) {
    for (auto& r : rows_) r *= c;
    trim();
    return *this;
}

Rational Bivariate::pair_moments(const std::vector<Rational>& wx, const std::vector<Rational>& wy) const {
    Rational acc;
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Polynomial& row = rows_[i];
        if (row.is_zero()) continue;
        if (i >= wx.size() || static_cast<size_t>(row.degree()) >= wy.size()) {
            throw std::out_of_range("pair_moments: moment sequence too short");
        }
        Rational inner;
        for (long j = 0; j <= row.degree(); ++j) inner += row.coeff(j) * wy[static_cast<size_t>(j)];
        acc += wx[i] * inner;
    }
    return acc;
}

Bivariate falling_sum(long n) {
    const Bivariate s = Bivariate::in_x(Polynomial::x()) + Bivariate::in_y(Polynomial::x());
    Bivariate r = Bivariate::constant(Rational(1));
    for (long j = 0; j < n; ++j) r *= s - Bivariate::constant(Rational(j));
    return r;
}

Bivariate falling_product(long n) {
    const Bivariate xy = Bivariate::product(Polynomial::x(), Polynomial::x());
    Bivariate r = Bivariate::constant(Rational(1));
    for (long j = 0; j < n; ++j) r *= xy - Bivariate::constant(Rational(j));
    return r;
}

Bivariate binomial_sum(long n) { return falling_sum(n) * Rational(factorial(n)).inverse(); }

}  // namespace volkenborn
