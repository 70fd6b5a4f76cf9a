#include "volkenborn/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "volkenborn/combinatorics.hpp"

namespace volkenborn {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(long degree, const Rational& c) {
    if (degree < 0) throw std::invalid_argument("monomial of negative degree");
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
}

Rational Polynomial::eval(const Rational& at) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::shift(const Rational& a) const {
    if (is_zero()) return {};
    const size_t n = coeffs_.size();
    std::vector<Rational> out(n);
    // (x + a)^i = sum_j C(i, j) a^(i-j) x^j
    std::vector<Rational> apow(n);
    apow[0] = Rational(1);
    for (size_t i = 1; i < n; ++i) apow[i] = apow[i - 1] * a;
    for (size_t i = 0; i < n; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j <= i; ++j) {
            out[j] += coeffs_[i] * binom_int(static_cast<long>(i), static_cast<long>(j)) * apow[i - j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scale_argument(const Rational& c) const {
    std::vector<Rational> out(coeffs_);
    Rational cp(1);
    for (auto& v : out) {
        v *= cp;
        cp *= c;
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
    if (is_zero()) return {};
    std::vector<Rational> out(coeffs_.size() + 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    return Polynomial(std::move(out));
}

Rational Polynomial::integrate(const Rational& a, const Rational& b) const {
    const Polynomial F = antiderivative();
    return F.eval(b) - F.eval(a);
}

Polynomial Polynomial::divide_by_x() const {
    if (is_zero()) return {};
    if (!coeffs_[0].is_zero()) throw std::domain_error("divide_by_x: nonzero constant term");
    return Polynomial(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& v : r.coeffs_) v = -v;
    return r;
}

std::string Polynomial::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs_) arr.push_back(c.str());
    return arr.dump();
}

Polynomial Polynomial::from_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
    }
    if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Rational> v;
    for (const auto& item : arr) {
        if (!item.is_string()) throw std::invalid_argument("polynomial JSON entries must be strings");
        v.push_back(Rational::parse(item.get<std::string>()));
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::parse_list(const std::string& text) {
    std::vector<Rational> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(Rational::parse(item));
    if (v.empty()) throw std::invalid_argument("empty coefficient list");
    return Polynomial(std::move(v));
}

std::string Polynomial::pretty() const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const bool unit = mag == Rational(1);
        if (!unit || i == 0) out += mag.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Polynomial falling_poly(long n) {
    if (n < 0) throw std::invalid_argument("falling_poly: negative n");
    Polynomial p = Polynomial::constant(Rational(1));
    for (long j = 0; j < n; ++j) p *= Polynomial({Rational(-j), Rational(1)});
    return p;
}

Polynomial rising_poly(long n) {
    if (n < 0) throw std::invalid_argument("rising_poly: negative n");
    Polynomial p = Polynomial::constant(Rational(1));
    for (long j = 0; j < n; ++j) p *= Polynomial({Rational(j), Rational(1)});
    return p;
}

Polynomial binomial_poly(long n, const Rational& scale, const Rational& offset) {
    if (n < 0) return {};
    Polynomial p = Polynomial::constant(Rational(1));
    for (long j = 0; j < n; ++j) p *= Polynomial({offset - Rational(j), scale});
    return p * Rational(factorial(n)).inverse();
}

}  // namespace volkenborn
