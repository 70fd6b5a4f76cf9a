#include "volkenborn/integrals.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "json.hpp"

#include "volkenborn/combinatorics.hpp"
#include "volkenborn/padic.hpp"
#include "volkenborn/sequences.hpp"

namespace volkenborn {

std::string Measure::name() const {
    switch (kind) {
        case MeasureKind::bosonic: return "bosonic";
        case MeasureKind::fermionic: return "fermionic";
        case MeasureKind::q_weighted: return "q=" + q.str();
    }
    return "?";
}

Rational volkenborn_exact(const Polynomial& f) {
    Rational s;
    for (long i = 0; i <= f.degree(); ++i) s += f.coeff(i) * bernoulli(i);
    return s;
}

Rational fermionic_exact(const Polynomial& f) {
    Rational s;
    for (long i = 0; i <= f.degree(); ++i) s += f.coeff(i) * euler(i);
    return s;
}

Rational exact_integral(const Polynomial& f, MeasureKind kind) {
    switch (kind) {
        case MeasureKind::bosonic: return volkenborn_exact(f);
        case MeasureKind::fermionic: return fermionic_exact(f);
        case MeasureKind::q_weighted: break;
    }
    throw std::invalid_argument("the q-weighted measure has no exact evaluator");
}

std::vector<Rational> witt_moments(MeasureKind kind, long max_degree) {
    std::vector<Rational> w;
    for (long i = 0; i <= max_degree; ++i) {
        w.push_back(kind == MeasureKind::bosonic ? bernoulli(i) : euler(i));
    }
    return w;
}

Rational double_integral(const Bivariate& f, MeasureKind kx, MeasureKind ky) {
    if (kx == MeasureKind::q_weighted || ky == MeasureKind::q_weighted) {
        throw std::invalid_argument("the q-weighted measure has no exact evaluator");
    }
    return f.pair_moments(witt_moments(kx, std::max(f.degree_x(), 0L)), witt_moments(ky, std::max(f.degree_y(), 0L)));
}

Rational power_sum(long n, const Integer& m) {
    if (n < 0) throw std::invalid_argument("power_sum: negative exponent");
    if (m < 0) throw std::invalid_argument("power_sum: negative upper bound");
    return (bernoulli_poly(n + 1).eval(Rational(m)) - bernoulli(n + 1)) / Rational(n + 1);
}

Rational alternating_power_sum(long n, const Integer& m) {
    if (n < 0) throw std::invalid_argument("alternating_power_sum: negative exponent");
    if (m < 0) throw std::invalid_argument("alternating_power_sum: negative upper bound");
    // E_n(x+1) + E_n(x) = 2x^n telescopes to this.
    const Rational tail = euler_poly(n).eval(Rational(m));
    const bool odd = mpz_odd_p(m.get_mpz_t()) != 0;
    return (euler(n) + (odd ? tail : -tail)) / Rational(2);
}

namespace {

void require_level_args(long p, long N) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (N < 0) throw std::invalid_argument("level N must be nonnegative");
}

void require_q_args(const Rational& q, long p, long N) {
    if (p % 2 == 0) throw std::invalid_argument("q-weighted measure requires odd p");
    const auto v = valuation(Rational(1) - q, p);
    if (v && *v < 1) {
        throw std::invalid_argument("q-weighted measure requires nu_p(1 - q) >= 1, got " + std::to_string(*v) +
                                    " for q = " + q.str());
    }
    const Integer size = int_pow(p, N);
    if (size > kQLevelGuard) {
        throw std::invalid_argument("q-weighted level sum over p^N = " + size.get_str() + " points exceeds the limit " +
                                    std::to_string(kQLevelGuard));
    }
}

Rational q_chunk(const Polynomial& f, const Rational& q, long begin, long end) {
    Rational s;
    Rational qx = q.pow(begin);
    for (long x = begin; x < end; ++x) {
        s += f.eval(Rational(x)) * qx;
        qx *= q;
    }
    return s;
}

Rational q_normalise(const Rational& sum, const Rational& q, long size) {
    // [size]_q = (1 - q^size)/(1 - q)
    const Rational bracket = (Rational(1) - q.pow(size)) / (Rational(1) - q);
    return sum / bracket;
}

}  // namespace

Rational q_level_serial(const Polynomial& f, const Rational& q, long p, long N) {
    require_level_args(p, N);
    require_q_args(q, p, N);
    if (q == Rational(1)) return level_integral(f, Measure::bosonic(), p, N);
    const long size = int_pow(p, N).get_si();
    return q_normalise(q_chunk(f, q, 0, size), q, size);
}

Rational q_level_parallel(const Polynomial& f, const Rational& q, long p, long N) {
    require_level_args(p, N);
    require_q_args(q, p, N);
    if (q == Rational(1)) return level_integral(f, Measure::bosonic(), p, N);
    const long size = int_pow(p, N).get_si();
    const long chunks = std::min<long>(size, 4L * omp_get_max_threads());
    std::vector<Rational> partial(static_cast<size_t>(chunks));
#pragma omp parallel for schedule(dynamic)
    for (long c = 0; c < chunks; ++c) {
        const long begin = size * c / chunks;
        const long end = size * (c + 1) / chunks;
        partial[static_cast<size_t>(c)] = q_chunk(f, q, begin, end);
    }
    Rational s;
    for (const auto& v : partial) s += v;
    return q_normalise(s, q, size);
}

Rational level_integral(const Polynomial& f, const Measure& measure, long p, long N) {
    require_level_args(p, N);
    const Integer size = int_pow(p, N);
    switch (measure.kind) {
        case MeasureKind::bosonic: {
            Rational s;
            for (long i = 0; i <= f.degree(); ++i) s += f.coeff(i) * power_sum(i, size);
            return s / Rational(size);
        }
        case MeasureKind::fermionic: {
            if (p % 2 == 0) throw std::invalid_argument("fermionic measure requires odd p");
            Rational s;
            for (long i = 0; i <= f.degree(); ++i) s += f.coeff(i) * alternating_power_sum(i, size);
            return s;
        }
        case MeasureKind::q_weighted: return q_level_serial(f, measure.q, p, N);
    }
    throw std::logic_error("unknown measure");
}

ConvergenceReport convergence_report(const Polynomial& f, const Measure& measure, long p, long N_max) {
    if (N_max < 1) throw std::invalid_argument("N_max must be at least 1");
    ConvergenceReport report{measure, f, p, {}};
    const bool symbolic = measure.kind != MeasureKind::q_weighted;
    const Rational target = symbolic ? exact_integral(f, measure.kind) : Rational(0);
    for (long N = 1; N <= N_max; ++N) {
        ConvergenceRow row;
        row.N = N;
        row.value = measure.kind == MeasureKind::q_weighted ? q_level_parallel(f, measure.q, p, N)
                                                            : level_integral(f, measure, p, N);
        if (symbolic) {
            row.err_valuation = valuation(row.value - target, p);
        } else if (report.rows.empty()) {
            row.has_error = false;
        } else {
            row.err_valuation = valuation(row.value - report.rows.back().value, p);
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

std::string error_text(const ConvergenceRow& row) {
    if (!row.has_error) return "n/a";
    if (!row.err_valuation) return "inf";
    return std::to_string(*row.err_valuation);
}

}  // namespace

std::string ConvergenceReport::to_csv() const {
    std::ostringstream os;
    os << "N,value,err_valuation\n";
    for (const auto& r : rows) os << r.N << ',' << r.value.str() << ',' << error_text(r) << '\n';
    return os.str();
}

std::string ConvergenceReport::to_json() const {
    nlohmann::json j;
    j["measure"] = measure.name();
    j["prime"] = prime;
    j["polynomial"] = nlohmann::json::parse(polynomial.to_json());
    j["error_reference"] = measure.kind == MeasureKind::q_weighted ? "previous level" : "exact integral";
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row;
        row["N"] = r.N;
        row["value"] = r.value.str();
        if (!r.has_error) {
            row["err_valuation"] = nullptr;
        } else if (!r.err_valuation) {
            row["err_valuation"] = "inf";
        } else {
            row["err_valuation"] = *r.err_valuation;
        }
        j["rows"].push_back(row);
    }
    return j.dump(2) + "\n";
}

std::string ConvergenceReport::to_table() const {
    std::ostringstream os;
    os << "measure " << measure.name() << ", p = " << prime << ", f(x) = " << polynomial.pretty() << '\n';
    os << "error column: "
       << (measure.kind == MeasureKind::q_weighted ? "nu_p(level_N - level_{N-1})" : "nu_p(level_N - exact)") << '\n';
    for (const auto& r : rows) os << "  N=" << r.N << "  " << r.value.str() << "  err " << error_text(r) << '\n';
    return os.str();
}

bool check_shift_equation(const Polynomial& f, long m) {
    if (m < 1) throw std::invalid_argument("check_shift_equation: m must be at least 1");
    const Polynomial df = f.derivative();
    Rational rhs = volkenborn_exact(f);
    for (long k = 0; k < m; ++k) rhs += df.eval(Rational(k));
    return volkenborn_exact(f.shift(Rational(m))) == rhs;
}

bool check_fermionic_shift(const Polynomial& f, long n) {
    if (n < 1) throw std::invalid_argument("check_fermionic_shift: n must be at least 1");
    const Rational lhs = fermionic_exact(f.shift(Rational(n))) + sign_power(n + 1) * fermionic_exact(f);
    Rational rhs;
    for (long j = 0; j < n; ++j) rhs += sign_power(n - 1 - j) * f.eval(Rational(j));
    return lhs == rhs * Rational(2);
}

}  // namespace volkenborn
