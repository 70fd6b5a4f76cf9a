// Acceptance suite: one PASS/FAIL line per criterion, with its tolerance and
// wall-clock limit. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "volkenborn/combinatorics.hpp"
#include "volkenborn/identities.hpp"
#include "volkenborn/integrals.hpp"
#include "volkenborn/padic.hpp"
#include "volkenborn/polynomial.hpp"
#include "volkenborn/sequences.hpp"

using namespace volkenborn;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::string tolerance;
    double limit_seconds;
    std::function<std::string()> body;  // empty string on success
};

std::string table_check(const char* name, Rational (*fn)(long), const std::vector<Rational>& want) {
    for (size_t n = 0; n < want.size(); ++n) {
        const Rational got = fn(static_cast<long>(n));
        if (got != want[n]) return std::string(name) + "(" + std::to_string(n) + ") = " + got.str() + ", want " + want[n].str();
    }
    return {};
}

std::string criterion_tables() {
    const Rational h(1, 2);
    std::string e = table_check("Y1", daehee, {1, -h, Rational(2, 3), Rational(-3, 2), Rational(24, 5)});
    if (e.empty()) e = table_check("Y2", daehee_hat, {1, -h, Rational(-1, 3), -h, Rational(-6, 5)});
    if (e.empty()) e = table_check("y1", changhee, {1, -h, h, Rational(-3, 4), Rational(3, 2)});
    if (e.empty()) e = table_check("y2", changhee_hat, {1, -h, -h, Rational(-3, 4), Rational(-3, 2)});
    return e;
}

std::string criterion_binomial_integrals() {
    for (long n = 0; n <= 30; ++n) {
        const Polynomial b = binomial_poly(n);
        if (volkenborn_exact(b) != sign_power(n) / Rational(n + 1)) return "bosonic n=" + std::to_string(n);
        if (fermionic_exact(b) != sign_power(n) / Rational(int_pow(2, n))) return "fermionic n=" + std::to_string(n);
    }
    return {};
}

std::string criterion_suite() {
    const IdentityReport r = verify_all(15);
    long corrected = 0;
    for (const auto& rec : r.records) {
        for (const auto& c : rec.clauses) {
            if (c.mismatches != 0) return rec.id + " clause '" + c.name + "' has mismatches";
            if (c.status != ClauseStatus::corrected) continue;
            ++corrected;
            if (c.literals.empty()) return rec.id + " corrected without a literal counterexample";
            for (const auto& lit : c.literals)
                if (!lit.reproduced) return rec.id + " literal '" + lit.statement + "' not reproduced";
        }
    }
    for (int i = 1; i <= 35; ++i) {
        const std::string id = (i < 10 ? "I0" : "I") + std::to_string(i);
        if (std::none_of(r.records.begin(), r.records.end(), [&](const RecordResult& x) { return x.id == id; }))
            return id + " missing";
    }
    if (r.unadjudicated() != 0) return std::to_string(r.unadjudicated()) + " unadjudicated failures";
    std::printf("       %zu records, %ld points, %ld corrected clauses\n", r.records.size(), r.points(), corrected);
    return {};
}

std::string criterion_convergence() {
    const Rational witness = level_integral(Polynomial{0, 1}, Measure::bosonic(), 3, 2) - bernoulli(1);
    if (witness != Rational(9, 2) || valuation(witness, 3) != 2) return "witness row p=3 n=1 N=2: " + witness.str();
    std::string below_one;
    for (long p : {3L, 5L, 7L}) {
        for (long n = 0; n <= 8; ++n) {
            std::optional<long> last;
            for (long N = 1; N <= 6; ++N) {
                const auto v = valuation(level_integral(Polynomial::monomial(n), Measure::bosonic(), p, N) - bernoulli(n), p);
                const std::string at = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " N=" + std::to_string(N);
                if ((N > 1 && !last && v) || (last && v && *v < *last)) return "valuation decreased at " + at;
                if (v && *v < 1) below_one += (below_one.empty() ? "" : ", ") + at + " (valuation " + std::to_string(*v) + ")";
                last = v;
            }
        }
    }
    if (!below_one.empty()) return "nondecreasing everywhere, but valuation < 1 at " + below_one;
    return {};
}

long descents_runs(long n, long k) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        long runs = 1;
        for (long i = 1; i < n; ++i) runs += perm[i] < perm[i - 1];
        count += runs == k;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

long ordered_set_partitions(long n) {
    // Surjections from an n-set onto an initial segment {0..b-1}.
    long count = 0;
    for (long b = 0; b <= n; ++b) {
        long total = 1;
        for (long i = 0; i < n; ++i) total *= b;
        for (long code = 0; code < total; ++code) {
            std::vector<bool> hit(b, false);
            long c = code;
            for (long i = 0; i < n; ++i, c /= b) hit[c % b] = true;
            if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) ++count;
        }
    }
    return count;
}

std::string criterion_oracles() {
    for (long n = 0; n <= 10; ++n) {
        Integer s = 0, a = 0;
        for (long m = 0; m <= 10000; ++m) {
            if (power_sum(n, m) != Rational(s)) return "power_sum n=" + std::to_string(n) + " m=" + std::to_string(m);
            if (alternating_power_sum(n, m) != Rational(a))
                return "alternating_power_sum n=" + std::to_string(n) + " m=" + std::to_string(m);
            const Integer t = int_pow(m, n);
            s += t;
            a += m % 2 ? -t : t;
        }
    }
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k)
            if (eulerian(n, k) != eulerian_explicit(n, k)) return "Eulerian explicit formula at " + std::to_string(n);
    for (long n = 1; n <= 7; ++n)
        for (long k = 1; k <= n; ++k)
            if (eulerian(n, k) != descents_runs(n, k)) return "Eulerian brute force at " + std::to_string(n);
    for (long n = 0; n <= 8; ++n)
        if (fubini(n) != ordered_set_partitions(n)) return "Fubini brute force at " + std::to_string(n);
    return {};
}

std::string criterion_cross_family() {
    for (long n = 0; n <= 20; ++n) {
        Rational d, c, b, s;
        for (long k = 0; k <= n; ++k) {
            d += stirling1(n, k) * bernoulli(k);
            c += stirling1(n, k) * euler(k);
            b += stirling1(n, k) / Rational(k + 1);
            s += sign_power(k) * Rational(factorial(k)) / Rational(k + 1) * stirling2(n, k);
        }
        const std::string at = " at n=" + std::to_string(n);
        if (d != daehee(n)) return "daehee" + at;
        if (c != changhee(n)) return "changhee" + at;
        if (b != cauchy(n)) return "cauchy" + at;
        if (s != bernoulli(n)) return "bernoulli" + at;
    }
    return {};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Y1, Y2, y1, y2 tables for n = 0..4", "exact", 1.0, criterion_tables},
        {2, "binomial integral closed forms, n <= 30", "exact", 1.0, criterion_binomial_integrals},
        {3, "identity suite I01-I35, n <= 15", "exact", 60.0, criterion_suite},
        {4, "bosonic level convergence, p in {3,5,7}, n <= 8, N <= 6", "exact valuations", 10.0,
         criterion_convergence},
        {5, "power sums, Eulerian and Fubini against oracles", "exact", 30.0, criterion_oracles},
        {6, "Daehee, Changhee, Cauchy and Bernoulli cross-family sums, n <= 20", "exact", 5.0,
         criterion_cross_family},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        clear_caches();
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            error = c.body();
        } catch (const std::exception& e) {
            error = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty() && seconds > c.limit_seconds) error = "time limit exceeded";
        const bool ok = error.empty();
        failures += !ok;
        std::printf("[%s] %d %s (tolerance: %s; %.3f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                    c.title.c_str(), c.tolerance.c_str(), seconds, c.limit_seconds, ok ? "" : ": ", error.c_str());
    }
    std::printf("%s: %zu/%zu criteria\n", failures ? "FAIL" : "PASS", criteria.size() - failures, criteria.size());
    return failures ? 1 : 0;
}
