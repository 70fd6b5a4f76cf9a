// Timings of the serial reference kernels against the OpenMP and closed-form ones.
#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "volkenborn/combinatorics.hpp"
#include "volkenborn/identities.hpp"
#include "volkenborn/integrals.hpp"
#include "volkenborn/polynomial.hpp"
#include "volkenborn/sequences.hpp"

using namespace volkenborn;

namespace {

double seconds(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool agree) {
    std::printf("%-28s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, parallel > 0 ? serial / parallel : 0.0,
                agree ? "agree" : "DISAGREE");
}

}  // namespace

int main() {
    const int threads = omp_get_max_threads();
    std::printf("threads: %d\n", threads);
    std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "openmp s", "speedup");

    IdentityReport serial_report, parallel_report;
    clear_caches();
    const double s1 = seconds([&] { serial_report = verify_all(15, 1); });
    clear_caches();
    const double p1 = seconds([&] { parallel_report = verify_all(15, threads < 2 ? 2 : threads); });
    row("identity suite (n <= 15)", s1, p1, serial_report.to_json() == parallel_report.to_json());

    const Polynomial f = Polynomial::parse_list("1,-2,0,3");
    Rational qs, qp;
    const double s2 = seconds([&] { qs = q_level_serial(f, Rational(4), 3, 6); });
    const double p2 = seconds([&] { qp = q_level_parallel(f, Rational(4), 3, 6); });
    row("q-level sum (p=3, N=6)", s2, p2, qs == qp);

    Rational closed, loop;
    const long m = 10000;
    const double s3 = seconds([&] {
        for (long x = 0; x < m; ++x) loop += Rational(int_pow(x, 10));
    });
    const double p3 = seconds([&] { closed = power_sum(10, Integer(m)); });
    std::printf("%-28s %10.4f %10.4f %8.2fx  %s\n", "power sum loop vs closed", s3, p3, p3 > 0 ? s3 / p3 : 0.0,
                closed == loop ? "agree" : "DISAGREE");
    return 0;
}
