#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "qpkg/resonance.hpp"

using namespace qpkg;

namespace {

std::vector<double> span(double f0, double ql, int n) {
    const double half = 10.0 * f0 / ql;
    std::vector<double> freqs(n);
    for (int i = 0; i < n; ++i) freqs[i] = f0 - half + 2.0 * half * i / (n - 1);
    return freqs;
}

}  // namespace

TEST_CASE("parallel and serial notch sweeps agree bitwise") {
    const NotchParams p{6e9, 2e5, 1e5, 0.2};
    const auto freqs = span(p.f0, p.ql(), 4001);
    const auto a = simulate_notch(p, freqs);
    const auto b = simulate_notch_serial(p, freqs);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("notch trace hits 1 - Ql/Qc at resonance and ~1 far away") {
    const NotchParams p{5e9, 1e5, 1e5, 0.0};
    const auto s = simulate_notch(p, {5e9, 5e9 * (1.0 + 0.1)});
    CHECK(std::abs(s[0] - Complex(0.5, 0.0)) < 1e-9);  // Ql/Qc = 0.5
    CHECK(std::abs(s[1] - Complex(1.0, 0.0)) < 1e-3);
}

TEST_CASE("fit recovers simulation parameters on a clean trace") {
    const NotchParams p{6.2e9, 3.3e5, 1.4e5, -0.25};
    const auto freqs = span(p.f0, p.ql(), 401);
    const auto fit = fit_notch(freqs, simulate_notch(p, freqs));
    CHECK(fit.f0 == doctest::Approx(p.f0).epsilon(1e-9));
    CHECK(fit.qi == doctest::Approx(p.qi).epsilon(1e-6));
    CHECK(fit.qc == doctest::Approx(p.qc).epsilon(1e-6));
    CHECK(fit.phi == doctest::Approx(p.phi).epsilon(1e-6));
    CHECK(fit.residual < 1e-10);
}

TEST_CASE("seeded noise is reproducible and fit degrades gracefully") {
    const NotchParams p{5.5e9, 1e5, 8e4, 0.1};
    const auto freqs = span(p.f0, p.ql(), 801);
    auto t1 = simulate_notch(p, freqs);
    auto t2 = simulate_notch(p, freqs);
    add_trace_noise(t1, -60.0, 42);
    add_trace_noise(t2, -60.0, 42);
    for (std::size_t i = 0; i < t1.size(); ++i) CHECK(t1[i] == t2[i]);
    auto t3 = simulate_notch(p, freqs);
    add_trace_noise(t3, -60.0, 43);
    CHECK(t1[0] != t3[0]);

    const auto fit = fit_notch(freqs, t1);
    CHECK(fit.qi == doctest::Approx(p.qi).epsilon(0.05));
    CHECK(fit.qc == doctest::Approx(p.qc).epsilon(0.05));
}

TEST_CASE("pure noise is not mistaken for a resonance") {
    std::vector<double> freqs(401);
    for (int i = 0; i < 401; ++i) freqs[i] = 5e9 + 1e6 * i;
    std::vector<Complex> trace(401, Complex(1.0, 0.0));
    add_trace_noise(trace, -60.0, 7);
    CHECK_THROWS_AS(fit_notch(freqs, trace), std::runtime_error);
}

TEST_CASE("photon number calibration is linear and invertible") {
    const double f0 = 6e9, ql = 6.6667e4, qc = 1e5;
    const double p1 = power_for_photons(1.0, f0, ql, qc);
    CHECK(photon_number(p1, f0, ql, qc) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(photon_number(2.0 * p1, f0, ql, qc) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(photon_number(0.0, f0, ql, qc) == 0.0);
    CHECK_THROWS(photon_number(-1e-15, f0, ql, qc));
}

TEST_CASE("TLS loss saturates with power and with temperature") {
    TlsModelParams tls{2e-6, 10.0, 0.5, 1e-7};
    const double f = 6e9;
    double prev = 0.0;
    for (double n : {0.01, 1.0, 100.0, 1e4, 1e6}) {
        const double q = tls_quality_factor(tls, n, 0.02, f);
        CHECK(q > prev);  // more photons, less TLS loss
        prev = q;
    }
    // fully saturated limit: only delta_other remains
    CHECK(tls_quality_factor(tls, 1e12, 0.02, f) == doctest::Approx(1e7).epsilon(0.01));
    // hot limit: tanh -> 0
    CHECK(tls_quality_factor(tls, 0.0, 10.0, f) > tls_quality_factor(tls, 0.0, 0.02, f));
    CHECK_THROWS(tls_quality_factor(TlsModelParams{1e-6, -1.0, 0.5, 0.0}, 0.0, 0.02, f));
}
