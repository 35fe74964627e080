#include "qpkg/resonance.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qpkg/constants.hpp"

namespace qpkg {

using constants::hbar;
using constants::kB;
using constants::pi;

double NotchParams::ql() const { return 1.0 / (1.0 / qi + 1.0 / qc); }

namespace {

Complex notch_value(double f, double f0, double ql, double amp, double phi) {
    const Complex rot = std::polar(amp, phi);
    return 1.0 - rot / Complex(1.0, 2.0 * ql * (f - f0) / f0);
}

}  // namespace

std::vector<Complex> simulate_notch_serial(const NotchParams& p, const std::vector<double>& freqs) {
    if (!(p.qi > 0) || !(p.qc > 0)) throw std::domain_error("Qi and Qc must be positive");
    if (!(p.f0 > 0)) throw std::domain_error("f0 must be positive");
    const double ql = p.ql();
    const double amp = ql / p.qc;
    std::vector<Complex> out(freqs.size());
    for (std::size_t i = 0; i < freqs.size(); ++i)
        out[i] = notch_value(freqs[i], p.f0, ql, amp, p.phi);
    return out;
}

std::vector<Complex> simulate_notch(const NotchParams& p, const std::vector<double>& freqs) {
    if (!(p.qi > 0) || !(p.qc > 0)) throw std::domain_error("Qi and Qc must be positive");
    if (!(p.f0 > 0)) throw std::domain_error("f0 must be positive");
    const double ql = p.ql();
    const double amp = ql / p.qc;
    std::vector<Complex> out(freqs.size());
    const std::int64_t n = static_cast<std::int64_t>(freqs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t i = 0; i < n; ++i)
        out[i] = notch_value(freqs[i], p.f0, ql, amp, p.phi);
    return out;
}

void add_trace_noise(std::vector<Complex>& trace, double level_db, std::uint64_t seed) {
    const double sigma = std::pow(10.0, level_db / 20.0);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, sigma);
    for (Complex& z : trace) z += Complex(gauss(rng), gauss(rng));
}

namespace {

struct Circle {
    double xc, yc, r, rms;
};

// Kasa algebraic circle fit.
Circle fit_circle(const std::vector<Complex>& z) {
    Eigen::MatrixXd a(z.size(), 3);
    Eigen::VectorXd b(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double x = z[i].real(), y = z[i].imag();
        a(i, 0) = 2.0 * x;
        a(i, 1) = 2.0 * y;
        a(i, 2) = 1.0;
        b(i) = x * x + y * y;
    }
    Eigen::Vector3d sol = a.colPivHouseholderQr().solve(b);
    Circle c;
    c.xc = sol(0);
    c.yc = sol(1);
    const double r2 = sol(2) + c.xc * c.xc + c.yc * c.yc;
    c.r = r2 > 0 ? std::sqrt(r2) : 0.0;
    double acc = 0.0;
    for (const Complex& p : z) {
        const double d = std::abs(p - Complex(c.xc, c.yc)) - c.r;
        acc += d * d;
    }
    c.rms = std::sqrt(acc / z.size());
    return c;
}

// theta(f) = theta0 - 2 atan(2 Ql (f - f0)/f0), Gauss-Newton.
void phase_fit(const std::vector<double>& freqs, const std::vector<double>& theta, double& f0,
               double& ql, double& theta0) {
    const std::size_t n = freqs.size();
    for (int iter = 0; iter < 60; ++iter) {
        Eigen::MatrixXd j(n, 3);
        Eigen::VectorXd r(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = 2.0 * ql * (freqs[i] - f0) / f0;
            const double denom = 1.0 + t * t;
            r(i) = theta[i] - (theta0 - 2.0 * std::atan(t));
            j(i, 0) = 1.0;                                             // d/dtheta0
            j(i, 1) = 2.0 / denom * 2.0 * (freqs[i] - f0) / f0;        // -d/dQl
            j(i, 2) = -2.0 / denom * 2.0 * ql * freqs[i] / (f0 * f0);  // -d/df0
        }
        j.col(1) *= -1.0;
        j.col(2) *= -1.0;
        Eigen::Vector3d step = j.colPivHouseholderQr().solve(r);
        theta0 += step(0);
        ql += step(1);
        f0 += step(2);
        ql = std::max(ql, 1.0);
        if (step.cwiseAbs().maxCoeff() < 1e-14 * std::abs(f0)) break;
    }
}

}  // namespace

NotchFitResult fit_notch(const std::vector<double>& freqs, const std::vector<Complex>& trace) {
    if (freqs.size() != trace.size()) throw std::invalid_argument("trace/frequency size mismatch");
    if (freqs.size() < 20) throw std::invalid_argument("fit_notch needs at least 20 points");

    const Circle circle = fit_circle(trace);
    // noise floor from point-to-point scatter
    std::vector<double> steps;
    for (std::size_t i = 1; i < trace.size(); ++i) steps.push_back(std::abs(trace[i] - trace[i - 1]));
    std::nth_element(steps.begin(), steps.begin() + steps.size() / 2, steps.end());
    const double noise = steps[steps.size() / 2] / std::sqrt(2.0);
    if (!(circle.r > 1e-9) || circle.r < 3.0 * noise || circle.r < 2.0 * circle.rms)
        throw std::runtime_error("no resonance detected (circle radius below noise floor)");

    const Complex zc(circle.xc, circle.yc);
    double amp = 2.0 * circle.r;        // Ql/Qc
    double phi = std::arg(1.0 - zc);

    // initial f0: point farthest from the off-resonant value 1
    std::size_t imax = 0;
    double dmax = 0.0;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const double d = std::abs(trace[i] - 1.0);
        if (d > dmax) { dmax = d; imax = i; }
    }
    double f0 = freqs[imax];
    // initial Ql from the |S21 - 1| = amp/2 crossings: spacing sqrt(3) f0/Ql
    double f_lo = freqs.front(), f_hi = freqs.back();
    for (std::size_t i = imax; i-- > 0;)
        if (std::abs(trace[i] - 1.0) < 0.5 * dmax) { f_lo = freqs[i]; break; }
    for (std::size_t i = imax + 1; i < trace.size(); ++i)
        if (std::abs(trace[i] - 1.0) < 0.5 * dmax) { f_hi = freqs[i]; break; }
    double ql = std::sqrt(3.0) * f0 / std::max(f_hi - f_lo, 1e-12 * f0);

    // phase-vs-frequency fit around the circle center
    std::vector<double> theta(trace.size());
    double prev = std::arg(trace[0] - zc);
    for (std::size_t i = 0; i < trace.size(); ++i) {
        double th = std::arg(trace[i] - zc);
        while (th - prev > pi) th -= 2.0 * pi;
        while (th - prev < -pi) th += 2.0 * pi;
        theta[i] = th;
        prev = th;
    }
    double theta0 = theta[imax];
    phase_fit(freqs, theta, f0, ql, theta0);

    // one Gauss-Newton refinement pass over the full complex trace
    const std::size_t n = freqs.size();
    for (int iter = 0; iter < 50; ++iter) {
        Eigen::MatrixXd j(2 * n, 4);
        Eigen::VectorXd r(2 * n);
        const Complex rot = std::polar(amp, phi);
        for (std::size_t i = 0; i < n; ++i) {
            const Complex den(1.0, 2.0 * ql * (freqs[i] - f0) / f0);
            const Complex model = 1.0 - rot / den;
            const Complex res = trace[i] - model;
            // derivatives of the model
            const Complex d_amp = -rot / (amp * den);
            const Complex d_phi = -Complex(0, 1) * rot / den;
            const Complex d_ql = rot * Complex(0, 2.0 * (freqs[i] - f0) / f0) / (den * den);
            const Complex d_f0 = rot * Complex(0, -2.0 * ql * freqs[i] / (f0 * f0)) / (den * den);
            r(2 * i) = res.real();
            r(2 * i + 1) = res.imag();
            j(2 * i, 0) = d_f0.real();  j(2 * i + 1, 0) = d_f0.imag();
            j(2 * i, 1) = d_ql.real();  j(2 * i + 1, 1) = d_ql.imag();
            j(2 * i, 2) = d_amp.real(); j(2 * i + 1, 2) = d_amp.imag();
            j(2 * i, 3) = d_phi.real(); j(2 * i + 1, 3) = d_phi.imag();
        }
        Eigen::Vector4d step = j.colPivHouseholderQr().solve(r);
        f0 += step(0);
        ql += step(1);
        amp += step(2);
        phi += step(3);
        ql = std::max(ql, 1.0);
        amp = std::max(amp, 1e-12);
        if (step.cwiseAbs().maxCoeff() < 1e-13) break;
    }

    NotchFitResult out;
    out.f0 = f0;
    out.ql = ql;
    out.qc = ql / amp;
    // amp >= 1 would mean no internal loss resolvable
    out.qi = amp < 1.0 ? 1.0 / (1.0 / ql - 1.0 / out.qc) : INFINITY;
    out.phi = phi;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += std::norm(trace[i] - notch_value(freqs[i], f0, ql, amp, phi));
    out.residual = std::sqrt(acc / n);
    if (out.f0 < freqs.front() || out.f0 > freqs.back())
        throw std::runtime_error("fitted resonance lies outside the trace span");
    return out;
}

double photon_number(double power_in, double f0, double ql, double qc) {
    if (power_in < 0) throw std::domain_error("power must be >= 0");
    if (!(f0 > 0 && ql > 0 && qc > 0)) throw std::domain_error("f0, Ql, Qc must be positive");
    const double w0 = 2.0 * pi * f0;
    return 2.0 * power_in * ql * ql / (hbar * w0 * w0 * qc);
}

double power_for_photons(double n_bar, double f0, double ql, double qc) {
    if (n_bar < 0) throw std::domain_error("photon number must be >= 0");
    if (!(f0 > 0 && ql > 0 && qc > 0)) throw std::domain_error("f0, Ql, Qc must be positive");
    const double w0 = 2.0 * pi * f0;
    return n_bar * hbar * w0 * w0 * qc / (2.0 * ql * ql);
}

void TlsModelParams::validate() const {
    if (delta0 < 0 || delta_other < 0) throw std::invalid_argument("loss tangents must be >= 0");
    if (!(n_c > 0)) throw std::invalid_argument("n_c must be positive");
    if (!(beta > 0 && beta <= 1)) throw std::invalid_argument("beta must be in (0, 1]");
}

double tls_quality_factor(const TlsModelParams& params, double n_bar, double temperature,
                          double f) {
    params.validate();
    if (!(temperature > 0)) throw std::domain_error("temperature must be positive");
    if (n_bar < 0) throw std::domain_error("photon number must be >= 0");
    const double x = hbar * 2.0 * pi * f / (2.0 * kB * temperature);
    const double delta = params.delta0 * std::tanh(x) / std::pow(1.0 + n_bar / params.n_c, params.beta) +
                         params.delta_other;
    return delta == 0.0 ? INFINITY : 1.0 / delta;
}

}  // namespace qpkg
