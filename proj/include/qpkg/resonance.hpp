#pragma once

#include <cstdint>
#include <vector>

#include "qpkg/network.hpp"

namespace qpkg {

/// Notch (side-coupled) resonator model,
///   S21(f) = 1 - (Ql/Qc) e^{j phi} / (1 + 2 j Ql (f - f0)/f0),
/// with 1/Ql = 1/Qi + 1/Qc.
struct NotchParams {
    double f0 = 0;    // Hz
    double qi = 0;
    double qc = 0;
    double phi = 0;   // impedance-mismatch rotation, rad

    double ql() const;
};

std::vector<Complex> simulate_notch(const NotchParams& p, const std::vector<double>& freqs);
std::vector<Complex> simulate_notch_serial(const NotchParams& p, const std::vector<double>& freqs);

/// Seeded additive complex Gaussian noise; level is relative to |S21| = 1
/// (e.g. -60 dB -> sigma 1e-3 per quadrature).
void add_trace_noise(std::vector<Complex>& trace, double level_db, std::uint64_t seed);

struct NotchFitResult {
    double f0 = 0;
    double qi = 0, qc = 0, ql = 0;
    double phi = 0;
    double residual = 0;  // RMS of |S21_fit - S21_data|
};

/// Circle fit in the complex plane, phase-vs-frequency fit, then one
/// Gauss-Newton refinement pass. Throws when no resonance is detected
/// (circle radius indistinguishable from the noise floor).
NotchFitResult fit_notch(const std::vector<double>& freqs, const std::vector<Complex>& trace);

/// Mean intra-resonator photon number, n = 2 P Ql^2 / (hbar w0^2 Qc).
double photon_number(double power_in, double f0, double ql, double qc);
/// Inverse: input power producing a given mean photon number.
double power_for_photons(double n_bar, double f0, double ql, double qc);

/// TLS loss model: delta(n, T) = delta0 tanh(hbar w / 2 kB T)/(1 + n/n_c)^beta
/// + delta_other; Qi = 1/delta.
struct TlsModelParams {
    double delta0 = 0;       // intrinsic TLS loss tangent
    double n_c = 1;          // critical photon number
    double beta = 0.5;       // saturation exponent, (0, 1]
    double delta_other = 0;  // power-independent loss

    void validate() const;
};

double tls_quality_factor(const TlsModelParams& params, double n_bar, double temperature,
                          double f);

}  // namespace qpkg
