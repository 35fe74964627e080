#include "qpkg/tline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "qpkg/constants.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qpkg {

using constants::pi;

void CpwGeometry::validate() const {
    if (!(center_width > 0 && gap > 0)) throw std::invalid_argument("w and s must be positive");
    if (!(substrate_er >= 1)) throw std::invalid_argument("substrate_er must be >= 1");
}

double elliptic_k(double k) {
    if (!(k >= 0.0 && k < 1.0)) throw std::domain_error("elliptic_k requires 0 <= k < 1");
    // K(k) = pi / (2 * AGM(1, k')), iterated to 1e-12
    double a = 1.0;
    double b = std::sqrt(1.0 - k * k);
    while (std::abs(a - b) > 1e-12 * a) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return pi / (2.0 * a);
}

CpwParameters cpw_parameters(const CpwGeometry& g) {
    g.validate();
    const double k = g.center_width / (g.center_width + 2.0 * g.gap);
    const double kp = std::sqrt(1.0 - k * k);
    const double eeff = 0.5 * (g.substrate_er + 1.0);
    const double z0 = 30.0 * pi / std::sqrt(eeff) * elliptic_k(kp) / elliptic_k(k);
    return {z0, eeff};
}

void element_abcd(const NetworkElement& e, double f, Complex out[4]) {
    const double w = 2.0 * pi * f;
    std::visit(
        [&](const auto& el) {
            using T = std::decay_t<decltype(el)>;
            if constexpr (std::is_same_v<T, Line>) {
                const double beta = w * std::sqrt(el.eeff) / constants::c;
                const double alpha = el.loss_db_per_m * std::log(10.0) / 20.0;
                const Complex gl = Complex(alpha, beta) * el.length;
                const Complex ch = std::cosh(gl), sh = std::sinh(gl);
                out[0] = ch;
                out[1] = el.z0 * sh;
                out[2] = sh / el.z0;
                out[3] = ch;
            } else if constexpr (std::is_same_v<T, SeriesImpedance>) {
                out[0] = 1.0; out[1] = el.z; out[2] = 0.0; out[3] = 1.0;
            } else if constexpr (std::is_same_v<T, ShuntAdmittance>) {
                out[0] = 1.0; out[1] = 0.0; out[2] = el.y; out[3] = 1.0;
            } else if constexpr (std::is_same_v<T, SeriesInductor>) {
                out[0] = 1.0; out[1] = Complex(0.0, w * el.l); out[2] = 0.0; out[3] = 1.0;
            } else {
                out[0] = 1.0; out[1] = 0.0; out[2] = Complex(0.0, w * el.c); out[3] = 1.0;
            }
        },
        e);
}

namespace {

void cascade_point(const std::vector<NetworkElement>& elements, double f, double z_ref,
                   Complex s_out[4]) {
    Complex m[4] = {1.0, 0.0, 0.0, 1.0};
    Complex e[4];
    for (const auto& el : elements) {
        element_abcd(el, f, e);
        const Complex a = m[0] * e[0] + m[1] * e[2];
        const Complex b = m[0] * e[1] + m[1] * e[3];
        const Complex c = m[2] * e[0] + m[3] * e[2];
        const Complex d = m[2] * e[1] + m[3] * e[3];
        m[0] = a; m[1] = b; m[2] = c; m[3] = d;
    }
    const Complex den = m[0] + m[1] / z_ref + m[2] * z_ref + m[3];
    s_out[0] = (m[0] + m[1] / z_ref - m[2] * z_ref - m[3]) / den;
    s_out[1] = 2.0 * (m[0] * m[3] - m[1] * m[2]) / den;
    s_out[2] = 2.0 / den;
    s_out[3] = (-m[0] + m[1] / z_ref - m[2] * z_ref + m[3]) / den;
}

FrequencyResponse cascade_impl(const std::vector<NetworkElement>& elements,
                               const std::vector<double>& freqs, double z_ref, bool parallel) {
    if (elements.empty()) throw std::invalid_argument("cascade requires a non-empty element list");
    if (!(z_ref > 0)) throw std::invalid_argument("z_ref must be positive");
    FrequencyResponse resp;
    resp.port_count = 2;
    resp.representation = Representation::S;
    resp.z_ref = z_ref;
    resp.freqs = freqs;
    resp.data.resize(4 * freqs.size());
    const std::int64_t n = static_cast<std::int64_t>(freqs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (std::int64_t i = 0; i < n; ++i)
        cascade_point(elements, freqs[i], z_ref, &resp.data[4 * i]);
    resp.validate();
    return resp;
}

}  // namespace

FrequencyResponse cascade(const std::vector<NetworkElement>& elements,
                          const std::vector<double>& freqs, double z_ref) {
    return cascade_impl(elements, freqs, z_ref, true);
}

FrequencyResponse cascade_serial(const std::vector<NetworkElement>& elements,
                                 const std::vector<double>& freqs, double z_ref) {
    return cascade_impl(elements, freqs, z_ref, false);
}

std::vector<double> tsv_transition_reflection(double series_l, double shunt_c, double z_ref,
                                              const std::vector<double>& freqs) {
    if (series_l < 0 || shunt_c < 0) throw std::domain_error("series_l and shunt_c must be >= 0");
    const std::vector<NetworkElement> net = {SeriesInductor{series_l / 2.0},
                                             ShuntCapacitor{shunt_c},
                                             SeriesInductor{series_l / 2.0}};
    const FrequencyResponse s = cascade(net, freqs, z_ref);
    std::vector<double> out(freqs.size());
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        const double mag = std::abs(s.at(i, 0, 0));
        out[i] = std::max(20.0 * std::log10(std::max(mag, 0.0)), -200.0);
    }
    return out;
}

void ResonatorSpec::validate() const {
    if (!(z0 > 0)) throw std::invalid_argument("z0 must be positive");
    if (!(eeff >= 1)) throw std::invalid_argument("eeff must be >= 1");
    if (!(length > 0)) throw std::invalid_argument("length must be positive");
    for (const auto& loss : losses) {
        if (loss.position < 0 || loss.position > length)
            throw std::invalid_argument("loss position outside the resonator");
        std::visit(
            [](const auto& k) {
                using T = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<T, SeriesResistance>) {
                    if (k.r < 0) throw std::invalid_argument("negative series resistance");
                } else if constexpr (std::is_same_v<T, ShuntConductance>) {
                    if (k.g < 0) throw std::invalid_argument("negative shunt conductance");
                } else {
                    if (k.participation < 0 || k.tan_delta < 0)
                        throw std::invalid_argument("negative dielectric loss parameters");
                }
            },
            loss.kind);
    }
}

double ResonatorSpec::inductance_per_m() const { return z0 * std::sqrt(eeff) / constants::c; }

double ResonatorSpec::capacitance_per_m() const { return std::sqrt(eeff) / (z0 * constants::c); }

double quarter_wave_frequency(const ResonatorSpec& spec) {
    spec.validate();
    return constants::c / (4.0 * spec.length * std::sqrt(spec.eeff));
}

double q_contribution(const ResonatorSpec& spec, const LossElement& loss) {
    spec.validate();
    const double w0 = 2.0 * pi * quarter_wave_frequency(spec);
    const double arg = pi * loss.position / (2.0 * spec.length);
    return std::visit(
        [&](const auto& k) -> double {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, SeriesResistance>) {
                if (k.r == 0) return INFINITY;
                const double cs = std::cos(arg);
                if (cs == 0.0) return INFINITY;  // current null
                return w0 * spec.inductance_per_m() * spec.length / (2.0 * k.r * cs * cs);
            } else if constexpr (std::is_same_v<T, ShuntConductance>) {
                if (k.g == 0) return INFINITY;
                const double sn = std::sin(arg);
                if (sn == 0.0) return INFINITY;  // voltage null
                return w0 * spec.capacitance_per_m() * spec.length / (2.0 * k.g * sn * sn);
            } else {
                const double loss_tangent = k.participation * k.tan_delta;
                return loss_tangent == 0.0 ? INFINITY : 1.0 / loss_tangent;
            }
        },
        loss.kind);
}

double composite_q(const std::vector<double>& contributions) {
    double inv = 0.0;
    for (double q : contributions) {
        if (std::isinf(q)) continue;
        if (!(q > 0)) throw std::domain_error("quality factors must be positive or infinite");
        inv += 1.0 / q;
    }
    return inv == 0.0 ? INFINITY : 1.0 / inv;
}

double bound_component_loss(double measured_q, double baseline_q) {
    if (!(measured_q > 0) || !(baseline_q > 0))
        throw std::domain_error("quality factors must be positive");
    if (measured_q >= baseline_q) return INFINITY;  // no additional loss resolvable
    return 1.0 / (1.0 / measured_q - 1.0 / baseline_q);
}

}  // namespace qpkg
