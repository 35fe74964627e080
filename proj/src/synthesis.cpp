#include "qpkg/synthesis.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qpkg/constants.hpp"

namespace qpkg {

using constants::pi;

Complex RationalModel::evaluate(Complex s) const {
    Complex y = s * capacitive_term + direct_term;
    if (inverse_inductance_term != 0.0) y += inverse_inductance_term / s;
    for (std::size_t i = 0; i < poles.size(); ++i) y += residues[i] / (s - poles[i]);
    return y;
}

Complex RationalModel::evaluate_at_hz(double f) const {
    return evaluate(Complex(0.0, 2.0 * pi * f));
}

double RationalModel::im_slope(double omega) const {
    // d/dw Im Y(jw) = Im( j * dY/ds at s = jw )  = Re( dY/ds )
    const Complex s(0.0, omega);
    Complex dy = capacitive_term;
    if (inverse_inductance_term != 0.0) dy -= inverse_inductance_term / (s * s);
    for (std::size_t i = 0; i < poles.size(); ++i) {
        const Complex d = s - poles[i];
        dy -= residues[i] / (d * d);
    }
    return dy.real();
}

void RationalModel::validate() const {
    if (poles.size() != residues.size())
        throw std::invalid_argument("poles/residues length mismatch");
    std::size_t i = 0;
    while (i < poles.size()) {
        if (poles[i].real() > 0) throw std::invalid_argument("pole in the right half-plane");
        if (poles[i].imag() != 0.0) {
            if (i + 1 >= poles.size() || poles[i + 1] != std::conj(poles[i]) ||
                residues[i + 1] != std::conj(residues[i]))
                throw std::invalid_argument("complex poles must occur in conjugate pairs");
            i += 2;
        } else {
            ++i;
        }
    }
}

namespace {

bool is_pair_head(const std::vector<Complex>& poles, std::size_t i) {
    return poles[i].imag() > 0.0;
}

// Evaluate basis columns at s for the current pole set; pairs are stored as
// (p, conj p) with Im p > 0 first.
void basis_row(const std::vector<Complex>& poles, Complex s, std::vector<Complex>& row) {
    row.resize(poles.size());
    for (std::size_t i = 0; i < poles.size(); ++i) {
        if (is_pair_head(poles, i)) {
            const Complex t1 = 1.0 / (s - poles[i]);
            const Complex t2 = 1.0 / (s - std::conj(poles[i]));
            row[i] = t1 + t2;
            row[i + 1] = Complex(0, 1) * t1 - Complex(0, 1) * t2;
            ++i;
        } else if (poles[i].imag() == 0.0) {
            row[i] = 1.0 / (s - poles[i]);
        }
    }
}

std::vector<Complex> initial_poles(double f_min, double f_max, int order) {
    // log-spaced conjugate pairs across the band, Q = 100
    std::vector<Complex> poles;
    const int pairs = order / 2;
    for (int i = 0; i < pairs; ++i) {
        const double t = pairs == 1 ? 0.5 : static_cast<double>(i) / (pairs - 1);
        const double f = f_min * std::pow(f_max / f_min, t);
        const double w = 2.0 * pi * f;
        poles.emplace_back(-w / 200.0, w);
        poles.emplace_back(-w / 200.0, -w);
    }
    if (order % 2 == 1) poles.emplace_back(-2.0 * pi * std::sqrt(f_min * f_max), 0.0);
    return poles;
}

std::vector<Complex> relocate_poles(const std::vector<Complex>& poles,
                                    const Eigen::VectorXd& sigma_residues) {
    const int n = static_cast<int>(poles.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd c = sigma_residues;
    for (int i = 0; i < n; ++i) {
        if (is_pair_head(poles, static_cast<std::size_t>(i))) {
            a(i, i) = poles[i].real();
            a(i, i + 1) = poles[i].imag();
            a(i + 1, i) = -poles[i].imag();
            a(i + 1, i + 1) = poles[i].real();
            b(i) = 2.0;
            b(i + 1) = 0.0;
            ++i;
        } else {
            a(i, i) = poles[i].real();
            b(i) = 1.0;
        }
    }
    const Eigen::MatrixXd h = a - b * c.transpose();
    Eigen::EigenSolver<Eigen::MatrixXd> es(h);
    std::vector<Complex> out(n);
    for (int i = 0; i < n; ++i) {
        Complex p = es.eigenvalues()(i);
        if (p.real() > 0) p = Complex(-p.real(), p.imag());  // flip into the LHP
        out[static_cast<std::size_t>(i)] = p;
    }
    // canonical order: pairs (Im > 0 first) sorted by |Im|, then real poles
    std::sort(out.begin(), out.end(), [](const Complex& l, const Complex& r) {
        const double li = std::abs(l.imag()), ri = std::abs(r.imag());
        if (li != ri) return li > ri;
        if (l.imag() != r.imag()) return l.imag() > r.imag();
        return l.real() < r.real();
    });
    // pair up conjugates exactly (eigenvalues of a real matrix come in pairs)
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
        if (out[i].imag() > 0.0) {
            out[i + 1] = std::conj(out[i]);
            ++i;
        }
    }
    // real poles last, ascending magnitude
    std::stable_partition(out.begin(), out.end(),
                          [](const Complex& p) { return p.imag() != 0.0; });
    return out;
}

struct FitTerms {
    std::vector<Complex> residues;
    double direct = 0, capacitive = 0, inv_inductance = 0;
    double rms_rel_error = 0;
};

// Linear LS solve for residues and the polynomial terms with poles fixed.
// When sigma is true, also solves the scaled sigma residues and returns them.
FitTerms solve_terms(const std::vector<Complex>& poles, const FrequencyResponse& resp,
                     const VectorFitOptions& opt, bool with_sigma,
                     Eigen::VectorXd* sigma_residues) {
    const int np = static_cast<int>(poles.size());
    const int extra = opt.fit_shunt_inductor ? 3 : 2;  // d, e (and 1/s)
    const int ncols = np + extra + (with_sigma ? np : 0);
    const std::size_t m = resp.size();

    Eigen::MatrixXd a(2 * m, ncols);
    Eigen::VectorXd b(2 * m);
    std::vector<Complex> row;
    for (std::size_t k = 0; k < m; ++k) {
        const Complex s(0.0, 2.0 * pi * resp.freqs[k]);
        const Complex y = resp.at(k, 0, 0);
        const double w = opt.relative_weighting ? 1.0 / std::max(std::abs(y), 1e-300) : 1.0;
        basis_row(poles, s, row);
        for (int j = 0; j < np; ++j) {
            const Complex v = row[static_cast<std::size_t>(j)] * w;
            a(2 * k, j) = v.real();
            a(2 * k + 1, j) = v.imag();
        }
        Complex v = Complex(w, 0);
        a(2 * k, np) = v.real();
        a(2 * k + 1, np) = v.imag();
        v = s * w;
        a(2 * k, np + 1) = v.real();
        a(2 * k + 1, np + 1) = v.imag();
        if (opt.fit_shunt_inductor) {
            v = w / s;
            a(2 * k, np + 2) = v.real();
            a(2 * k + 1, np + 2) = v.imag();
        }
        if (with_sigma) {
            for (int j = 0; j < np; ++j) {
                const Complex sv = -row[static_cast<std::size_t>(j)] * y * w;
                a(2 * k, np + extra + j) = sv.real();
                a(2 * k + 1, np + extra + j) = sv.imag();
            }
        }
        const Complex rhs = y * w;
        b(2 * k) = rhs.real();
        b(2 * k + 1) = rhs.imag();
    }

    // column scaling keeps the system well conditioned across the hugely
    // different magnitudes of the basis terms
    Eigen::VectorXd scale(ncols);
    for (int j = 0; j < ncols; ++j) {
        const double n = a.col(j).norm();
        scale(j) = n > 0 ? n : 1.0;
        a.col(j) /= scale(j);
    }
    Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
    x = x.cwiseQuotient(scale);

    FitTerms out;
    out.residues.resize(static_cast<std::size_t>(np));
    for (std::size_t i = 0; i < static_cast<std::size_t>(np); ++i) {
        if (is_pair_head(poles, i)) {
            out.residues[i] = Complex(x(static_cast<int>(i)), x(static_cast<int>(i) + 1));
            out.residues[i + 1] = std::conj(out.residues[i]);
            ++i;
        } else {
            out.residues[i] = x(static_cast<int>(i));
        }
    }
    out.direct = x(np);
    out.capacitive = x(np + 1);
    if (opt.fit_shunt_inductor) out.inv_inductance = x(np + 2);
    if (with_sigma && sigma_residues) *sigma_residues = x.tail(np);

    // RMS relative error of the residue model (sigma excluded)
    RationalModel model;
    model.poles = poles;
    model.residues = out.residues;
    model.direct_term = out.direct;
    model.capacitive_term = out.capacitive;
    model.inverse_inductance_term = out.inv_inductance;
    double acc = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const Complex y = resp.at(k, 0, 0);
        const Complex fit = model.evaluate(Complex(0.0, 2.0 * pi * resp.freqs[k]));
        acc += std::norm((fit - y) / std::max(std::abs(y), 1e-300));
    }
    out.rms_rel_error = std::sqrt(acc / m);
    return out;
}

}  // namespace

RationalModel vector_fit(const FrequencyResponse& resp, int order, double tol,
                         const VectorFitOptions& options) {
    resp.validate();
    if (resp.port_count != 1) throw std::invalid_argument("vector_fit expects a 1-port response");
    if (resp.representation != Representation::Y)
        throw std::invalid_argument("vector_fit expects admittance data (convert first)");
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    if (resp.size() < static_cast<std::size_t>(std::max(4 * order, 2)))
        throw std::invalid_argument("need at least 4*order frequency points");

    std::vector<Complex> poles = initial_poles(resp.freqs.front(), resp.freqs.back(), order);
    FitTerms terms;
    if (order > 0) {
        for (int iter = 0; iter < options.max_iterations; ++iter) {
            Eigen::VectorXd sigma;
            solve_terms(poles, resp, options, true, &sigma);
            const std::vector<Complex> next = relocate_poles(poles, sigma);
            double move = 0.0;
            for (std::size_t i = 0; i < poles.size(); ++i)
                move = std::max(move, std::abs(next[i] - poles[i]) / std::abs(next[i]));
            poles = next;
            if (move < 1e-10) break;
        }
    }
    terms = solve_terms(poles, resp, options, false, nullptr);
    if (terms.rms_rel_error > tol) {
        std::ostringstream os;
        os << "vector_fit: order " << order << " fit did not meet tolerance (rms relative error "
           << terms.rms_rel_error << " > " << tol << ")";
        throw std::runtime_error(os.str());
    }

    RationalModel model;
    model.poles = poles;
    model.residues = terms.residues;
    model.direct_term = terms.direct;
    model.capacitive_term = terms.capacitive;
    model.inverse_inductance_term = terms.inv_inductance;
    model.validate();
    return model;
}

RationalModel vector_fit_auto(const FrequencyResponse& resp, double tol, int max_order,
                              const VectorFitOptions& options) {
    std::string last_error;
    for (int order = 0; order <= max_order; order += 2) {
        try {
            return vector_fit(resp, order, tol, options);
        } catch (const std::runtime_error& e) {
            last_error = e.what();
        }
    }
    throw std::runtime_error("vector_fit_auto: no order up to " + std::to_string(max_order) +
                             " met tolerance; last: " + last_error);
}

Complex LumpedCircuit::admittance(Complex s) const {
    Complex y = s * shunt_capacitance + shunt_conductance;
    if (shunt_inductance != 0.0) y += 1.0 / (s * shunt_inductance);
    for (const auto& br : branches) {
        // series R + sL feeding (C parallel G)
        const Complex tail = s * br.c + br.g;
        const Complex z = Complex(br.r, 0) + s * br.l + (tail == 0.0 ? Complex(0) : 1.0 / tail);
        y += 1.0 / z;
    }
    return y;
}

Complex LumpedCircuit::admittance_at_hz(double f) const {
    return admittance(Complex(0.0, 2.0 * pi * f));
}

LumpedCircuit foster_synthesize(const RationalModel& model) {
    model.validate();
    std::vector<Complex> real_poles;
    for (std::size_t i = 0; i < model.poles.size(); ++i)
        if (model.poles[i].imag() == 0.0) real_poles.push_back(model.poles[i]);
    if (!real_poles.empty()) {
        std::ostringstream os;
        os << "foster_synthesize: real (overdamped) poles unsupported in branch mapping:";
        for (const Complex& p : real_poles) os << " " << p.real();
        throw std::runtime_error(os.str());
    }

    LumpedCircuit circuit;
    circuit.shunt_capacitance = model.capacitive_term;
    circuit.shunt_conductance = model.direct_term;
    circuit.shunt_inductance =
        model.inverse_inductance_term != 0.0 ? 1.0 / model.inverse_inductance_term : 0.0;
    if (circuit.shunt_capacitance < 0 || circuit.shunt_conductance < 0 ||
        circuit.shunt_inductance < 0)
        circuit.physical = false;

    for (std::size_t i = 0; i < model.poles.size(); ++i) {
        if (!(model.poles[i].imag() > 0.0)) continue;  // handle each pair once
        const Complex p = model.poles[i];
        const Complex r = model.residues[i];
        if (r == 0.0) continue;
        // pair admittance (a s + b) / (s^2 + c s + d)
        const double a = 2.0 * r.real();
        const double b = -2.0 * (r * std::conj(p)).real();
        const double c = -2.0 * p.real();
        const double d = std::norm(p);
        FosterBranch br;
        if (a == 0.0) {
            // residues purely imaginary: no series-RL realization; fold into a
            // degenerate branch with infinite L is impossible, flag instead
            br.physical = false;
            br.l = 0;
            circuit.physical = false;
            circuit.branches.push_back(br);
            continue;
        }
        br.l = 1.0 / a;
        br.r = br.l * c - b * br.l * br.l;           // R = L c - b L^2
        const double cap_den = br.l * (d - br.r * b);
        br.c = cap_den != 0.0 ? 1.0 / cap_den : 0.0;  // C = 1/(L (d - R b))
        br.g = b * br.l * br.c;                       // G = b L C
        br.physical = br.r >= 0 && br.l > 0 && br.c >= 0 && br.g >= 0;
        if (!br.physical) circuit.physical = false;
        circuit.branches.push_back(br);
    }
    return circuit;
}

std::vector<ModeSummary> extract_modes(const RationalModel& model, double f_lo, double f_hi,
                                       int grid_points) {
    if (!(f_lo > 0 && f_hi > f_lo)) throw std::invalid_argument("invalid band");
    if (grid_points < 2) throw std::invalid_argument("grid_points must be >= 2");

    auto im_y = [&](double f) { return model.evaluate_at_hz(f).imag(); };

    std::vector<ModeSummary> out;
    double prev_f = f_lo;
    double prev_v = im_y(f_lo);
    for (int i = 1; i <= grid_points; ++i) {
        const double f = f_lo + (f_hi - f_lo) * i / grid_points;
        const double v = im_y(f);
        if (prev_v < 0.0 && v >= 0.0) {
            // bisection to 1e-12 relative
            double lo = prev_f, hi = f;
            while ((hi - lo) > 1e-12 * hi) {
                const double mid = 0.5 * (lo + hi);
                (im_y(mid) < 0.0 ? lo : hi) = mid;
            }
            const double f0 = 0.5 * (lo + hi);
            const double w0 = 2.0 * pi * f0;
            const double slope = model.im_slope(w0);
            if (slope > 0.0) {
                const double re_y = model.evaluate_at_hz(f0).real();
                ModeSummary mode;
                mode.frequency = f0;
                mode.effective_capacitance = 0.5 * slope;
                mode.quality_factor = re_y > 0.0 ? (w0 / 2.0) * slope / re_y : INFINITY;
                out.push_back(mode);
            }
        }
        prev_f = f;
        prev_v = v;
    }
    return out;
}

double t1_estimate(double qubit_capacitance, const RationalModel& model, double f_q) {
    if (!(qubit_capacitance > 0)) throw std::invalid_argument("qubit capacitance must be positive");
    const double re_y = model.evaluate_at_hz(f_q).real();
    if (re_y < 0) throw std::runtime_error("negative Re Y (passivity violation) at qubit frequency");
    return re_y == 0.0 ? INFINITY : qubit_capacitance / re_y;
}

double t1_estimate(double qubit_capacitance, const FrequencyResponse& resp, double f_q) {
    if (!(qubit_capacitance > 0)) throw std::invalid_argument("qubit capacitance must be positive");
    resp.validate();
    if (resp.port_count != 1 || resp.representation != Representation::Y)
        throw std::invalid_argument("t1_estimate expects a 1-port admittance");
    if (f_q < resp.freqs.front() || f_q > resp.freqs.back())
        throw std::invalid_argument("qubit frequency outside the tabulated range");
    // linear interpolation of Re Y
    const auto it = std::lower_bound(resp.freqs.begin(), resp.freqs.end(), f_q);
    const std::size_t hi = static_cast<std::size_t>(it - resp.freqs.begin());
    double re_y;
    if (hi == 0 || resp.freqs[hi] == f_q) {
        re_y = resp.at(hi, 0, 0).real();
    } else {
        const double t = (f_q - resp.freqs[hi - 1]) / (resp.freqs[hi] - resp.freqs[hi - 1]);
        re_y = (1.0 - t) * resp.at(hi - 1, 0, 0).real() + t * resp.at(hi, 0, 0).real();
    }
    if (re_y < 0) throw std::runtime_error("negative Re Y (passivity violation) at qubit frequency");
    return re_y == 0.0 ? INFINITY : qubit_capacitance / re_y;
}

}  // namespace qpkg
