#pragma once

#include <vector>

#include "qpkg/network.hpp"

namespace qpkg {

/// Pole-residue model of a one-port admittance,
///   Y(s) = s*capacitive_term + direct_term + inverse_inductance_term/s
///          + sum_i residues[i]/(s - poles[i]).
/// Complex poles/residues occur in conjugate pairs (the pair is stored as two
/// adjacent entries); every pole has Re <= 0. The explicit 1/s term carries a
/// shunt inductor exactly instead of forcing a spurious near-origin pole pair.
struct RationalModel {
    std::vector<Complex> poles;     // rad/s
    std::vector<Complex> residues;  // matching poles
    double direct_term = 0;              // S
    double capacitive_term = 0;          // F, coefficient of s
    double inverse_inductance_term = 0;  // 1/H, coefficient of 1/s

    Complex evaluate(Complex s) const;
    Complex evaluate_at_hz(double f) const;
    /// d(Im Y(jw))/dw, analytic.
    double im_slope(double omega) const;

    void validate() const;
};

struct VectorFitOptions {
    int max_iterations = 30;
    bool fit_shunt_inductor = true;  // include the 1/s basis term
    bool relative_weighting = true;  // weight samples by 1/|Y|
};

/// Iterative pole-relocation least-squares fit of a 1-port admittance.
/// order counts poles (pairs count as 2); initial poles are log-spaced
/// complex pairs across the sample band with Q = 100. Poles are flipped into
/// the left half-plane after each relocation. Throws if the RMS relative
/// error on the samples exceeds tol after the iteration cap.
RationalModel vector_fit(const FrequencyResponse& resp, int order, double tol,
                         const VectorFitOptions& options = {});

/// Order-selection wrapper: tries order 0, 2, 4, ... up to max_order and
/// returns the first model meeting tol.
RationalModel vector_fit_auto(const FrequencyResponse& resp, double tol, int max_order = 20,
                              const VectorFitOptions& options = {});

/// Shunt branch: R + sL in series with (C parallel G) to ground. G = 0 and
/// C = inf degenerate cases reduce to series RL / RLC. One branch realizes
/// one conjugate pole pair exactly.
struct FosterBranch {
    double r = 0;  // ohm
    double l = 0;  // H
    double c = 0;  // F
    double g = 0;  // S, branch-internal conductance
    bool physical = true;
};

struct LumpedCircuit {
    double shunt_capacitance = 0;  // F
    double shunt_conductance = 0;  // S
    double shunt_inductance = 0;   // H, 0 means absent
    std::vector<FosterBranch> branches;
    bool physical = true;  // false when any element value is negative

    Complex admittance(Complex s) const;
    Complex admittance_at_hz(double f) const;
};

/// Foster realization of the rational model, one branch per conjugate pair.
/// Negative element values are flagged non-physical, never dropped; real
/// poles are rejected with an error listing them.
LumpedCircuit foster_synthesize(const RationalModel& model);

struct ModeSummary {
    double frequency = 0;              // Hz
    double quality_factor = 0;         // inf when lossless
    double effective_capacitance = 0;  // F
};

/// Zero crossings of Im Y with positive slope inside [f_lo, f_hi], ascending.
/// Derivatives come from the rational model analytically; crossings are
/// isolated by sign change on a refined grid and polished by bisection.
std::vector<ModeSummary> extract_modes(const RationalModel& model, double f_lo, double f_hi,
                                       int grid_points = 2000);

/// T1 = C_q / Re Y(2*pi*f_q); inf for a lossless environment. Throws on
/// negative Re Y (passivity violation).
double t1_estimate(double qubit_capacitance, const RationalModel& model, double f_q);
double t1_estimate(double qubit_capacitance, const FrequencyResponse& resp, double f_q);

}  // namespace qpkg
