#pragma once

#include <variant>
#include <vector>

#include "qpkg/network.hpp"

namespace qpkg {

struct CpwGeometry {
    double center_width = 0;  // w, m
    double gap = 0;           // s, m
    double substrate_er = 1;

    void validate() const;
};

struct CpwParameters {
    double z0 = 0;    // ohm
    double eeff = 1;  // effective permittivity
};

/// Conformal-mapping CPW parameters: eeff = (er+1)/2,
/// z0 = (30*pi/sqrt(eeff)) * K(k')/K(k), k = w/(w+2s).
/// The elliptic integrals are evaluated by arithmetic-geometric mean.
CpwParameters cpw_parameters(const CpwGeometry& g);

/// Complete elliptic integral of the first kind, modulus k in [0, 1).
double elliptic_k(double k);

// Cascade elements
struct Line {
    double z0 = 50;            // ohm
    double eeff = 1;
    double length = 0;         // m
    double loss_db_per_m = 0;
};
struct SeriesImpedance { Complex z; };   // fixed Z, ohm
struct ShuntAdmittance { Complex y; };   // fixed Y, S
struct SeriesInductor { double l = 0; }; // H, Z = jwL
struct ShuntCapacitor { double c = 0; }; // F, Y = jwC
using NetworkElement =
    std::variant<Line, SeriesImpedance, ShuntAdmittance, SeriesInductor, ShuntCapacitor>;

/// ABCD matrix of a single element at frequency f.
void element_abcd(const NetworkElement& e, double f, Complex out[4]);

/// ABCD product in element order, converted to S at z_ref.
FrequencyResponse cascade(const std::vector<NetworkElement>& elements,
                          const std::vector<double>& freqs, double z_ref);
/// Serial reference implementation (identical results; used for testing and
/// benchmarking the parallel sweep).
FrequencyResponse cascade_serial(const std::vector<NetworkElement>& elements,
                                 const std::vector<double>& freqs, double z_ref);

/// |S11| in dB per frequency for the symmetric L/2 - C - L/2 transition model.
/// A perfect through is reported as the -200 dB floor.
std::vector<double> tsv_transition_reflection(double series_l, double shunt_c, double z_ref,
                                              const std::vector<double>& freqs);

// Quarter-wave resonator with positioned loss elements.
// Standing-wave convention: short at x = 0, open at x = length.
struct SeriesResistance { double r = 0; };      // ohm
struct ShuntConductance { double g = 0; };      // S
struct DielectricLoss { double participation = 0; double tan_delta = 0; };
using LossKind = std::variant<SeriesResistance, ShuntConductance, DielectricLoss>;

struct LossElement {
    LossKind kind;
    double position = 0;  // m from the short
};

struct ResonatorSpec {
    double z0 = 50;      // ohm
    double eeff = 1;
    double length = 0;   // m
    std::vector<LossElement> losses;

    void validate() const;
    double inductance_per_m() const;   // L' = z0*sqrt(eeff)/c
    double capacitance_per_m() const;  // C' = sqrt(eeff)/(z0*c)
};

/// Loss-free fundamental: f0 = c/(4*length*sqrt(eeff)).
double quarter_wave_frequency(const ResonatorSpec& spec);

/// Perturbative Q of one loss element from the unperturbed lambda/4 mode
/// shapes I(x) ~ cos(pi x/2l), V(x) ~ sin(pi x/2l). An element at its own
/// null contributes Q = inf. Valid for Q >> 1 (check Q > 100).
double q_contribution(const ResonatorSpec& spec, const LossElement& loss);

/// 1/Q_tot = sum 1/Q_i; infinite entries contribute zero.
double composite_q(const std::vector<double>& contributions);

/// 1/Q_comp = 1/measured - 1/baseline. Returns inf when the difference is
/// not resolvable (measured >= baseline).
double bound_component_loss(double measured_q, double baseline_q);

}  // namespace qpkg
