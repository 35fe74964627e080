#pragma once

#include <string>
#include <variant>
#include <vector>

namespace qpkg {

/// Metallized rectangular enclosure. d is the thin axis by convention;
/// TE/TM mode indices (m, n, p) refer to the (a, b, d) axes in that order.
struct CavitySpec {
    double a = 0;    // m
    double b = 0;    // m
    double d = 0;    // m
    double er = 1;   // relative permittivity of the fill

    void validate() const;
};

enum class ModeFamily { TM, TE };

struct CavityMode {
    ModeFamily family = ModeFamily::TM;
    int m = 0, n = 0, p = 0;
    double frequency = 0;  // Hz

    std::string label() const;  // e.g. "TM110"
};

/// All valid modes with indices <= max_index (1..20), ascending by frequency,
/// ties broken lexicographically by (family, m, n, p) with TM before TE.
std::vector<CavityMode> cavity_mode_frequencies(const CavitySpec& cavity, int max_index);

CavityMode lowest_mode(const CavitySpec& cavity);

// Chip-to-package grounding strategies
struct Wirebond { double length = 0; int count = 1; };              // length m
struct Bump { double inductance = 0; int count = 1; };              // per-bump H
struct Tsv { double inductance = 0; int count = 1; };               // per-via H
using GroundStrategy = std::variant<Wirebond, Bump, Tsv>;

struct GroundingSpec {
    double overlap_area = 0;  // m^2
    double gap = 0;           // m
    double gap_er = 1;
    GroundStrategy strategy;

    void validate() const;
};

double parallel_plate_capacitance(double area, double gap, double er);

/// Parallel combination of the per-element inductances. Wirebonds follow the
/// 1 nH/mm rule unless a different per-mm value is supplied.
double ground_inductance(const GroundStrategy& strategy, double wirebond_nh_per_mm = 1.0);

/// f = 1/(2*pi*sqrt(LC)); throws std::domain_error for non-positive L or C.
double lc_resonance(double inductance, double capacitance);

std::string strategy_name(const GroundStrategy& strategy);

/// Resonance of each alternative over the capacitance implied by g
/// (same overlap area, gap and permittivity for every entry).
std::vector<std::pair<GroundStrategy, double>> compare_mitigations(
    const GroundingSpec& g, const std::vector<GroundStrategy>& alternatives,
    double wirebond_nh_per_mm = 1.0);

}  // namespace qpkg
