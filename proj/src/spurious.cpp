#include "qpkg/spurious.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "qpkg/constants.hpp"

namespace qpkg {

namespace {

double mode_frequency(const CavitySpec& c, int m, int n, int p) {
    const double fm = m / c.a, fn = n / c.b, fp = p / c.d;
    return constants::c / (2.0 * std::sqrt(c.er)) * std::sqrt(fm * fm + fn * fn + fp * fp);
}

}  // namespace

void CavitySpec::validate() const {
    if (!(a > 0 && b > 0 && d > 0)) throw std::invalid_argument("cavity dimensions must be positive");
    if (!(er >= 1)) throw std::invalid_argument("cavity er must be >= 1");
}

std::string CavityMode::label() const {
    return (family == ModeFamily::TM ? "TM" : "TE") + std::to_string(m) + std::to_string(n) +
           std::to_string(p);
}

std::vector<CavityMode> cavity_mode_frequencies(const CavitySpec& cavity, int max_index) {
    cavity.validate();
    if (max_index < 1 || max_index > 20)
        throw std::invalid_argument("max_index must be in [1, 20]");

    std::vector<CavityMode> modes;
    // TM_mnp: m,n >= 1, p >= 0; TE_mnp: p >= 1 and at most one of m,n zero.
    for (int m = 1; m <= max_index; ++m)
        for (int n = 1; n <= max_index; ++n)
            for (int p = 0; p <= max_index; ++p)
                modes.push_back({ModeFamily::TM, m, n, p, mode_frequency(cavity, m, n, p)});
    for (int m = 0; m <= max_index; ++m)
        for (int n = 0; n <= max_index; ++n) {
            if (m == 0 && n == 0) continue;
            for (int p = 1; p <= max_index; ++p)
                modes.push_back({ModeFamily::TE, m, n, p, mode_frequency(cavity, m, n, p)});
        }

    auto key = [](const CavityMode& x) {
        return std::tuple(x.frequency, static_cast<int>(x.family), x.m, x.n, x.p);
    };
    std::sort(modes.begin(), modes.end(),
              [&](const CavityMode& l, const CavityMode& r) { return key(l) < key(r); });
    return modes;
}

CavityMode lowest_mode(const CavitySpec& cavity) {
    // max_index = 2 is sufficient: the lowest mode of a rectangular cavity
    // never uses an index above 1 in more than one axis (verified by the
    // exhaustive-enumeration oracle in the tests).
    return cavity_mode_frequencies(cavity, 2).front();
}

void GroundingSpec::validate() const {
    if (!(overlap_area > 0 && gap > 0)) throw std::invalid_argument("area and gap must be positive");
    if (!(gap_er >= 1)) throw std::invalid_argument("gap_er must be >= 1");
    std::visit(
        [](const auto& s) {
            if (s.count < 1) throw std::invalid_argument("strategy count must be >= 1");
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Wirebond>) {
                if (!(s.length > 0)) throw std::invalid_argument("wirebond length must be positive");
            } else {
                if (!(s.inductance > 0)) throw std::invalid_argument("inductance must be positive");
            }
        },
        strategy);
}

double parallel_plate_capacitance(double area, double gap, double er) {
    if (!(area > 0 && gap > 0)) throw std::domain_error("area and gap must be positive");
    return constants::eps0 * er * area / gap;
}

double ground_inductance(const GroundStrategy& strategy, double wirebond_nh_per_mm) {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Wirebond>) {
                return (s.length * 1e3) * (wirebond_nh_per_mm * 1e-9) / s.count;
            } else {
                return s.inductance / s.count;
            }
        },
        strategy);
}

double lc_resonance(double inductance, double capacitance) {
    if (!(inductance > 0) || !(capacitance > 0))
        throw std::domain_error("lc_resonance requires positive L and C");
    return 1.0 / (2.0 * constants::pi * std::sqrt(inductance * capacitance));
}

std::string strategy_name(const GroundStrategy& strategy) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Wirebond>) return "wirebond";
            else if constexpr (std::is_same_v<T, Bump>) return "bump";
            else return "tsv";
        },
        strategy);
}

std::vector<std::pair<GroundStrategy, double>> compare_mitigations(
    const GroundingSpec& g, const std::vector<GroundStrategy>& alternatives,
    double wirebond_nh_per_mm) {
    if (alternatives.empty()) throw std::invalid_argument("alternatives must be non-empty");
    const double c = parallel_plate_capacitance(g.overlap_area, g.gap, g.gap_er);
    std::vector<std::pair<GroundStrategy, double>> out;
    out.reserve(alternatives.size());
    for (const auto& alt : alternatives)
        out.emplace_back(alt, lc_resonance(ground_inductance(alt, wirebond_nh_per_mm), c));
    return out;
}

}  // namespace qpkg
