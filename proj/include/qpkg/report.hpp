#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpkg/fridge.hpp"
#include "qpkg/spurious.hpp"
#include "qpkg/tline.hpp"

namespace qpkg {

struct LabeledCavity {
    std::string label;
    CavitySpec cavity;
};

struct LabeledGrounding {
    std::string label;
    GroundingSpec grounding;
};

struct LabeledResonator {
    std::string label;
    ResonatorSpec resonator;
};

struct Transition {
    std::string label;
    double series_l = 0;  // H
    double shunt_c = 0;   // F
    double z_ref = 50;    // ohm
};

struct AdmittanceFile {
    std::string label;
    std::string path;
    double qubit_capacitance = 0;  // F
};

struct ReportThresholds {
    double reflection_db = -30.0;       // transition worst-case bound
    double guard_margin = 500e6;        // Hz around the qubit band
    double t1_budget = 20e-6;           // s
    double min_resonator_q = 100e3;
    double max_chip_photons = 0.01;     // attenuation-chain occupancy bound
    double bbq_fit_tol = 1e-4;          // vector-fit RMS relative error
    int cavity_max_index = 3;
};

struct PackageSpec {
    double f_lo = 0, f_hi = 0;  // qubit band, Hz
    ReportThresholds thresholds;
    double wirebond_nh_per_mm = 1.0;
    std::vector<LabeledCavity> cavities;
    std::vector<LabeledGrounding> grounding;
    std::vector<LabeledResonator> resonators;
    std::vector<Transition> transitions;
    std::vector<AdmittanceFile> admittance_files;
    std::optional<FridgeSpec> fridge;
    std::optional<WiringChain> wiring;
    std::vector<Material> materials = builtin_materials();

    void validate() const;
};

/// Loads the JSON package document, normalizing unit-suffixed strings to SI.
/// Errors name the missing field or unknown unit, including its JSON path.
/// base_dir resolves relative admittance-file paths; defaults to the
/// document's directory.
PackageSpec load_package_spec(const std::string& path);

enum class Severity { Info, Warn, Fail };

enum class FindingCategory {
    BoxMode,
    GroundResonance,
    TransitionReflection,
    ResonatorQ,
    BbqMode,
    T1Budget,
    ThermalBudget,
    NoiseBudget,
};

std::string to_string(Severity s);
std::string to_string(FindingCategory c);

struct Finding {
    Severity severity = Severity::Info;
    std::string source;        // label of the spec element
    FindingCategory category = FindingCategory::BoxMode;
    double value = 0;
    std::string unit;
    double threshold = 0;
    std::string threshold_unit;
    std::string message;
};

struct Report {
    std::string tool_version;
    std::string spec_digest;
    std::vector<Finding> findings;
    bool pass = true;  // no Fail findings
};

/// Runs every applicable module over the spec. Deterministic ordering:
/// category, then source label. Every labeled element yields at least one
/// finding ("analyzed, no issues" info entries otherwise).
Report hygiene_report(const PackageSpec& spec, const std::string& spec_digest = "");

enum class ReportFormat { Text, Machine };

/// Text: one line per finding. Machine: UTF-8 JSON, byte-stable for
/// identical inputs.
std::string render_report(const Report& report, ReportFormat format);

/// Re-parse a machine report document.
Report parse_report(const std::string& document);

/// FNV-1a 64-bit digest of a file's bytes, hex-encoded.
std::string file_digest(const std::string& path);

inline constexpr const char* kToolVersion = "qpkg 0.1.0";

}  // namespace qpkg
