#include "qpkg/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qpkg/resonance.hpp"
#include "qpkg/synthesis.hpp"
#include "qpkg/touchstone.hpp"
#include "qpkg/units.hpp"

namespace qpkg {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void missing(const std::string& path, const std::string& field) {
    throw std::runtime_error("package spec: missing required field '" + field + "' at " + path);
}

const json& require(const json& j, const std::string& key, const std::string& path) {
    if (!j.contains(key)) missing(path, key);
    return j.at(key);
}

double qty(const json& j, const std::string& key, Dimension dim, const std::string& path) {
    const json& v = require(j, key, path);
    if (v.is_string()) return parse_quantity(v.get<std::string>(), dim);
    if (v.is_number()) {
        if (dim == Dimension::Dimensionless || dim == Dimension::Decibel) return v.get<double>();
        throw std::runtime_error("field '" + key + "' at " + path +
                                 " must be a unit-suffixed string (e.g. \"10 mm\")");
    }
    throw std::runtime_error("field '" + key + "' at " + path + " has the wrong type");
}

double qty_or(const json& j, const std::string& key, Dimension dim, const std::string& path,
              double fallback) {
    if (!j.contains(key)) return fallback;
    return qty(j, key, dim, path);
}

GroundStrategy parse_strategy(const json& j, const std::string& path) {
    const std::string kind = require(j, "kind", path).get<std::string>();
    const int count = j.contains("count") ? j.at("count").get<int>() : 1;
    if (kind == "wirebond") return Wirebond{qty(j, "length", Dimension::Length, path), count};
    if (kind == "bump") return Bump{qty(j, "inductance", Dimension::Inductance, path), count};
    if (kind == "tsv") return Tsv{qty(j, "inductance", Dimension::Inductance, path), count};
    throw std::runtime_error("unknown grounding strategy '" + kind + "' at " + path);
}

LossElement parse_loss(const json& j, const std::string& path) {
    LossElement out;
    out.position = qty(j, "position", Dimension::Length, path);
    const std::string kind = require(j, "kind", path).get<std::string>();
    if (kind == "series_resistance")
        out.kind = SeriesResistance{qty(j, "value", Dimension::Resistance, path)};
    else if (kind == "shunt_conductance")
        out.kind = ShuntConductance{qty(j, "value", Dimension::Conductance, path)};
    else if (kind == "dielectric")
        out.kind = DielectricLoss{qty(j, "participation", Dimension::Dimensionless, path),
                                  qty(j, "tan_delta", Dimension::Dimensionless, path)};
    else
        throw std::runtime_error("unknown loss kind '" + kind + "' at " + path);
    return out;
}

void check_unique_labels(const std::vector<std::string>& labels) {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
        throw std::runtime_error("package spec: duplicate label '" + *dup + "'");
}

double finite_or(double v, double fallback) { return std::isfinite(v) ? v : fallback; }

}  // namespace

void PackageSpec::validate() const {
    if (!(f_lo > 0 && f_hi > f_lo))
        throw std::invalid_argument("qubit_band must satisfy 0 < f_lo < f_hi");
    std::vector<std::string> labels;
    for (const auto& c : cavities) labels.push_back(c.label);
    for (const auto& g : grounding) labels.push_back(g.label);
    for (const auto& r : resonators) labels.push_back(r.label);
    for (const auto& t : transitions) labels.push_back(t.label);
    for (const auto& a : admittance_files) labels.push_back(a.label);
    check_unique_labels(labels);
    for (const auto& c : cavities) c.cavity.validate();
    for (const auto& g : grounding) g.grounding.validate();
    for (const auto& r : resonators) r.resonator.validate();
    if (fridge) fridge->validate();
}

PackageSpec load_package_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error("package spec '" + path + "': " + e.what());
    }
    const std::filesystem::path base = std::filesystem::path(path).parent_path();

    PackageSpec spec;
    const json& band = require(doc, "qubit_band", "$");
    if (!band.is_array() || band.size() != 2)
        throw std::runtime_error("qubit_band must be a [f_lo, f_hi] pair");
    spec.f_lo = band[0].is_string() ? parse_quantity(band[0].get<std::string>(), Dimension::Frequency)
                                    : throw std::runtime_error("qubit_band entries need units");
    spec.f_hi = band[1].is_string() ? parse_quantity(band[1].get<std::string>(), Dimension::Frequency)
                                    : throw std::runtime_error("qubit_band entries need units");
    spec.thresholds.guard_margin =
        qty_or(doc, "guard_margin", Dimension::Frequency, "$", spec.thresholds.guard_margin);
    if (doc.contains("thresholds")) {
        const json& th = doc.at("thresholds");
        spec.thresholds.reflection_db =
            qty_or(th, "reflection_db", Dimension::Decibel, "$.thresholds", spec.thresholds.reflection_db);
        spec.thresholds.t1_budget =
            qty_or(th, "t1_budget", Dimension::Time, "$.thresholds", spec.thresholds.t1_budget);
        spec.thresholds.min_resonator_q = qty_or(th, "min_resonator_q", Dimension::Dimensionless,
                                                 "$.thresholds", spec.thresholds.min_resonator_q);
        spec.thresholds.max_chip_photons = qty_or(th, "max_chip_photons", Dimension::Dimensionless,
                                                  "$.thresholds", spec.thresholds.max_chip_photons);
        spec.thresholds.bbq_fit_tol = qty_or(th, "bbq_fit_tol", Dimension::Dimensionless,
                                             "$.thresholds", spec.thresholds.bbq_fit_tol);
        if (th.contains("cavity_max_index"))
            spec.thresholds.cavity_max_index = th.at("cavity_max_index").get<int>();
    }
    spec.wirebond_nh_per_mm =
        qty_or(doc, "wirebond_nh_per_mm", Dimension::Dimensionless, "$", spec.wirebond_nh_per_mm);

    for (std::size_t i = 0; doc.contains("cavities") && i < doc.at("cavities").size(); ++i) {
        const json& j = doc.at("cavities")[i];
        const std::string p = "$.cavities[" + std::to_string(i) + "]";
        LabeledCavity c;
        c.label = require(j, "label", p).get<std::string>();
        c.cavity.a = qty(j, "a", Dimension::Length, p);
        c.cavity.b = qty(j, "b", Dimension::Length, p);
        c.cavity.d = qty(j, "d", Dimension::Length, p);
        c.cavity.er = qty_or(j, "er", Dimension::Dimensionless, p, 1.0);
        spec.cavities.push_back(c);
    }
    for (std::size_t i = 0; doc.contains("grounding") && i < doc.at("grounding").size(); ++i) {
        const json& j = doc.at("grounding")[i];
        const std::string p = "$.grounding[" + std::to_string(i) + "]";
        LabeledGrounding g;
        g.label = require(j, "label", p).get<std::string>();
        g.grounding.overlap_area = qty(j, "overlap_area", Dimension::Area, p);
        g.grounding.gap = qty(j, "gap", Dimension::Length, p);
        g.grounding.gap_er = qty_or(j, "gap_er", Dimension::Dimensionless, p, 1.0);
        g.grounding.strategy = parse_strategy(require(j, "strategy", p), p + ".strategy");
        spec.grounding.push_back(g);
    }
    for (std::size_t i = 0; doc.contains("resonators") && i < doc.at("resonators").size(); ++i) {
        const json& j = doc.at("resonators")[i];
        const std::string p = "$.resonators[" + std::to_string(i) + "]";
        LabeledResonator r;
        r.label = require(j, "label", p).get<std::string>();
        r.resonator.z0 = qty(j, "z0", Dimension::Resistance, p);
        r.resonator.eeff = qty(j, "eeff", Dimension::Dimensionless, p);
        r.resonator.length = qty(j, "length", Dimension::Length, p);
        if (j.contains("losses"))
            for (std::size_t k = 0; k < j.at("losses").size(); ++k)
                r.resonator.losses.push_back(
                    parse_loss(j.at("losses")[k], p + ".losses[" + std::to_string(k) + "]"));
        spec.resonators.push_back(r);
    }
    for (std::size_t i = 0; doc.contains("transitions") && i < doc.at("transitions").size(); ++i) {
        const json& j = doc.at("transitions")[i];
        const std::string p = "$.transitions[" + std::to_string(i) + "]";
        Transition t;
        t.label = require(j, "label", p).get<std::string>();
        t.series_l = qty(j, "series_l", Dimension::Inductance, p);
        t.shunt_c = qty(j, "shunt_c", Dimension::Capacitance, p);
        t.z_ref = qty_or(j, "z_ref", Dimension::Resistance, p, 50.0);
        spec.transitions.push_back(t);
    }
    for (std::size_t i = 0;
         doc.contains("admittance_files") && i < doc.at("admittance_files").size(); ++i) {
        const json& j = doc.at("admittance_files")[i];
        const std::string p = "$.admittance_files[" + std::to_string(i) + "]";
        AdmittanceFile a;
        a.label = require(j, "label", p).get<std::string>();
        std::filesystem::path file = require(j, "path", p).get<std::string>();
        if (file.is_relative()) file = base / file;
        if (!std::filesystem::exists(file))
            throw std::runtime_error("admittance file '" + file.string() + "' referenced at " + p +
                                     " does not exist");
        a.path = file.string();
        a.qubit_capacitance = qty(j, "qubit_capacitance", Dimension::Capacitance, p);
        spec.admittance_files.push_back(a);
    }
    if (doc.contains("fridge")) {
        FridgeSpec fs;
        const json& stages = require(doc.at("fridge"), "stages", "$.fridge");
        for (std::size_t i = 0; i < stages.size(); ++i) {
            const std::string p = "$.fridge.stages[" + std::to_string(i) + "]";
            FridgeStage st;
            st.name = require(stages[i], "name", p).get<std::string>();
            st.temperature = qty(stages[i], "temperature", Dimension::Temperature, p);
            st.cooling_power = qty_or(stages[i], "cooling_power", Dimension::Power, p, 0.0);
            fs.stages.push_back(st);
        }
        spec.fridge = fs;
    }
    if (doc.contains("wiring")) {
        const json& w = doc.at("wiring");
        WiringChain chain;
        chain.signal_power = qty_or(w, "signal_power", Dimension::Power, "$.wiring", 0.0);
        for (std::size_t i = 0; w.contains("cables") && i < w.at("cables").size(); ++i) {
            const json& j = w.at("cables")[i];
            const std::string p = "$.wiring.cables[" + std::to_string(i) + "]";
            CableSegment c;
            c.material = require(j, "material", p).get<std::string>();
            c.cross_section = qty(j, "cross_section", Dimension::Area, p);
            c.length = qty(j, "length", Dimension::Length, p);
            c.from_stage = require(j, "from", p).get<std::string>();
            c.to_stage = require(j, "to", p).get<std::string>();
            c.count = j.contains("count") ? j.at("count").get<int>() : 1;
            chain.cables.push_back(c);
        }
        for (std::size_t i = 0; w.contains("attenuators") && i < w.at("attenuators").size(); ++i) {
            const json& j = w.at("attenuators")[i];
            const std::string p = "$.wiring.attenuators[" + std::to_string(i) + "]";
            chain.attenuators.push_back(
                {require(j, "stage", p).get<std::string>(), qty(j, "db", Dimension::Decibel, p)});
        }
        for (std::size_t i = 0; w.contains("receiver") && i < w.at("receiver").size(); ++i) {
            const json& j = w.at("receiver")[i];
            const std::string p = "$.wiring.receiver[" + std::to_string(i) + "]";
            Amplifier amp;
            amp.name = j.contains("name") ? j.at("name").get<std::string>() : "amp" + std::to_string(i);
            amp.gain_db = qty(j, "gain_db", Dimension::Decibel, p);
            amp.noise_temperature = qty(j, "noise_temperature", Dimension::Temperature, p);
            chain.receiver.push_back(amp);
        }
        spec.wiring = chain;
    }
    if (doc.contains("materials_file")) {
        std::filesystem::path file = doc.at("materials_file").get<std::string>();
        if (file.is_relative()) file = base / file;
        spec.materials = load_materials(file.string());
    }
    spec.validate();
    return spec;
}

std::string to_string(Severity s) {
    switch (s) {
        case Severity::Info: return "INFO";
        case Severity::Warn: return "WARN";
        case Severity::Fail: return "FAIL";
    }
    return "?";
}

std::string to_string(FindingCategory c) {
    switch (c) {
        case FindingCategory::BoxMode: return "box_mode";
        case FindingCategory::GroundResonance: return "ground_resonance";
        case FindingCategory::TransitionReflection: return "transition_reflection";
        case FindingCategory::ResonatorQ: return "resonator_q";
        case FindingCategory::BbqMode: return "bbq_mode";
        case FindingCategory::T1Budget: return "t1_budget";
        case FindingCategory::ThermalBudget: return "thermal_budget";
        case FindingCategory::NoiseBudget: return "noise_budget";
    }
    return "?";
}

namespace {

FindingCategory category_from_string(const std::string& s) {
    for (FindingCategory c :
         {FindingCategory::BoxMode, FindingCategory::GroundResonance,
          FindingCategory::TransitionReflection, FindingCategory::ResonatorQ,
          FindingCategory::BbqMode, FindingCategory::T1Budget, FindingCategory::ThermalBudget,
          FindingCategory::NoiseBudget})
        if (to_string(c) == s) return c;
    throw std::runtime_error("unknown finding category '" + s + "'");
}

Severity severity_from_string(const std::string& s) {
    for (Severity v : {Severity::Info, Severity::Warn, Severity::Fail})
        if (to_string(v) == s) return v;
    throw std::runtime_error("unknown severity '" + s + "'");
}

std::string format_frequency(double hz) {
    std::ostringstream os;
    os.precision(4);
    os << hz / 1e9 << " GHz";
    return os.str();
}

// band checks: fail strictly inside the band, warn inside the guard margin
void band_finding(std::vector<Finding>& out, FindingCategory cat, const std::string& label,
                  double freq, const PackageSpec& spec, const std::string& what) {
    const double guard = spec.thresholds.guard_margin;
    Finding f;
    f.source = label;
    f.category = cat;
    f.value = freq;
    f.unit = "Hz";
    f.threshold = spec.f_hi + guard;
    f.threshold_unit = "Hz";
    if (freq >= spec.f_lo && freq <= spec.f_hi) {
        f.severity = Severity::Fail;
        f.message = what + " " + format_frequency(freq) + " inside qubit band " +
                    format_frequency(spec.f_lo) + " - " + format_frequency(spec.f_hi);
    } else if (freq >= spec.f_lo - guard && freq <= spec.f_hi + guard) {
        f.severity = Severity::Warn;
        f.message = what + " " + format_frequency(freq) + " inside guard margin of qubit band";
    } else {
        f.severity = Severity::Info;
        f.message = what + " " + format_frequency(freq) + " clear of qubit band";
    }
    out.push_back(f);
}

}  // namespace

Report hygiene_report(const PackageSpec& spec, const std::string& spec_digest) {
    spec.validate();
    Report report;
    report.tool_version = kToolVersion;
    report.spec_digest = spec_digest;
    std::vector<Finding>& findings = report.findings;

    for (const auto& c : spec.cavities) {
        const auto modes = cavity_mode_frequencies(c.cavity, spec.thresholds.cavity_max_index);
        bool offending = false;
        for (const auto& m : modes) {
            if (m.frequency <= spec.f_hi + spec.thresholds.guard_margin) {
                band_finding(findings, FindingCategory::BoxMode, c.label, m.frequency, spec,
                             "box mode " + m.label());
                offending = true;
            }
        }
        if (!offending)
            band_finding(findings, FindingCategory::BoxMode, c.label, modes.front().frequency, spec,
                         "lowest box mode " + modes.front().label());
    }

    for (const auto& g : spec.grounding) {
        const double cap =
            parallel_plate_capacitance(g.grounding.overlap_area, g.grounding.gap, g.grounding.gap_er);
        const double ind = ground_inductance(g.grounding.strategy, spec.wirebond_nh_per_mm);
        band_finding(findings, FindingCategory::GroundResonance, g.label, lc_resonance(ind, cap),
                     spec, "ground resonance (" + strategy_name(g.grounding.strategy) + ")");
    }

    for (const auto& t : spec.transitions) {
        std::vector<double> freqs;
        const int npts = 201;
        for (int i = 0; i < npts; ++i)
            freqs.push_back(spec.f_lo + (spec.f_hi - spec.f_lo) * i / (npts - 1));
        const auto refl = tsv_transition_reflection(t.series_l, t.shunt_c, t.z_ref, freqs);
        const double worst = *std::max_element(refl.begin(), refl.end());
        Finding f;
        f.source = t.label;
        f.category = FindingCategory::TransitionReflection;
        f.value = worst;
        f.unit = "dB";
        f.threshold = spec.thresholds.reflection_db;
        f.threshold_unit = "dB";
        f.severity = worst > f.threshold ? Severity::Fail : Severity::Info;
        std::ostringstream os;
        os.precision(4);
        os << "worst in-band reflection " << worst << " dB vs " << f.threshold << " dB bound";
        f.message = os.str();
        findings.push_back(f);
    }

    for (const auto& r : spec.resonators) {
        std::vector<double> qs;
        for (const auto& loss : r.resonator.losses)
            qs.push_back(q_contribution(r.resonator, loss));
        const double q = composite_q(qs);
        Finding f;
        f.source = r.label;
        f.category = FindingCategory::ResonatorQ;
        f.value = finite_or(q, 0.0);
        f.unit = "";
        f.threshold = spec.thresholds.min_resonator_q;
        f.threshold_unit = "";
        f.severity = q < f.threshold ? Severity::Fail : Severity::Info;
        std::ostringstream os;
        os.precision(4);
        if (std::isinf(q))
            os << "lossless resonator model (no loss elements); analyzed, no issues";
        else
            os << "composite quality factor " << q << " vs minimum " << f.threshold;
        f.message = os.str();
        if (std::isinf(q)) f.value = 0.0;
        findings.push_back(f);
    }

    for (const auto& a : spec.admittance_files) {
        FrequencyResponse resp = a.path.ends_with(".csv")
                                     ? load_csv(a.path, Representation::Y)
                                     : load_touchstone(a.path);
        if (resp.representation != Representation::Y)
            resp = convert_network(resp, Representation::Y);
        const RationalModel model = vector_fit_auto(resp, spec.thresholds.bbq_fit_tol);
        const double search_lo = std::max(resp.freqs.front(), 1.0);
        const double search_hi = resp.freqs.back();
        const auto modes = extract_modes(model, search_lo, search_hi);
        bool any = false;
        for (const auto& m : modes) {
            if (m.frequency >= spec.f_lo - spec.thresholds.guard_margin &&
                m.frequency <= spec.f_hi + spec.thresholds.guard_margin) {
                std::ostringstream what;
                what.precision(4);
                what << "environment mode (Q " << finite_or(m.quality_factor, 0.0) << ")";
                band_finding(findings, FindingCategory::BbqMode, a.label, m.frequency, spec,
                             what.str());
                any = true;
            }
        }
        if (!any) {
            Finding f;
            f.source = a.label;
            f.category = FindingCategory::BbqMode;
            f.severity = Severity::Info;
            f.value = static_cast<double>(modes.size());
            f.unit = "modes";
            f.threshold = 0;
            f.threshold_unit = "";
            f.message = "no environment modes in the guarded qubit band; analyzed, no issues";
            findings.push_back(f);
        }

        // worst-case T1 across the band from the fitted model
        double worst_t1 = INFINITY;
        const int npts = 201;
        for (int i = 0; i < npts; ++i) {
            const double f = spec.f_lo + (spec.f_hi - spec.f_lo) * i / (npts - 1);
            if (f < search_lo || f > search_hi) continue;
            const double t1 = t1_estimate(a.qubit_capacitance, model, f);
            worst_t1 = std::min(worst_t1, t1);
        }
        Finding f;
        f.source = a.label;
        f.category = FindingCategory::T1Budget;
        f.value = finite_or(worst_t1, 0.0);
        f.unit = "s";
        f.threshold = spec.thresholds.t1_budget;
        f.threshold_unit = "s";
        f.severity = worst_t1 < f.threshold ? Severity::Fail : Severity::Info;
        std::ostringstream os;
        os.precision(4);
        if (std::isinf(worst_t1)) {
            os << "lossless environment across the band; analyzed, no issues";
            f.value = 0.0;
        } else {
            os << "worst in-band T1 " << worst_t1 * 1e6 << " us vs budget "
               << f.threshold * 1e6 << " us";
        }
        f.message = os.str();
        findings.push_back(f);
    }

    if (spec.fridge && spec.wiring) {
        const auto budgets = stage_budget(*spec.wiring, *spec.fridge, spec.materials);
        for (const auto& b : budgets) {
            Finding f;
            f.source = b.stage;
            f.category = FindingCategory::ThermalBudget;
            f.value = b.conductive_load + b.dissipated_power;
            f.unit = "W";
            f.threshold = b.cooling_power;
            f.threshold_unit = "W";
            f.severity = b.pass ? Severity::Info : Severity::Fail;
            std::ostringstream os;
            os.precision(4);
            os << "stage load " << f.value * 1e6 << " uW vs cooling power " << f.threshold * 1e6
               << " uW";
            f.message = os.str();
            findings.push_back(f);
        }
        if (!spec.wiring->attenuators.empty()) {
            const double f_mid = 0.5 * (spec.f_lo + spec.f_hi);
            const double n = attenuation_chain_noise(*spec.wiring, *spec.fridge, f_mid, 300.0);
            Finding f;
            f.source = "drive_line";
            f.category = FindingCategory::NoiseBudget;
            f.value = n;
            f.unit = "photons";
            f.threshold = spec.thresholds.max_chip_photons;
            f.threshold_unit = "photons";
            f.severity = n > f.threshold ? Severity::Fail : Severity::Info;
            std::ostringstream os;
            os.precision(4);
            os << "attenuation-chain occupancy " << n << " photons at " << format_frequency(f_mid)
               << " vs bound " << f.threshold;
            f.message = os.str();
            findings.push_back(f);
        }
        if (!spec.wiring->receiver.empty()) {
            const double t_sys = receiver_noise(spec.wiring->receiver);
            Finding f;
            f.source = "readout_chain";
            f.category = FindingCategory::NoiseBudget;
            f.value = t_sys;
            f.unit = "K";
            f.threshold = 0;
            f.threshold_unit = "";
            f.severity = Severity::Info;
            std::ostringstream os;
            os.precision(4);
            os << "receiver cascade noise temperature " << t_sys << " K";
            f.message = os.str();
            findings.push_back(f);
        }
    }

    std::stable_sort(findings.begin(), findings.end(), [](const Finding& l, const Finding& r) {
        if (l.category != r.category) return static_cast<int>(l.category) < static_cast<int>(r.category);
        if (l.source != r.source) return l.source < r.source;
        return l.value < r.value;
    });
    report.pass = std::none_of(findings.begin(), findings.end(),
                               [](const Finding& f) { return f.severity == Severity::Fail; });
    return report;
}

std::string render_report(const Report& report, ReportFormat format) {
    if (format == ReportFormat::Text) {
        std::ostringstream os;
        os << "package hygiene report (" << report.tool_version << ")\n";
        if (!report.spec_digest.empty()) os << "spec digest: " << report.spec_digest << "\n";
        for (const auto& f : report.findings)
            os << to_string(f.severity) << " [" << to_string(f.category) << "] " << f.source << ": "
               << f.message << "\n";
        os << "summary: " << (report.pass ? "pass" : "fail") << "\n";
        return os.str();
    }
    ordered_json doc;
    doc["tool_version"] = report.tool_version;
    doc["spec_digest"] = report.spec_digest;
    doc["findings"] = ordered_json::array();
    int fails = 0, warns = 0;
    for (const auto& f : report.findings) {
        ordered_json j;
        j["severity"] = to_string(f.severity);
        j["source"] = f.source;
        j["category"] = to_string(f.category);
        j["value"] = f.value;
        j["unit"] = f.unit;
        j["threshold"] = f.threshold;
        j["threshold_unit"] = f.threshold_unit;
        j["message"] = f.message;
        doc["findings"].push_back(j);
        fails += f.severity == Severity::Fail;
        warns += f.severity == Severity::Warn;
    }
    doc["summary"] = {{"pass", report.pass}, {"fail_count", fails}, {"warn_count", warns}};
    return doc.dump(2) + "\n";
}

Report parse_report(const std::string& document) {
    const json doc = json::parse(document);
    Report report;
    report.tool_version = doc.at("tool_version").get<std::string>();
    report.spec_digest = doc.at("spec_digest").get<std::string>();
    for (const auto& j : doc.at("findings")) {
        Finding f;
        f.severity = severity_from_string(j.at("severity").get<std::string>());
        f.source = j.at("source").get<std::string>();
        f.category = category_from_string(j.at("category").get<std::string>());
        f.value = j.at("value").get<double>();
        f.unit = j.at("unit").get<std::string>();
        f.threshold = j.at("threshold").get<double>();
        f.threshold_unit = j.at("threshold_unit").get<std::string>();
        f.message = j.at("message").get<std::string>();
        report.findings.push_back(f);
    }
    report.pass = doc.at("summary").at("pass").get<bool>();
    return report;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::uint64_t hash = 1469598103934665603ull;  // FNV-1a
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 1099511628211ull;
        }
        if (!in) break;
    }
    std::ostringstream os;
    os << std::hex << hash;
    return os.str();
}

}  // namespace qpkg
