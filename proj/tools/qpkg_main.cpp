#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpkg/fridge.hpp"
#include "qpkg/report.hpp"
#include "qpkg/resonance.hpp"
#include "qpkg/spurious.hpp"
#include "qpkg/synthesis.hpp"
#include "qpkg/tline.hpp"
#include "qpkg/touchstone.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOpts {
    std::string spec_path;
    std::string format = "text";
    std::string out_path;
};

void emit(const GlobalOpts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + opts.out_path + "'");
    out << text;
}

qpkg::PackageSpec load_spec(const GlobalOpts& opts) {
    if (opts.spec_path.empty()) throw CLI::RequiredError("--spec");
    return qpkg::load_package_spec(opts.spec_path);
}

std::string render(const GlobalOpts& opts, const ordered_json& machine, const std::string& text) {
    return opts.format == "machine" ? machine.dump(2) + "\n" : text;
}

int run_modes(const GlobalOpts& opts) {
    const auto spec = load_spec(opts);
    ordered_json doc;
    doc["cavities"] = ordered_json::array();
    std::ostringstream text;
    for (const auto& c : spec.cavities) {
        const auto modes = qpkg::cavity_mode_frequencies(c.cavity, spec.thresholds.cavity_max_index);
        ordered_json entry;
        entry["label"] = c.label;
        entry["modes"] = ordered_json::array();
        text << c.label << ":\n";
        for (const auto& m : modes) {
            entry["modes"].push_back({{"mode", m.label()}, {"frequency_hz", m.frequency}});
            text << "  " << m.label() << "  " << m.frequency / 1e9 << " GHz\n";
        }
        doc["cavities"].push_back(entry);
    }
    emit(opts, render(opts, doc, text.str()));
    return 0;
}

int run_ground(const GlobalOpts& opts) {
    const auto spec = load_spec(opts);
    ordered_json doc;
    doc["grounding"] = ordered_json::array();
    std::ostringstream text;
    for (const auto& g : spec.grounding) {
        const double cap = qpkg::parallel_plate_capacitance(g.grounding.overlap_area,
                                                            g.grounding.gap, g.grounding.gap_er);
        const double ind = qpkg::ground_inductance(g.grounding.strategy, spec.wirebond_nh_per_mm);
        const double f = qpkg::lc_resonance(ind, cap);
        doc["grounding"].push_back({{"label", g.label},
                                    {"strategy", qpkg::strategy_name(g.grounding.strategy)},
                                    {"capacitance_f", cap},
                                    {"inductance_h", ind},
                                    {"resonance_hz", f}});
        text << g.label << " (" << qpkg::strategy_name(g.grounding.strategy) << "): C = "
             << cap * 1e12 << " pF, L = " << ind * 1e12 << " pH, f = " << f / 1e9 << " GHz\n";
    }
    emit(opts, render(opts, doc, text.str()));
    return 0;
}

int run_bbq(const GlobalOpts& opts) {
    const auto spec = load_spec(opts);
    ordered_json doc;
    doc["environments"] = ordered_json::array();
    std::ostringstream text;
    for (const auto& a : spec.admittance_files) {
        qpkg::FrequencyResponse resp = a.path.ends_with(".csv")
                                           ? qpkg::load_csv(a.path, qpkg::Representation::Y)
                                           : qpkg::load_touchstone(a.path);
        if (resp.representation != qpkg::Representation::Y)
            resp = qpkg::convert_network(resp, qpkg::Representation::Y);
        const auto model = qpkg::vector_fit_auto(resp, spec.thresholds.bbq_fit_tol);
        const auto modes =
            qpkg::extract_modes(model, std::max(resp.freqs.front(), 1.0), resp.freqs.back());
        ordered_json entry;
        entry["label"] = a.label;
        entry["modes"] = ordered_json::array();
        text << a.label << ":\n";
        for (const auto& m : modes) {
            const double t1 = qpkg::t1_estimate(a.qubit_capacitance, model, m.frequency);
            entry["modes"].push_back({{"frequency_hz", m.frequency},
                                      {"quality_factor", std::isfinite(m.quality_factor)
                                                             ? m.quality_factor
                                                             : 0.0},
                                      {"effective_capacitance_f", m.effective_capacitance},
                                      {"t1_s", std::isfinite(t1) ? t1 : 0.0}});
            text << "  mode " << m.frequency / 1e9 << " GHz, Q = " << m.quality_factor
                 << ", C_eff = " << m.effective_capacitance * 1e15 << " fF, T1 = " << t1 * 1e6
                 << " us\n";
        }
        doc["environments"].push_back(entry);
    }
    emit(opts, render(opts, doc, text.str()));
    return 0;
}

int run_tline(const GlobalOpts& opts) {
    const auto spec = load_spec(opts);
    ordered_json doc;
    doc["transitions"] = ordered_json::array();
    doc["resonators"] = ordered_json::array();
    std::ostringstream text;
    std::vector<double> freqs;
    for (int i = 0; i < 201; ++i)
        freqs.push_back(spec.f_lo + (spec.f_hi - spec.f_lo) * i / 200.0);
    for (const auto& t : spec.transitions) {
        const auto refl = qpkg::tsv_transition_reflection(t.series_l, t.shunt_c, t.z_ref, freqs);
        const double worst = *std::max_element(refl.begin(), refl.end());
        doc["transitions"].push_back({{"label", t.label}, {"worst_reflection_db", worst}});
        text << t.label << ": worst in-band |S11| = " << worst << " dB\n";
    }
    for (const auto& r : spec.resonators) {
        std::vector<double> qs;
        for (const auto& loss : r.resonator.losses)
            qs.push_back(qpkg::q_contribution(r.resonator, loss));
        const double q = qpkg::composite_q(qs);
        const double f0 = qpkg::quarter_wave_frequency(r.resonator);
        doc["resonators"].push_back({{"label", r.label},
                                     {"f0_hz", f0},
                                     {"composite_q", std::isfinite(q) ? q : 0.0}});
        text << r.label << ": f0 = " << f0 / 1e9 << " GHz, Q = " << q << "\n";
    }
    emit(opts, render(opts, doc, text.str()));
    return 0;
}

int run_fitres(const GlobalOpts& opts, const std::string& trace_path) {
    const auto resp = qpkg::load_csv(trace_path);
    std::vector<qpkg::Complex> trace(resp.data.begin(), resp.data.end());
    const auto fit = qpkg::fit_notch(resp.freqs, trace);
    ordered_json doc{{"f0_hz", fit.f0},
                     {"qi", std::isfinite(fit.qi) ? fit.qi : 0.0},
                     {"qc", fit.qc},
                     {"ql", fit.ql},
                     {"phi_rad", fit.phi},
                     {"residual", fit.residual}};
    std::ostringstream text;
    text << "f0 = " << fit.f0 / 1e9 << " GHz\nQi = " << fit.qi << "\nQc = " << fit.qc
         << "\nQl = " << fit.ql << "\nphi = " << fit.phi << " rad\nresidual = " << fit.residual
         << "\n";
    emit(opts, render(opts, doc, text.str()));
    return 0;
}

int run_fridge(const GlobalOpts& opts) {
    const auto spec = load_spec(opts);
    if (!spec.fridge || !spec.wiring)
        throw std::runtime_error("spec has no fridge/wiring section");
    const auto budgets = qpkg::stage_budget(*spec.wiring, *spec.fridge, spec.materials);
    ordered_json doc;
    doc["stages"] = ordered_json::array();
    std::ostringstream text;
    bool all_pass = true;
    for (const auto& b : budgets) {
        doc["stages"].push_back({{"stage", b.stage},
                                 {"conductive_load_w", b.conductive_load},
                                 {"dissipated_w", b.dissipated_power},
                                 {"cooling_power_w", b.cooling_power},
                                 {"pass", b.pass}});
        text << b.stage << ": load " << (b.conductive_load + b.dissipated_power) * 1e6
             << " uW of " << b.cooling_power * 1e6 << " uW " << (b.pass ? "ok" : "OVER BUDGET")
             << "\n";
        all_pass = all_pass && b.pass;
    }
    if (!spec.wiring->attenuators.empty()) {
        const double f_mid = 0.5 * (spec.f_lo + spec.f_hi);
        const double n = qpkg::attenuation_chain_noise(*spec.wiring, *spec.fridge, f_mid, 300.0);
        doc["chip_occupancy"] = n;
        text << "chip occupancy at " << f_mid / 1e9 << " GHz: " << n << " photons\n";
    }
    if (!spec.wiring->receiver.empty()) {
        const double t_sys = qpkg::receiver_noise(spec.wiring->receiver);
        doc["receiver_noise_k"] = t_sys;
        text << "receiver noise temperature: " << t_sys << " K\n";
    }
    emit(opts, render(opts, doc, text.str()));
    return all_pass ? 0 : 1;
}

int run_report(const GlobalOpts& opts) {
    if (opts.spec_path.empty()) throw CLI::RequiredError("--spec");
    const auto spec = qpkg::load_package_spec(opts.spec_path);
    const auto report = qpkg::hygiene_report(spec, qpkg::file_digest(opts.spec_path));
    emit(opts, qpkg::render_report(report, opts.format == "machine" ? qpkg::ReportFormat::Machine
                                                                    : qpkg::ReportFormat::Text));
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qpkg: packaged-qubit hygiene analysis"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts opts;
    app.add_option("--spec", opts.spec_path, "package spec document (JSON)");
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
    app.add_option("--out", opts.out_path, "write output to this file instead of stdout");

    auto* modes = app.add_subcommand("modes", "box-mode frequencies for every cavity");
    auto* ground = app.add_subcommand("ground", "chip-ground LC resonances");
    auto* bbq = app.add_subcommand("bbq", "environment modes and T1 from admittance data");
    auto* tline = app.add_subcommand("tline", "transition reflections and resonator Q");
    auto* fitres = app.add_subcommand("fitres", "fit a notch resonator trace");
    std::string trace_path;
    fitres->add_option("--trace", trace_path, "S21 trace CSV (freq_hz,re,im)")->required();
    auto* fridge = app.add_subcommand("fridge", "stage heat and noise budgets");
    auto* report = app.add_subcommand("report", "full package hygiene report");

    try {
        app.parse(argc, argv);
        if (*modes) return run_modes(opts);
        if (*ground) return run_ground(opts);
        if (*bbq) return run_bbq(opts);
        if (*tline) return run_tline(opts);
        if (*fitres) return run_fitres(opts, trace_path);
        if (*fridge) return run_fridge(opts);
        if (*report) return run_report(opts);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
