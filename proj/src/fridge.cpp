#include "qpkg/fridge.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "qpkg/constants.hpp"

namespace qpkg {

double Material::conductivity(double temperature) const {
    return a * std::pow(temperature, b);
}

void Material::validate() const {
    if (!(a > 0)) throw std::invalid_argument("material '" + name + "': a must be positive");
    if (!(t_min > 0 && t_max > t_min))
        throw std::invalid_argument("material '" + name + "': invalid validity range");
}

const std::vector<Material>& builtin_materials() {
    // Power-law fits to published low-temperature conductivity data; see
    // data/materials.json for the sourced copies of these numbers.
    static const std::vector<Material> db = {
        {"stainless_steel", 0.0556, 1.15, 0.05, 10.0},
        {"cupronickel", 0.09, 1.10, 0.05, 10.0},
        {"nbti", 0.0075, 1.85, 0.01, 9.0},
    };
    return db;
}

const Material& find_material(const std::vector<Material>& db, const std::string& name) {
    for (const auto& m : db)
        if (m.name == name) return m;
    throw std::runtime_error("unknown material '" + name + "'");
}

void FridgeSpec::validate() const {
    if (stages.empty()) throw std::invalid_argument("fridge needs at least one stage");
    double prev = INFINITY;
    for (const auto& s : stages) {
        if (!(s.temperature > 0)) throw std::invalid_argument("stage temperatures must be positive");
        if (!(s.temperature < prev))
            throw std::invalid_argument("stage temperatures must be strictly decreasing");
        if (s.cooling_power < 0) throw std::invalid_argument("cooling powers must be >= 0");
        prev = s.temperature;
    }
}

const FridgeStage& FridgeSpec::stage(const std::string& name) const {
    for (const auto& s : stages)
        if (s.name == name) return s;
    throw std::runtime_error("unknown fridge stage '" + name + "'");
}

double thermal_quantum(double f) {
    if (!(f > 0)) throw std::domain_error("frequency must be positive");
    return constants::h * f / constants::kB;
}

double occupancy(double f, double temperature) {
    if (!(f > 0) || !(temperature > 0)) throw std::domain_error("f and T must be positive");
    const double x = constants::h * f / (constants::kB * temperature);
    return 1.0 / std::expm1(x);
}

double cable_heat_load(const Material& material, double cross_section, double length,
                       double t_hot, double t_cold) {
    material.validate();
    if (!(cross_section > 0 && length > 0))
        throw std::domain_error("cross_section and length must be positive");
    if (t_cold > t_hot) throw std::domain_error("t_hot must be >= t_cold");
    if (t_cold < material.t_min || t_hot > material.t_max)
        throw std::domain_error("temperature span outside validity range of material '" +
                                material.name + "'");
    const double bp1 = material.b + 1.0;
    const double integral = material.a * (std::pow(t_hot, bp1) - std::pow(t_cold, bp1)) / bp1;
    return cross_section / length * integral;
}

double attenuation_chain_noise(const WiringChain& chain, const FridgeSpec& fridge, double f,
                               double input_temperature) {
    fridge.validate();
    // top-down: attenuators ordered by the fridge's stage order
    std::vector<const Attenuator*> ordered;
    for (const auto& stage : fridge.stages)
        for (const auto& att : chain.attenuators)
            if (att.stage == stage.name) ordered.push_back(&att);
    for (const auto& att : chain.attenuators)
        fridge.stage(att.stage);  // throws on unknown anchor
    double n = occupancy(f, input_temperature);
    for (const Attenuator* att : ordered) {
        if (att->attenuation_db < 0) throw std::domain_error("attenuation must be >= 0 dB");
        const double a = std::pow(10.0, att->attenuation_db / 10.0);
        n = n / a + (1.0 - 1.0 / a) * occupancy(f, fridge.stage(att->stage).temperature);
    }
    return n;
}

double receiver_noise(const std::vector<Amplifier>& amplifiers) {
    if (amplifiers.empty()) throw std::invalid_argument("receiver_noise needs at least one stage");
    double t_sys = 0.0;
    double gain = 1.0;
    for (const auto& amp : amplifiers) {
        if (amp.noise_temperature < 0) throw std::domain_error("noise temperature must be >= 0");
        t_sys += amp.noise_temperature / gain;
        gain *= std::pow(10.0, amp.gain_db / 10.0);
    }
    return t_sys;
}

std::vector<StageBudget> stage_budget(const WiringChain& chain, const FridgeSpec& fridge,
                                      const std::vector<Material>& materials) {
    fridge.validate();
    std::map<std::string, StageBudget> per_stage;
    for (const auto& s : fridge.stages)
        per_stage[s.name] = {s.name, 0.0, 0.0, s.cooling_power, true};

    for (const auto& cable : chain.cables) {
        const auto& hot = fridge.stage(cable.from_stage);
        const auto& cold = fridge.stage(cable.to_stage);
        const auto& mat = find_material(materials, cable.material);
        const double load = cable.count * cable_heat_load(mat, cable.cross_section, cable.length,
                                                          hot.temperature, cold.temperature);
        per_stage.at(cable.to_stage).conductive_load += load;
    }
    if (chain.signal_power > 0) {
        double p = chain.signal_power;
        for (const auto& stage : fridge.stages)
            for (const auto& att : chain.attenuators)
                if (att.stage == stage.name) {
                    const double a = std::pow(10.0, att.attenuation_db / 10.0);
                    per_stage.at(att.stage).dissipated_power += p * (1.0 - 1.0 / a);
                    p /= a;
                }
    }

    std::vector<StageBudget> out;
    for (const auto& s : fridge.stages) {
        StageBudget b = per_stage.at(s.name);
        b.pass = b.conductive_load + b.dissipated_power <= b.cooling_power;
        out.push_back(b);
    }
    return out;
}

std::vector<Material> load_materials(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    nlohmann::json doc = nlohmann::json::parse(in);
    const auto& list = doc.is_array() ? doc : doc.at("materials");
    std::vector<Material> out;
    for (const auto& item : list) {
        Material m;
        m.name = item.at("name").get<std::string>();
        m.a = item.at("a").get<double>();
        m.b = item.at("b").get<double>();
        m.t_min = item.at("t_min").get<double>();
        m.t_max = item.at("t_max").get<double>();
        m.validate();
        out.push_back(m);
    }
    return out;
}

}  // namespace qpkg
