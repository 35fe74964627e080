#pragma once

#include <string>
#include <vector>

namespace qpkg {

/// Thermal conductivity power law k(T) = a * T^b (W/m/K) over [t_min, t_max].
struct Material {
    std::string name;
    double a = 0;
    double b = 0;
    double t_min = 0;  // K
    double t_max = 0;  // K

    double conductivity(double temperature) const;
    void validate() const;
};

/// Shipped defaults: stainless steel, cupronickel, niobium-titanium.
const std::vector<Material>& builtin_materials();
const Material& find_material(const std::vector<Material>& db, const std::string& name);

struct FridgeStage {
    std::string name;
    double temperature = 0;    // K
    double cooling_power = 0;  // W available at this stage
};

struct FridgeSpec {
    std::vector<FridgeStage> stages;  // temperatures strictly decreasing

    void validate() const;
    const FridgeStage& stage(const std::string& name) const;
};

struct CableSegment {
    std::string material;
    double cross_section = 0;  // conductor area, m^2
    double length = 0;         // m
    std::string from_stage;    // warmer end
    std::string to_stage;      // colder end
    int count = 1;
};

struct Attenuator {
    std::string stage;
    double attenuation_db = 0;
};

struct Amplifier {
    std::string name;
    double gain_db = 0;
    double noise_temperature = 0;  // K
};

struct WiringChain {
    std::vector<CableSegment> cables;
    std::vector<Attenuator> attenuators;
    std::vector<Amplifier> receiver;
    double signal_power = 0;  // W applied at the top of the line; 0 = unconfigured
};

/// T = h f / kB.
double thermal_quantum(double f);

/// Bose-Einstein mean photon number at (f, T).
double occupancy(double f, double temperature);

/// Conductive load through one cable: (A/L) * integral of k(T) dT, closed
/// form for the power law. Throws when [t_cold, t_hot] leaves the material's
/// validity range.
double cable_heat_load(const Material& material, double cross_section, double length,
                       double t_hot, double t_cold);

/// Photon-number recursion through the attenuator chain, evaluated top-down
/// in fridge stage order: n_out = n_in/A + (1 - 1/A) * occupancy(f, T_stage).
double attenuation_chain_noise(const WiringChain& chain, const FridgeSpec& fridge, double f,
                               double input_temperature);

/// Friis cascade: T_sys = T1 + T2/G1 + T3/(G1 G2) + ...
double receiver_noise(const std::vector<Amplifier>& amplifiers);

struct StageBudget {
    std::string stage;
    double conductive_load = 0;   // W arriving from the warmer neighbor
    double dissipated_power = 0;  // W from attenuators, when signal power is set
    double cooling_power = 0;     // W
    bool pass = true;
};

std::vector<StageBudget> stage_budget(const WiringChain& chain, const FridgeSpec& fridge,
                                      const std::vector<Material>& materials = builtin_materials());

/// Materials database file: JSON array of {name, a, b, t_min, t_max}.
std::vector<Material> load_materials(const std::string& path);

}  // namespace qpkg
