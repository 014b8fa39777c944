#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boilerfdd/thermo.hpp"

namespace boilerfdd {

constexpr double kWaterCp = 4186.0;        // J/kg/K, fixed liquid property
constexpr double kDefaultRoomTemp = 294.0; // K, combustion-efficiency reference
constexpr double kLatentHeatVapor = 2.257e6;  // J/kg, h_fg in the flue-loss accounting

// Exactly one fault active per simulation.
struct FaultCondition {
    enum class Kind { Normal, ExcessAir, Fouling, Scaling };

    Kind kind = Kind::Normal;
    double magnitude = 0.0;  // absent for Normal

    static FaultCondition normal() { return {}; }
    static FaultCondition excess_air(double m) { return {Kind::ExcessAir, m}; }
    static FaultCondition fouling(double m) { return {Kind::Fouling, m}; }
    static FaultCondition scaling(double m) { return {Kind::Scaling, m}; }

    void validate() const;
    std::string label() const;  // detailed class label, e.g. "fouling:0.26"
    static FaultCondition from_label(const std::string& label);
};

// One manufacturer rating point used for calibration and residual reporting.
struct RatedPoint {
    double q_in = 0.0;        // W
    double q_out = 0.0;       // W
    double water_flow = 0.0;  // kg/s
    double t_return = 0.0;    // K
    double delta_t = 0.0;     // K
    std::optional<double> t_exhaust;        // K
    std::optional<double> eff_combustion;   // percent
    std::optional<double> eta_thermal;      // fraction

    void validate() const;
};

// Flow / delta-T pairs from the manufacturer's extended tables.
struct ValidationPoint {
    double water_flow = 0.0;       // kg/s
    double expected_delta_t = 0.0; // K
};

// Manufacturer-derived description of one boiler model.
struct BoilerSpec {
    std::string id;
    std::string manufacturer;
    std::string model;
    double rated_input = 0.0;          // W (HHV basis)
    double rated_output = 0.0;         // W
    double area_inner = 0.0;           // m^2, water/tube side
    double area_outer = 0.0;           // m^2, gas/shell side
    double h_inner = 1000.0;           // W/m^2/K, liquid-side default
    double h_outer_calibrated = 0.0;   // W/m^2/K, 0 until calibrated
    double nominal_water_flow = 0.0;   // kg/s
    double nominal_return_temp = 333.0;  // K
    double rated_co2_dry = 0.10;       // dry-basis flue CO2 at design
    double water_volume = 0.0;         // m^3 (metadata)
    double hydraulic_diameter = 0.1016;  // m (metadata, unused by the thermal solve)
    FuelSpec fuel;
    int shell_passes = 2;
    double baseline_z = 0.0;           // set by finalize() from rated_co2_dry

    RatedPoint rated_point;
    std::vector<ValidationPoint> validation_points;

    bool calibrated() const { return h_outer_calibrated > 0.0; }
    // Derives baseline_z and checks invariants; call after filling fields.
    void finalize();
    void validate() const;
};

struct OperatingPoint {
    double firing_fraction = 1.0;  // (0, 1]
    double water_flow = 0.0;       // kg/s
    double t_return = 333.0;       // K
    double t_outdoor = 293.15;     // K
    double rh = 0.65;              // fraction

    void validate() const;
};

struct SteadyStateResult {
    double t_supply = 0.0;        // K
    double t_exhaust = 0.0;       // K
    double q_out = 0.0;           // W
    double q_in = 0.0;            // W
    double eta_thermal = 0.0;     // fraction
    double eff_combustion = 0.0;  // percent, 100 - l_f
    double flue_loss = 0.0;       // percent, l_f
    double ua = 0.0;              // W/K as faulted
    CombustionState combustion;

    // Internal energy-closure accounting (reference = combustion t_mix):
    // q_in = q_out + flue_sensible_loss + latent_loss exactly.
    double flue_sensible_loss = 0.0;  // W, c_gas * (t_exhaust - t_mix)
    double latent_loss = 0.0;         // W, m_fuel * (hhv - lhv)
};

// Closed-form steady state: combustion chamber feeding the gas/water
// exchanger. Requires a calibrated spec.
SteadyStateResult simulate(const BoilerSpec& spec, const OperatingPoint& op,
                           const FaultCondition& fault);

// q_out / q_in.
double thermal_efficiency(const SteadyStateResult& result);

// 100 - L_f with L_f the sensible + uncondensed-vapor flue loss relative to
// the HHV heat input, evaluated against t_room.
double combustion_efficiency(const SteadyStateResult& result, double t_room = kDefaultRoomTemp);

}  // namespace boilerfdd
