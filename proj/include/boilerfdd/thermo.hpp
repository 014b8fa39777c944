#pragma once

#include <string>

namespace boilerfdd {

// Atomic and molecular masses [kg/mol]. Molecular masses are composed from
// the atomic ones so that combustion mass balances close to rounding error.
namespace molar {
constexpr double kC = 12.011e-3;
constexpr double kH = 1.008e-3;
constexpr double kO = 15.999e-3;
constexpr double kN = 14.007e-3;
constexpr double kO2 = 2.0 * kO;
constexpr double kN2 = 2.0 * kN;
constexpr double kH2O = 2.0 * kH + kO;
constexpr double kCO2 = kC + 2.0 * kO;
}  // namespace molar

// mol N2 accompanying each mol O2 in combustion air
constexpr double kN2PerO2 = 3.76;

// Hydrocarbon fuel CxHy with constant-property accounting.
struct FuelSpec {
    int carbon_atoms = 1;       // x
    int hydrogen_atoms = 4;     // y
    double lhv = 50.0e6;        // J/kg
    double hhv = 55.5e6;        // J/kg
    double cp_fuel = 2191.0;    // J/kg/K
    double t_fuel = 303.0;      // K

    double molar_mass() const;  // kg/mol
    void validate() const;      // throws SpecError

    static FuelSpec methane() { return FuelSpec{}; }
};

// Combustion air with constant specific heats.
struct AirSpec {
    double cp_dry = 1005.0;           // J/kg/K
    double cp_vapor = 2900.0;         // J/kg/K
    double t_outdoor = 293.15;        // K
    double relative_humidity = 0.65;  // fraction
    double pressure = 101325.0;       // Pa

    void validate() const;  // throws SpecError
};

enum class Species { CO2, O2 };
enum class FlueBasis { Dry, Wet };

// Product mole counts per mole of fuel for
//   CxHy + (1+z)(x+y/4)(O2 + 3.76 N2) -> x CO2 + y/2 H2O + z(x+y/4) O2 + 3.76(1+z)(x+y/4) N2
struct ProductMoles {
    double co2 = 0.0;
    double h2o = 0.0;
    double o2 = 0.0;
    double n2 = 0.0;

    double total(FlueBasis basis) const {
        return co2 + o2 + n2 + (basis == FlueBasis::Wet ? h2o : 0.0);
    }
};

// One converged combustion-chamber state.
struct CombustionState {
    double excess_air = 0.0;      // z
    double m_fuel = 0.0;          // kg/s
    double m_dry_products = 0.0;  // kg/s (CO2 + O2 + N2 lumped at cp_dry)
    double m_vapor = 0.0;         // kg/s (combustion H2O + inlet air moisture)
    double t_flame = 0.0;         // K
    double c_gas = 0.0;           // W/K
    double q_release = 0.0;       // W, LHV basis
    double t_mix = 0.0;           // K, reactant mixing temperature (enthalpy reference)
    ProductMoles product_moles;   // per mole fuel
};

// Eq. m_gas = Q_in / HHV (input ratings are HHV-based).
double fuel_mass_flow(double q_in, const FuelSpec& fuel);

// Product mole counts per mole fuel; z >= 0 (sub-stoichiometric air is not modelled).
ProductMoles product_moles(const FuelSpec& fuel, double z);

// Mole fraction of CO2 or O2 in the flue gas, dry or wet basis.
double flue_fraction(const FuelSpec& fuel, double z, Species species, FlueBasis basis);

// Mass-fraction reading of the same ratio (kept for comparison; the mole
// reading is the calibration default).
double flue_mass_fraction(const FuelSpec& fuel, double z, Species species, FlueBasis basis);

// Closed-form inverse of flue_fraction in the CO2 slot: the denominator is
// linear in z. Throws UnreachableTargetError above the stoichiometric maximum.
double excess_air_from_co2(const FuelSpec& fuel, double target_co2, FlueBasis basis);

// Saturation pressure over liquid water [Pa], Magnus form
//   p_sat = 610.94 * exp(17.625 t / (t + 243.04)), t in degC
// (Alduchov-Eskridge coefficients).
double saturation_pressure(double t_kelvin);

// Humidity ratio W = 0.622 p_w / (p - p_w) [kg vapor / kg dry air].
double humidity_ratio(double t_dry_bulb, double relative_humidity, double pressure);

// Dry combustion air demand per kg of fuel at excess-air fraction z.
double dry_air_mass_per_kg_fuel(const FuelSpec& fuel, double z);
// Dry product mass (CO2+O2+N2) per kg of fuel.
double dry_products_mass_per_kg_fuel(const FuelSpec& fuel, double z);
// Combustion-generated water vapor per kg of fuel.
double combustion_vapor_mass_per_kg_fuel(const FuelSpec& fuel);

// Adiabatic flame temperature from the constant-cp energy balance
//   m_fuel*lhv = c_products * (t_flame - t_mix)
// where t_mix is the heat-capacity-weighted mixing temperature of the
// reactant streams (fuel at t_fuel, air and its moisture at t_outdoor).
// t_mix is the enthalpy reference; with lhv = 0 the flame temperature is
// exactly the reactant mixing temperature. When include_vapor is false the
// product vapor (mass and heat capacity) is left out of the product stream.
double adiabatic_flame_temperature(const FuelSpec& fuel, const AirSpec& air, double z,
                                   bool include_vapor);

// Full combustion-chamber solve for a given heat input (HHV basis) and
// excess air. Flame temperature always carries the vapor.
CombustionState combustion_outputs(const FuelSpec& fuel, const AirSpec& air, double q_in,
                                   double z);

std::string to_string(Species s);
std::string to_string(FlueBasis b);

}  // namespace boilerfdd
