#include "boilerfdd/thermo.hpp"

#include <cmath>
#include <stdexcept>

#include "boilerfdd/errors.hpp"

namespace boilerfdd {

double FuelSpec::molar_mass() const {
    return carbon_atoms * molar::kC + hydrogen_atoms * molar::kH;
}

void FuelSpec::validate() const {
    if (carbon_atoms < 1 || hydrogen_atoms < 1)
        throw SpecError("fuel must contain at least one carbon and one hydrogen atom");
    if (!(lhv > 0.0) || !(hhv > lhv))
        throw SpecError("fuel heating values must satisfy hhv > lhv > 0");
    if (!(cp_fuel > 0.0)) throw SpecError("fuel specific heat must be positive");
    if (!(t_fuel > 0.0)) throw SpecError("fuel temperature must be positive");
}

void AirSpec::validate() const {
    if (!(cp_dry > 0.0) || !(cp_vapor > 0.0)) throw SpecError("air specific heats must be positive");
    if (relative_humidity < 0.0 || relative_humidity > 1.0)
        throw SpecError("relative humidity must lie in [0, 1]");
    if (!(pressure > 0.0)) throw SpecError("air pressure must be positive");
    if (!(t_outdoor > 0.0)) throw SpecError("outdoor temperature must be positive");
}

double fuel_mass_flow(double q_in, const FuelSpec& fuel) {
    if (!(fuel.hhv > 0.0)) throw SpecError("fuel hhv must be positive");
    if (q_in < 0.0) throw std::domain_error("heat input must be non-negative");
    return q_in / fuel.hhv;
}

ProductMoles product_moles(const FuelSpec& fuel, double z) {
    if (z < 0.0)
        throw std::domain_error("excess air fraction must be non-negative "
                                "(incomplete combustion is not modelled)");
    const double x = fuel.carbon_atoms;
    const double y = fuel.hydrogen_atoms;
    const double stoich_o2 = x + y / 4.0;
    ProductMoles p;
    p.co2 = x;
    p.h2o = y / 2.0;
    p.o2 = z * stoich_o2;
    p.n2 = kN2PerO2 * (1.0 + z) * stoich_o2;
    return p;
}

double flue_fraction(const FuelSpec& fuel, double z, Species species, FlueBasis basis) {
    const ProductMoles p = product_moles(fuel, z);
    const double n = (species == Species::CO2) ? p.co2 : p.o2;
    return n / p.total(basis);
}

double flue_mass_fraction(const FuelSpec& fuel, double z, Species species, FlueBasis basis) {
    const ProductMoles p = product_moles(fuel, z);
    const double m_co2 = p.co2 * molar::kCO2;
    const double m_o2 = p.o2 * molar::kO2;
    const double m_n2 = p.n2 * molar::kN2;
    const double m_h2o = p.h2o * molar::kH2O;
    const double total = m_co2 + m_o2 + m_n2 + (basis == FlueBasis::Wet ? m_h2o : 0.0);
    return ((species == Species::CO2) ? m_co2 : m_o2) / total;
}

double excess_air_from_co2(const FuelSpec& fuel, double target_co2, FlueBasis basis) {
    if (!(target_co2 > 0.0)) throw std::domain_error("target CO2 fraction must be positive");
    const double x = fuel.carbon_atoms;
    const double y = fuel.hydrogen_atoms;
    const double stoich_o2 = x + y / 4.0;
    // denominator D(z) = d0 + 4.76 * stoich_o2 * z, fraction = x / D(z)
    const double d0 = x + kN2PerO2 * stoich_o2 + (basis == FlueBasis::Wet ? y / 2.0 : 0.0);
    const double max_fraction = x / d0;
    if (target_co2 > max_fraction * (1.0 + 1e-12))
        throw UnreachableTargetError("CO2 fraction above the stoichiometric maximum " +
                                     std::to_string(max_fraction));
    const double z = (x / target_co2 - d0) / ((1.0 + kN2PerO2) * stoich_o2);
    return std::max(z, 0.0);
}

double saturation_pressure(double t_kelvin) {
    const double t_c = t_kelvin - 273.15;
    return 610.94 * std::exp(17.625 * t_c / (t_c + 243.04));
}

double humidity_ratio(double t_dry_bulb, double relative_humidity, double pressure) {
    if (relative_humidity < 0.0 || relative_humidity > 1.0)
        throw std::domain_error("relative humidity must lie in [0, 1]");
    if (!(t_dry_bulb > 200.0) || !(t_dry_bulb < 350.0))
        throw std::domain_error("dry-bulb temperature outside the correlation range (200, 350) K");
    const double p_w = relative_humidity * saturation_pressure(t_dry_bulb);
    if (p_w >= pressure)
        throw SaturationError("vapor partial pressure reaches total pressure");
    return 0.622 * p_w / (pressure - p_w);
}

double dry_air_mass_per_kg_fuel(const FuelSpec& fuel, double z) {
    const double stoich_o2 = fuel.carbon_atoms + fuel.hydrogen_atoms / 4.0;
    const double kg_air_per_mol_fuel =
        (1.0 + z) * stoich_o2 * (molar::kO2 + kN2PerO2 * molar::kN2);
    return kg_air_per_mol_fuel / fuel.molar_mass();
}

double dry_products_mass_per_kg_fuel(const FuelSpec& fuel, double z) {
    const ProductMoles p = product_moles(fuel, z);
    return (p.co2 * molar::kCO2 + p.o2 * molar::kO2 + p.n2 * molar::kN2) / fuel.molar_mass();
}

double combustion_vapor_mass_per_kg_fuel(const FuelSpec& fuel) {
    return (fuel.hydrogen_atoms / 2.0) * molar::kH2O / fuel.molar_mass();
}

namespace {

struct FlameBalance {
    double t_mix;     // K
    double c_products;  // J/K per kg fuel, vapor included or not
    double m_dry;     // kg per kg fuel
    double m_vapor;   // kg per kg fuel, combustion vapor + air moisture
};

FlameBalance flame_balance(const FuelSpec& fuel, const AirSpec& air, double z,
                           bool include_vapor) {
    const double w = humidity_ratio(air.t_outdoor, air.relative_humidity, air.pressure);
    const double m_air = dry_air_mass_per_kg_fuel(fuel, z);
    const double m_moisture = w * m_air;

    const double c_fuel = fuel.cp_fuel;  // per kg fuel
    const double c_air = m_air * air.cp_dry + m_moisture * air.cp_vapor;

    FlameBalance b;
    b.t_mix = (c_fuel * fuel.t_fuel + c_air * air.t_outdoor) / (c_fuel + c_air);
    b.m_dry = dry_products_mass_per_kg_fuel(fuel, z);
    b.m_vapor = combustion_vapor_mass_per_kg_fuel(fuel) + m_moisture;
    b.c_products = b.m_dry * air.cp_dry + (include_vapor ? b.m_vapor * air.cp_vapor : 0.0);
    return b;
}

}  // namespace

double adiabatic_flame_temperature(const FuelSpec& fuel, const AirSpec& air, double z,
                                   bool include_vapor) {
    // lhv = 0 is allowed here (no heat release -> mixing temperature)
    if (fuel.carbon_atoms < 1 || fuel.hydrogen_atoms < 1 || !(fuel.cp_fuel > 0.0))
        throw SpecError("invalid fuel for flame-temperature balance");
    if (fuel.lhv < 0.0) throw SpecError("fuel lhv must be non-negative");
    air.validate();
    const FlameBalance b = flame_balance(fuel, air, z, include_vapor);
    return b.t_mix + fuel.lhv / b.c_products;
}

CombustionState combustion_outputs(const FuelSpec& fuel, const AirSpec& air, double q_in,
                                   double z) {
    fuel.validate();
    air.validate();
    if (!(q_in > 0.0)) throw std::domain_error("heat input must be positive");

    const FlameBalance b = flame_balance(fuel, air, z, /*include_vapor=*/true);

    CombustionState s;
    s.excess_air = z;
    s.m_fuel = fuel_mass_flow(q_in, fuel);
    s.m_dry_products = b.m_dry * s.m_fuel;
    s.m_vapor = b.m_vapor * s.m_fuel;
    s.t_flame = b.t_mix + fuel.lhv / b.c_products;
    s.c_gas = s.m_dry_products * air.cp_dry + s.m_vapor * air.cp_vapor;
    s.q_release = s.m_fuel * fuel.lhv;
    s.t_mix = b.t_mix;
    s.product_moles = product_moles(fuel, z);
    return s;
}

std::string to_string(Species s) { return s == Species::CO2 ? "CO2" : "O2"; }
std::string to_string(FlueBasis b) { return b == FlueBasis::Dry ? "dry" : "wet"; }

}  // namespace boilerfdd
