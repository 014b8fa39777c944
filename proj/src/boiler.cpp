#include "boilerfdd/boiler.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "boilerfdd/errors.hpp"
#include "boilerfdd/heat_exchanger.hpp"

namespace boilerfdd {

void FaultCondition::validate() const {
    if (kind == Kind::Normal) {
        if (magnitude != 0.0) throw SpecError("normal condition carries no magnitude");
        return;
    }
    if (!(magnitude > 0.0)) throw SpecError("fault magnitude must be positive");
}

std::string FaultCondition::label() const {
    auto level = [&] {
        char buf[32];
        auto r = std::to_chars(buf, buf + sizeof buf, magnitude, std::chars_format::fixed, 2);
        return std::string(buf, r.ptr);
    };
    switch (kind) {
        case Kind::Normal: return "normal";
        case Kind::ExcessAir: return "excess_air:" + level();
        case Kind::Fouling: return "fouling:" + level();
        case Kind::Scaling: return "scaling:" + level();
    }
    throw std::logic_error("unreachable");
}

FaultCondition FaultCondition::from_label(const std::string& label) {
    if (label == "normal") return normal();
    const auto colon = label.find(':');
    if (colon != std::string::npos) {
        const std::string kind = label.substr(0, colon);
        const double m = std::stod(label.substr(colon + 1));
        if (kind == "excess_air") return excess_air(m);
        if (kind == "fouling") return fouling(m);
        if (kind == "scaling") return scaling(m);
    }
    throw DataError("unknown fault label '" + label + "'");
}

void RatedPoint::validate() const {
    if (!(q_in > 0.0) || !(q_out > 0.0) || !(q_out < q_in))
        throw SpecError("rated point requires 0 < q_out < q_in");
    if (!(water_flow > 0.0)) throw SpecError("rated water flow must be positive");
    if (!(delta_t > 0.0)) throw SpecError("rated delta-T must be positive");
    if (!(t_return > 273.0) || !(t_return < 373.0))
        throw SpecError("rated return temperature outside liquid range");
}

void BoilerSpec::finalize() {
    fuel.validate();
    baseline_z = excess_air_from_co2(fuel, rated_co2_dry, FlueBasis::Dry);
    validate();
}

void BoilerSpec::validate() const {
    if (id.empty()) throw SpecError("boiler spec needs an id");
    if (!(rated_input > 0.0) || !(rated_output > 0.0) || !(rated_output < rated_input))
        throw SpecError("boiler spec requires 0 < rated_output < rated_input");
    if (!(area_inner > 0.0) || !(area_outer > 0.0))
        throw SpecError("boiler spec areas must be positive");
    if (!(h_inner > 0.0)) throw SpecError("liquid-side coefficient must be positive");
    if (h_outer_calibrated < 0.0) throw SpecError("gas-side coefficient must be non-negative");
    if (!(nominal_water_flow > 0.0)) throw SpecError("nominal water flow must be positive");
    if (!(rated_co2_dry > 0.0)) throw SpecError("rated CO2 fraction must be positive");
    if (shell_passes < 1) throw SpecError("shell pass count must be at least 1");
    fuel.validate();
}

void OperatingPoint::validate() const {
    if (!(firing_fraction > 0.0) || firing_fraction > 1.0)
        throw SpecError("firing fraction must lie in (0, 1]");
    if (!(water_flow > 0.0)) throw SpecError("water flow must be positive");
    if (!(t_return > 273.0) || !(t_return < 373.0))
        throw SpecError("return temperature outside liquid range (273, 373) K");
    if (rh < 0.0 || rh > 1.0) throw SpecError("relative humidity must lie in [0, 1]");
}

SteadyStateResult simulate(const BoilerSpec& spec, const OperatingPoint& op,
                           const FaultCondition& fault) {
    spec.validate();
    op.validate();
    fault.validate();
    if (!spec.calibrated())
        throw SpecError("boiler spec '" + spec.id + "' is not calibrated");

    double z = spec.baseline_z;
    FoulingState fouling;
    switch (fault.kind) {
        case FaultCondition::Kind::Normal: break;
        case FaultCondition::Kind::ExcessAir: z += fault.magnitude; break;
        case FaultCondition::Kind::Fouling: fouling.r_outer = fault.magnitude; break;
        case FaultCondition::Kind::Scaling: fouling.r_inner = fault.magnitude; break;
    }

    AirSpec air;
    air.t_outdoor = op.t_outdoor;
    air.relative_humidity = op.rh;

    const double q_in = op.firing_fraction * spec.rated_input;
    const CombustionState comb = combustion_outputs(spec.fuel, air, q_in, z);

    HxGeometry geom;
    geom.area_inner = spec.area_inner;
    geom.area_outer = spec.area_outer;
    geom.h_inner = spec.h_inner;
    geom.h_outer = spec.h_outer_calibrated;
    geom.shell_passes = spec.shell_passes;
    const double ua = overall_ua(geom, fouling);

    const double c_water = op.water_flow * kWaterCp;
    const HxSolution hx =
        solve_outlets(comb.t_flame, comb.c_gas, op.t_return, c_water, ua, spec.shell_passes);

    SteadyStateResult r;
    r.q_in = q_in;
    r.q_out = hx.q;
    r.t_supply = hx.t_cold_out;
    r.t_exhaust = hx.t_hot_out;
    r.ua = ua;
    r.combustion = comb;
    r.eta_thermal = r.q_out / r.q_in;
    r.flue_sensible_loss = comb.c_gas * (r.t_exhaust - comb.t_mix);
    r.latent_loss = comb.m_fuel * (spec.fuel.hhv - spec.fuel.lhv);

    // Post-hoc heat balance for the exhaust temperature must agree with the
    // exchanger hot outlet.
    assert(std::abs(comb.t_flame - r.q_out / comb.c_gas - r.t_exhaust) <
           1e-6 * std::max(1.0, r.t_exhaust));

    // Same accounting as combustion_efficiency(), inlined without the
    // t_exhaust > t_room guard so extreme sweeps still return a result.
    r.flue_loss = 100.0 *
                  (comb.c_gas * (r.t_exhaust - kDefaultRoomTemp) + comb.m_vapor * kLatentHeatVapor) /
                  r.q_in;
    r.eff_combustion = 100.0 - r.flue_loss;
    return r;
}

double thermal_efficiency(const SteadyStateResult& result) {
    if (!(result.q_in > 0.0)) throw std::domain_error("heat input must be positive");
    return result.q_out / result.q_in;
}

double combustion_efficiency(const SteadyStateResult& result, double t_room) {
    if (!(result.q_in > 0.0)) throw std::domain_error("heat input must be positive");
    if (result.t_exhaust < t_room)
        throw std::domain_error("exhaust temperature must not fall below room temperature");
    const CombustionState& c = result.combustion;
    const double sensible = c.c_gas * (result.t_exhaust - t_room);
    const double latent = c.m_vapor * kLatentHeatVapor;
    const double l_f = 100.0 * (sensible + latent) / result.q_in;
    return 100.0 - l_f;
}

}  // namespace boilerfdd
