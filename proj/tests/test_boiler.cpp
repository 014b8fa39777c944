#include <doctest.h>

#include <cmath>
#include <cstring>

#include "boilerfdd/boiler.hpp"
#include "boilerfdd/calibration.hpp"
#include "boilerfdd/errors.hpp"
#include "boilerfdd/rng.hpp"
#include "boilerfdd/spec_io.hpp"

using namespace boilerfdd;

#ifndef BOILERFDD_SPEC_DIR
#error "BOILERFDD_SPEC_DIR must point at the shipped spec files"
#endif

namespace {

BoilerSpec calibrated(const std::string& name) {
    BoilerSpec spec = load_boiler_spec(std::string(BOILERFDD_SPEC_DIR) + "/" + name);
    calibrate_gas_htc(spec, spec.rated_point, 1e-5, 200);
    return spec;
}

OperatingPoint rated_op(const BoilerSpec& spec) {
    OperatingPoint op;
    op.water_flow = spec.nominal_water_flow;
    op.t_return = spec.nominal_return_temp;
    op.t_outdoor = kRatingAmbientTemp;
    op.rh = kRatingAmbientRh;
    return op;
}

}  // namespace

TEST_CASE("fault labels round-trip") {
    CHECK(FaultCondition::normal().label() == "normal");
    CHECK(FaultCondition::fouling(0.26).label() == "fouling:0.26");
    CHECK(FaultCondition::excess_air(0.01).label() == "excess_air:0.01");
    const FaultCondition f = FaultCondition::from_label("scaling:0.46");
    CHECK(f.kind == FaultCondition::Kind::Scaling);
    CHECK(f.magnitude == doctest::Approx(0.46));
    CHECK_THROWS_AS(FaultCondition::from_label("melted:1"), DataError);
}

TEST_CASE("simulation requires a calibrated spec") {
    BoilerSpec spec = load_boiler_spec(std::string(BOILERFDD_SPEC_DIR) + "/synthetic-test-200.json");
    CHECK_THROWS_AS(simulate(spec, rated_op(spec), FaultCondition::normal()), SpecError);
}

TEST_CASE("supply/return delta-T matches the manufacturer table") {
    const BoilerSpec spec = calibrated("vitorond200-500.json");
    OperatingPoint op = rated_op(spec);
    op.water_flow = 10.8;
    SteadyStateResult r = simulate(spec, op, FaultCondition::normal());
    CHECK(r.t_supply - op.t_return == doctest::Approx(11.0).epsilon(0.7 / 11.0));

    op.water_flow = 5.4;
    r = simulate(spec, op, FaultCondition::normal());
    CHECK(r.t_supply - op.t_return == doctest::Approx(22.0).epsilon(0.7 / 22.0));
}

TEST_CASE("extreme fouling kills the heat output") {
    const BoilerSpec spec = calibrated("synthetic-test-200.json");
    const SteadyStateResult r =
        simulate(spec, rated_op(spec), FaultCondition::fouling(1e5));
    CHECK(r.q_out < 100.0);
    CHECK(r.t_supply == doctest::Approx(spec.nominal_return_temp).epsilon(1e-4));
}

TEST_CASE("thermal efficiency is the output ratio") {
    SteadyStateResult r;
    r.q_out = 450e3;
    r.q_in = 500e3;
    CHECK(thermal_efficiency(r) == doctest::Approx(0.9));
    r.q_out = 0.0;
    CHECK(thermal_efficiency(r) == 0.0);
    r.q_in = 0.0;
    CHECK_THROWS_AS(thermal_efficiency(r), std::domain_error);
}

TEST_CASE("combustion efficiency accounting") {
    SteadyStateResult r;
    r.q_in = 500e3;
    r.t_exhaust = 294.0;
    r.combustion.c_gas = 200.0;
    r.combustion.m_vapor = 0.0;
    CHECK(combustion_efficiency(r, 294.0) == doctest::Approx(100.0));

    r.t_exhaust = 400.0;
    CHECK(combustion_efficiency(r, 294.0) ==
          doctest::Approx(100.0 - 100.0 * 200.0 * 106.0 / 500e3));

    r.t_exhaust = 200.0;
    CHECK_THROWS_AS(combustion_efficiency(r, 294.0), std::domain_error);
}

TEST_CASE("combustion efficiency falls with excess air") {
    const BoilerSpec spec = calibrated("synthetic-test-200.json");
    const OperatingPoint op = rated_op(spec);
    double prev = 101.0;
    for (double z : {0.01, 0.11, 0.21, 0.31, 0.41}) {
        const SteadyStateResult r = simulate(spec, op, FaultCondition::excess_air(z));
        CHECK(r.eff_combustion < prev);
        prev = r.eff_combustion;
        CHECK(r.combustion.excess_air == doctest::Approx(spec.baseline_z + z));
    }
}

TEST_CASE("rated-point efficiencies stay near the manufacturer figures") {
    for (const char* name :
         {"vitorond200-320.json", "vitorond200-500.json", "vitorond200-1080.json"}) {
        const BoilerSpec spec = calibrated(name);
        const SteadyStateResult r = simulate(spec, rated_op(spec), FaultCondition::normal());
        REQUIRE(spec.rated_point.eta_thermal.has_value());
        REQUIRE(spec.rated_point.eff_combustion.has_value());
        CHECK(std::abs(r.eta_thermal - *spec.rated_point.eta_thermal) /
                  *spec.rated_point.eta_thermal <
              0.04);
        CHECK(std::abs(r.eff_combustion - *spec.rated_point.eff_combustion) /
                  *spec.rated_point.eff_combustion <
              0.03);
    }
}

TEST_CASE("simulation is deterministic") {
    const BoilerSpec spec = calibrated("synthetic-test-200.json");
    OperatingPoint op = rated_op(spec);
    op.firing_fraction = 0.8;
    op.t_outdoor = 263.0;
    const SteadyStateResult a = simulate(spec, op, FaultCondition::scaling(0.11));
    const SteadyStateResult b = simulate(spec, op, FaultCondition::scaling(0.11));
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
}

TEST_CASE("faults degrade output monotonically") {
    const BoilerSpec spec = calibrated("synthetic-test-200.json");
    const OperatingPoint op = rated_op(spec);
    for (auto make : {&FaultCondition::fouling, &FaultCondition::scaling}) {
        double prev_q = 1e18, prev_supply = 1e18, prev_exhaust = 0.0;
        for (double level = 0.01; level <= 0.47; level += 0.05) {
            const SteadyStateResult r = simulate(spec, op, make(level));
            CHECK(r.q_out < prev_q);
            CHECK(r.t_supply < prev_supply);
            CHECK(r.t_exhaust > prev_exhaust);
            prev_q = r.q_out;
            prev_supply = r.t_supply;
            prev_exhaust = r.t_exhaust;
        }
    }
    // rising excess air cools the flame
    double prev_flame = 1e18;
    for (double z = 0.01; z <= 0.47; z += 0.05) {
        const SteadyStateResult r = simulate(spec, op, FaultCondition::excess_air(z));
        CHECK(r.combustion.t_flame < prev_flame);
        prev_flame = r.combustion.t_flame;
    }
}

TEST_CASE("steady-state bounds and closure over random operating points") {
    const BoilerSpec spec = calibrated("synthetic-test-200.json");
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        OperatingPoint op;
        op.firing_fraction = rng.uniform(0.3, 1.0);
        op.water_flow = spec.nominal_water_flow * rng.uniform(0.5, 1.5);
        op.t_return = rng.uniform(310.0, 350.0);
        op.t_outdoor = rng.uniform(250.0, 300.0);
        op.rh = rng.uniform(0.0, 1.0);
        const SteadyStateResult r = simulate(spec, op, FaultCondition::normal());
        CHECK(r.q_out < r.q_in);
        CHECK(r.eta_thermal > 0.0);
        CHECK(r.eta_thermal < 1.0);
        CHECK(r.t_supply > op.t_return);
        CHECK(r.t_exhaust > op.t_return);
        // internal loss accounting closes against the HHV input
        CHECK(r.q_in == doctest::Approx(r.q_out + r.flue_sensible_loss + r.latent_loss)
                            .epsilon(1e-6));
    }
}

TEST_CASE("exhaust leaves hotter than the supply near rated firing") {
    // At deep part load the constant-UA exchanger runs NTU high enough for
    // the ordinary counterflow temperature approach to cross these two
    // outlets; near rating the non-condensing ordering holds.
    for (const char* name : {"synthetic-test-200.json", "vitorond200-500.json",
                             "vitorond200-1080.json", "raypak-685t.json"}) {
        const BoilerSpec spec = calibrated(name);
        Rng rng(32);
        for (int trial = 0; trial < 50; ++trial) {
            OperatingPoint op;
            op.firing_fraction = rng.uniform(0.8, 1.0);
            op.water_flow = spec.nominal_water_flow * rng.uniform(0.6, 1.4);
            op.t_return = rng.uniform(313.0, 343.0);
            op.t_outdoor = rng.uniform(253.0, 293.0);
            const SteadyStateResult r = simulate(spec, op, FaultCondition::normal());
            CHECK(r.t_exhaust > r.t_supply);
        }
    }
}
