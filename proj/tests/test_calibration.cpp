#include <doctest.h>

#include <cmath>

#include "boilerfdd/calibration.hpp"
#include "boilerfdd/errors.hpp"
#include "boilerfdd/rng.hpp"
#include "boilerfdd/spec_io.hpp"

using namespace boilerfdd;

namespace {

// A plausible randomized boiler around a known gas-side coefficient.
BoilerSpec random_spec(Rng& rng, double h_true) {
    BoilerSpec s;
    s.id = "roundtrip";
    const double output = rng.uniform(5e4, 1.2e6);
    s.rated_output = output;
    s.rated_input = output / rng.uniform(0.78, 0.88);
    s.area_outer = output / rng.uniform(4.0e4, 5.6e4);
    s.area_inner = s.area_outer * rng.uniform(0.85, 0.98);
    s.nominal_water_flow = output / (kWaterCp * 11.11);
    s.rated_co2_dry = rng.uniform(0.08, 0.105);
    s.h_outer_calibrated = h_true;
    s.finalize();
    return s;
}

RatedPoint rated_point_by_simulation(const BoilerSpec& spec) {
    OperatingPoint op;
    op.water_flow = spec.nominal_water_flow;
    op.t_return = spec.nominal_return_temp;
    op.t_outdoor = kRatingAmbientTemp;
    op.rh = kRatingAmbientRh;
    const SteadyStateResult r = simulate(spec, op, FaultCondition::normal());
    RatedPoint rated;
    rated.q_in = r.q_in;
    rated.q_out = r.q_out;
    rated.water_flow = op.water_flow;
    rated.t_return = op.t_return;
    rated.delta_t = r.t_supply - op.t_return;
    return rated;
}

}  // namespace

TEST_CASE("round-trip recovery of a known gas-side coefficient") {
    Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const double h_true = rng.uniform(25.0, 110.0);
        BoilerSpec spec = random_spec(rng, h_true);
        const RatedPoint rated = rated_point_by_simulation(spec);
        spec.h_outer_calibrated = 0.0;
        const CalibrationReport report = calibrate_gas_htc(spec, rated, 1e-5, 200);
        CHECK(report.converged);
        CHECK(report.h_outer_fitted == doctest::Approx(h_true).epsilon(0.01));
        CHECK(spec.h_outer_calibrated == report.h_outer_fitted);
    }
}

TEST_CASE("loose tolerance converges immediately") {
    Rng rng(102);
    BoilerSpec spec = random_spec(rng, 80.0);
    const RatedPoint rated = rated_point_by_simulation(spec);
    spec.h_outer_calibrated = 0.0;
    const CalibrationReport report = calibrate_gas_htc(spec, rated, 1.0, 200);
    CHECK(report.converged);
    CHECK(report.iterations <= 2);
}

TEST_CASE("impossible targets are rejected") {
    Rng rng(103);
    BoilerSpec spec = random_spec(rng, 80.0);
    RatedPoint rated = rated_point_by_simulation(spec);
    RatedPoint bad = rated;
    spec.h_outer_calibrated = 0.0;
    rated.q_out = rated.q_in * 1.05;
    rated.delta_t = rated.q_out / (rated.water_flow * kWaterCp);
    CHECK_THROWS_AS(calibrate_gas_htc(spec, rated), CalibrationError);

    // inconsistent flow/delta-T pair
    bad.delta_t *= 1.2;
    CHECK_THROWS_AS(calibrate_gas_htc(spec, bad), CalibrationError);
}

TEST_CASE("simulated q_out grows with the gas-side coefficient") {
    Rng rng(104);
    BoilerSpec spec = random_spec(rng, 80.0);
    OperatingPoint op;
    op.water_flow = spec.nominal_water_flow;
    op.t_return = spec.nominal_return_temp;
    op.t_outdoor = kRatingAmbientTemp;
    double prev = -1.0;
    for (double h = 10.0; h <= 1e4; h *= 2.0) {
        spec.h_outer_calibrated = h;
        const double q = simulate(spec, op, FaultCondition::normal()).q_out;
        CHECK(q > prev);
        prev = q;
    }
}

TEST_CASE("calibration is idempotent") {
    Rng rng(105);
    BoilerSpec spec = random_spec(rng, 120.0);
    const RatedPoint rated = rated_point_by_simulation(spec);
    spec.h_outer_calibrated = 0.0;
    const double tol = 1e-4;
    calibrate_gas_htc(spec, rated, tol, 200);
    const double first = spec.h_outer_calibrated;
    calibrate_gas_htc(spec, rated, tol, 200);
    CHECK(std::abs(spec.h_outer_calibrated - first) / first < tol);
}

TEST_CASE("validation against the transcribed flow tables") {
    const std::string dir = BOILERFDD_SPEC_DIR;
    const char* names[] = {"vitorond200-1080.json", "raypak-685t.json"};
    for (const char* name : names) {
        BoilerSpec spec = load_boiler_spec(dir + "/" + name);
        calibrate_gas_htc(spec, spec.rated_point, 1e-5, 200);
        const ValidationReport report = validate_delta_t(spec, spec.validation_points);
        REQUIRE(report.errors.size() == spec.validation_points.size());
        for (double e : report.errors) CHECK(std::abs(e) <= 0.7);
    }

    // the anchored rows
    BoilerSpec big = load_boiler_spec(dir + "/vitorond200-1080.json");
    calibrate_gas_htc(big, big.rated_point, 1e-5, 200);
    const ValidationReport r1080 = validate_delta_t(big, {{23.2, 11.0}});
    CHECK(std::abs(r1080.errors[0]) <= 0.5);

    BoilerSpec ray = load_boiler_spec(dir + "/raypak-685t.json");
    calibrate_gas_htc(ray, ray.rated_point, 1e-5, 200);
    const ValidationReport r685 = validate_delta_t(ray, {{3.47, 11.1}});
    CHECK(std::abs(r685.errors[0]) <= 0.7);

    const ValidationReport empty = validate_delta_t(ray, {});
    CHECK(empty.errors.empty());
    CHECK(empty.mean_error == 0.0);
}

TEST_CASE("calibration residuals are reported") {
    const std::string dir = BOILERFDD_SPEC_DIR;
    BoilerSpec spec = load_boiler_spec(dir + "/vitorond200-500.json");
    const CalibrationReport report = calibrate_gas_htc(spec, spec.rated_point, 1e-5, 200);
    CHECK(report.residuals.count("q_out"));
    CHECK(report.residuals.count("delta_t"));
    CHECK(report.residuals.count("eff_combustion"));
    CHECK(report.residuals.count("eta_thermal"));
    CHECK(std::abs(report.residuals.at("q_out")) < 1e-4);
    CHECK(std::abs(report.residuals.at("eff_combustion")) < 0.03);
}
