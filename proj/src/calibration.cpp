#include "boilerfdd/calibration.hpp"

#include <cmath>

#include "boilerfdd/errors.hpp"

namespace boilerfdd {

namespace {

constexpr double kBracketLo = 1.0;    // W/m^2/K
constexpr double kBracketHi = 1.0e6;  // W/m^2/K

OperatingPoint rated_operating_point(const RatedPoint& rated) {
    OperatingPoint op;
    op.firing_fraction = 1.0;
    op.water_flow = rated.water_flow;
    op.t_return = rated.t_return;
    op.t_outdoor = kRatingAmbientTemp;
    op.rh = kRatingAmbientRh;
    return op;
}

double simulated_q_out(const BoilerSpec& spec, const OperatingPoint& op, double h_outer) {
    BoilerSpec trial = spec;
    trial.h_outer_calibrated = h_outer;
    return simulate(trial, op, FaultCondition::normal()).q_out;
}

}  // namespace

CalibrationReport calibrate_gas_htc(BoilerSpec& spec, const RatedPoint& rated, double tol,
                                    int max_iter) {
    spec.validate();
    if (!(tol > 0.0)) throw ConfigError("calibration tolerance must be positive");
    if (max_iter < 1) throw ConfigError("max_iter must be at least 1");
    if (rated.q_out >= rated.q_in)
        throw CalibrationError("rated q_out exceeds heat input; target is unreachable");
    rated.validate();

    // The rated point itself must be self-consistent.
    const double q_from_flow = rated.water_flow * kWaterCp * rated.delta_t;
    if (std::abs(q_from_flow - rated.q_out) > 0.05 * rated.q_out)
        throw CalibrationError("rated point inconsistent: flow * cp * delta_t = " +
                               std::to_string(q_from_flow) + " W vs q_out = " +
                               std::to_string(rated.q_out) + " W");

    const OperatingPoint op = rated_operating_point(rated);

    // Monotone-premise check: q_out must increase along sampled h values.
    // Ties are tolerated at the top of the range where the effectiveness
    // saturates to 1 in double precision.
    double prev = -1.0;
    double first = 0.0, last = 0.0;
    for (double h : {kBracketLo, 10.0, 100.0, 1000.0, 1e4, 1e5, kBracketHi}) {
        const double q = simulated_q_out(spec, op, h);
        if (q < prev) throw CalibrationError("simulated q_out is not increasing in h_outer");
        if (h == kBracketLo) first = q;
        last = q;
        prev = q;
    }
    if (!(last > first)) throw CalibrationError("simulated q_out is flat in h_outer");

    double lo = kBracketLo, hi = kBracketHi;
    const double q_lo = simulated_q_out(spec, op, lo);
    const double q_hi = simulated_q_out(spec, op, hi);
    if (rated.q_out < q_lo || rated.q_out > q_hi)
        throw CalibrationError("rated q_out not bracketed by h_outer in [1, 1e6] W/m^2/K");

    CalibrationReport report;
    double h = 0.0, q = 0.0;
    for (int i = 0; i < max_iter; ++i) {
        h = 0.5 * (lo + hi);
        q = simulated_q_out(spec, op, h);
        ++report.iterations;
        if (std::abs(q - rated.q_out) <= tol * rated.q_out) {
            report.converged = true;
            break;
        }
        (q < rated.q_out ? lo : hi) = h;
    }
    if (!report.converged)
        throw ConvergenceError("calibration did not converge within " +
                                   std::to_string(max_iter) + " iterations",
                               h);

    report.h_outer_fitted = h;
    spec.h_outer_calibrated = h;

    const SteadyStateResult r = simulate(spec, op, FaultCondition::normal());
    report.residuals["q_out"] = (r.q_out - rated.q_out) / rated.q_out;
    report.residuals["delta_t"] =
        ((r.t_supply - op.t_return) - rated.delta_t) / rated.delta_t;
    if (rated.t_exhaust)
        report.residuals["t_exhaust"] = (r.t_exhaust - *rated.t_exhaust) / *rated.t_exhaust;
    if (rated.eff_combustion)
        report.residuals["eff_combustion"] =
            (r.eff_combustion - *rated.eff_combustion) / *rated.eff_combustion;
    if (rated.eta_thermal)
        report.residuals["eta_thermal"] = (r.eta_thermal - *rated.eta_thermal) / *rated.eta_thermal;
    return report;
}

ValidationReport validate_delta_t(const BoilerSpec& spec,
                                  const std::vector<ValidationPoint>& points) {
    if (!spec.calibrated()) throw SpecError("validation requires a calibrated spec");

    ValidationReport report;
    for (const ValidationPoint& p : points) {
        OperatingPoint op;
        op.firing_fraction = 1.0;
        op.water_flow = p.water_flow;
        op.t_return = spec.nominal_return_temp;
        op.t_outdoor = kRatingAmbientTemp;
        op.rh = kRatingAmbientRh;
        const SteadyStateResult r = simulate(spec, op, FaultCondition::normal());
        const double achieved = r.t_supply - op.t_return;
        report.achieved_delta_t.push_back(achieved);
        report.errors.push_back(achieved - p.expected_delta_t);
    }
    if (!report.errors.empty()) {
        double sum = 0.0;
        for (double e : report.errors) sum += e;
        report.mean_error = sum / static_cast<double>(report.errors.size());
    }
    return report;
}

}  // namespace boilerfdd
