#pragma once

#include <map>
#include <string>
#include <vector>

#include "boilerfdd/boiler.hpp"

namespace boilerfdd {

// Ambient conditions assumed for manufacturer rating tests.
constexpr double kRatingAmbientTemp = 294.0;  // K
constexpr double kRatingAmbientRh = 0.65;

struct CalibrationReport {
    double h_outer_fitted = 0.0;  // W/m^2/K
    int iterations = 0;
    bool converged = false;
    // relative errors of the diagnostic outputs at the rated point
    std::map<std::string, double> residuals;
};

// Fits the gas-side film coefficient by bisection so the simulated heat
// output matches rated.q_out within tol (relative). q_out is strictly
// increasing in h_outer, which is asserted by sampling before bisection.
// On success writes h_outer_calibrated into spec and reports residuals on
// delta-T, exhaust temperature and efficiencies where the rated point
// provides them.
CalibrationReport calibrate_gas_htc(BoilerSpec& spec, const RatedPoint& rated,
                                    double tol = 1e-3, int max_iter = 200);

struct ValidationReport {
    std::vector<double> achieved_delta_t;  // K, one per point
    std::vector<double> errors;            // K, achieved - expected
    double mean_error = 0.0;               // K
};

// Simulates each flow at rated firing under Normal conditions and compares
// the supply/return delta-T against the manufacturer value.
ValidationReport validate_delta_t(const BoilerSpec& spec,
                                  const std::vector<ValidationPoint>& points);

}  // namespace boilerfdd
