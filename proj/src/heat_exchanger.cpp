#include "boilerfdd/heat_exchanger.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "boilerfdd/errors.hpp"

namespace boilerfdd {

void HxGeometry::validate() const {
    if (!(area_inner > 0.0) || !(area_outer > 0.0))
        throw SpecError("exchanger areas must be positive");
    if (!(h_inner > 0.0) || !(h_outer > 0.0))
        throw SpecError("film coefficients must be positive");
    if (wall_resistance < 0.0) throw SpecError("wall resistance must be non-negative");
    if (shell_passes < 1) throw SpecError("shell pass count must be at least 1");
}

double overall_ua(const HxGeometry& geom, const FoulingState& fouling) {
    geom.validate();
    if (fouling.r_inner < 0.0 || fouling.r_outer < 0.0)
        throw SpecError("fouling resistances must be non-negative");
    const double resistance = 1.0 / (geom.h_inner * geom.area_inner) +
                              fouling.r_inner / geom.area_inner + geom.wall_resistance +
                              fouling.r_outer / geom.area_outer +
                              1.0 / (geom.h_outer * geom.area_outer);
    return 1.0 / resistance;
}

namespace {

// Single-shell-pass TEMA-E effectiveness at per-pass NTU n.
double effectiveness_one_pass(double ntu, double c) {
    if (ntu <= 0.0) return 0.0;
    const double e = std::sqrt(1.0 + c * c);
    const double x = std::exp(-ntu * e);
    return 2.0 / ((1.0 + c) + e * (1.0 + x) / (1.0 - x));
}

}  // namespace

double effectiveness_shell_tube(double ntu, double c_ratio, int n_passes) {
    if (ntu < 0.0) throw std::domain_error("ntu must be non-negative");
    if (c_ratio < 0.0 || c_ratio > 1.0) throw std::domain_error("c_ratio must lie in [0, 1]");
    if (n_passes < 1) throw std::domain_error("pass count must be at least 1");
    if (ntu == 0.0) return 0.0;

    const double n = static_cast<double>(n_passes);
    const double e1 = effectiveness_one_pass(ntu / n, c_ratio);
    if (n_passes == 1) return e1;
    if (std::abs(1.0 - c_ratio) < 1e-9) {
        return n * e1 / (1.0 + (n - 1.0) * e1);
    }
    const double r = std::pow((1.0 - e1 * c_ratio) / (1.0 - e1), n);
    return (r - 1.0) / (r - c_ratio);
}

HxSolution solve_outlets(double t_hot_in, double c_hot, double t_cold_in, double c_cold,
                         double ua, int n_passes) {
    if (!(t_hot_in > t_cold_in))
        throw std::domain_error("hot inlet must be warmer than cold inlet");
    if (!(c_hot > 0.0) || !(c_cold > 0.0))
        throw std::domain_error("capacity rates must be positive");
    if (ua < 0.0) throw std::domain_error("ua must be non-negative");

    const double c_min = std::min(c_hot, c_cold);
    const double c_max = std::max(c_hot, c_cold);

    HxSolution s;
    s.ua = ua;
    s.ntu = ua / c_min;
    s.c_ratio = c_min / c_max;
    s.effectiveness = effectiveness_shell_tube(s.ntu, s.c_ratio, n_passes);
    s.q = s.effectiveness * c_min * (t_hot_in - t_cold_in);
    s.t_hot_out = t_hot_in - s.q / c_hot;
    s.t_cold_out = t_cold_in + s.q / c_cold;
    return s;
}

}  // namespace boilerfdd
