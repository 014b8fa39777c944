#pragma once

namespace boilerfdd {

// Shell-and-tube exchanger surfaces and film coefficients. Water runs in the
// tubes (inner), combustion gas in the shell (outer).
struct HxGeometry {
    double area_inner = 0.0;      // m^2
    double area_outer = 0.0;      // m^2
    double h_inner = 0.0;         // W/m^2/K
    double h_outer = 0.0;         // W/m^2/K
    double wall_resistance = 0.0; // K/W, conduction term; 0 for these boilers
    int shell_passes = 2;

    void validate() const;
};

// Deposit resistances [m^2 K / W]; clean exchanger is (0, 0).
struct FoulingState {
    double r_inner = 0.0;  // water-side scaling
    double r_outer = 0.0;  // gas-side fouling
};

struct HxSolution {
    double ua = 0.0;             // W/K
    double ntu = 0.0;
    double c_ratio = 0.0;        // c_min / c_max
    double effectiveness = 0.0;
    double q = 0.0;              // W
    double t_hot_out = 0.0;      // K
    double t_cold_out = 0.0;     // K
};

// UA = [ 1/(h_i A_i) + R_f,i/A_i + R_wall + R_f,o/A_o + 1/(h_o A_o) ]^-1
double overall_ua(const HxGeometry& geom, const FoulingState& fouling);

// Effectiveness of a shell-and-tube exchanger with n shell passes.
// Per-pass NTU is ntu / n_passes; single-pass effectiveness follows the
// standard TEMA-E relation, passes combine through the counterflow rule
// with the algebraic c_ratio = 1 limit below |1 - c| < 1e-9.
double effectiveness_shell_tube(double ntu, double c_ratio, int n_passes);

// q = eps * c_min * (t_hot_in - t_cold_in) and the two outlet temperatures.
HxSolution solve_outlets(double t_hot_in, double c_hot, double t_cold_in, double c_cold,
                         double ua, int n_passes);

}  // namespace boilerfdd
