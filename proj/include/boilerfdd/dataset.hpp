#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "boilerfdd/boiler.hpp"

namespace boilerfdd {

enum class LabelScheme { Full31, MergedExcessAir22, Categorical4 };

LabelScheme label_scheme_from_string(const std::string& s);
std::string to_string(LabelScheme s);

// Canonical BAS feature order; every dataset and ingested row follows it.
inline const std::vector<std::string>& canonical_feature_names() {
    static const std::vector<std::string> names = {
        "t_return", "t_supply", "water_flow", "pump_speed", "t_outdoor", "t_fuel", "t_flue"};
    return names;
}

struct LabeledSample {
    std::string boiler_id;
    std::vector<double> features;
    std::string label;
};

struct Dataset {
    std::vector<std::string> feature_names = canonical_feature_names();
    std::vector<LabeledSample> rows;
    int excluded = 0;  // simulation failures dropped during generation
};

// Normal plus ten levels {0.01, 0.06, ..., 0.46} of each fault kind: 31 conditions.
std::vector<FaultCondition> fault_grid();
std::vector<double> fault_levels();

// Per-axis level lists for the operating sweep.
struct GridConfig {
    std::vector<double> firing_fractions = {0.5, 0.65, 0.8, 1.0};
    std::vector<double> water_flow_fractions = {0.6, 0.8, 1.0, 1.2, 1.4};  // of nominal
    std::vector<double> t_outdoor = {253.0, 263.0, 273.0, 283.0, 293.0};   // K
    std::vector<double> t_return = {313.0, 323.0, 333.0, 343.0};           // K
    double rh = 0.65;
};

// Cartesian product of the configured levels, in axis-major order
// (firing, flow, outdoor, return). Invalid levels raise ConfigError.
std::vector<OperatingPoint> operating_grid(const GridConfig& config, double nominal_water_flow);

// One labeled row per (operating point, fault); features from the steady
// state, pump speed as the flow fraction of nominal, t_flue = exhaust.
// include_fuel_flow appends the fuel mass flow as an extra feature column.
Dataset generate(const BoilerSpec& spec, const std::vector<OperatingPoint>& ops,
                 const std::vector<FaultCondition>& faults, bool include_fuel_flow = false);

// Maps Full31 labels into the requested scheme; row order, count and
// features are preserved.
Dataset relabel(const Dataset& ds, LabelScheme scheme);

void write_dataset_csv(const Dataset& ds, std::ostream& out);
void write_dataset_csv(const Dataset& ds, const std::filesystem::path& file);
std::string dataset_csv_string(const Dataset& ds);
Dataset read_dataset_csv(const std::filesystem::path& file);
Dataset read_dataset_csv(std::istream& in);

// Header check shared with the BAS ingestion path ("label" column optional).
void validate_feature_schema(const std::vector<std::string>& names);

}  // namespace boilerfdd
