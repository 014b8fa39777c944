#include "boilerfdd/spec_io.hpp"

#include <fstream>

#include <json.hpp>

#include "boilerfdd/errors.hpp"

namespace boilerfdd {

using nlohmann::json;

namespace {

json fuel_to_json(const FuelSpec& f) {
    return json{{"carbon_atoms", f.carbon_atoms}, {"hydrogen_atoms", f.hydrogen_atoms},
                {"lhv_j_per_kg", f.lhv},          {"hhv_j_per_kg", f.hhv},
                {"cp_j_per_kg_k", f.cp_fuel},     {"temperature_k", f.t_fuel}};
}

FuelSpec fuel_from_json(const json& j) {
    FuelSpec f;
    f.carbon_atoms = j.at("carbon_atoms").get<int>();
    f.hydrogen_atoms = j.at("hydrogen_atoms").get<int>();
    f.lhv = j.at("lhv_j_per_kg").get<double>();
    f.hhv = j.at("hhv_j_per_kg").get<double>();
    f.cp_fuel = j.value("cp_j_per_kg_k", 2191.0);
    f.t_fuel = j.value("temperature_k", 303.0);
    return f;
}

json rated_to_json(const RatedPoint& r) {
    json j{{"q_in_w", r.q_in},
           {"q_out_w", r.q_out},
           {"water_flow_kg_s", r.water_flow},
           {"t_return_k", r.t_return},
           {"delta_t_k", r.delta_t}};
    if (r.t_exhaust) j["t_exhaust_k"] = *r.t_exhaust;
    if (r.eff_combustion) j["eff_combustion_pct"] = *r.eff_combustion;
    if (r.eta_thermal) j["eta_thermal"] = *r.eta_thermal;
    return j;
}

RatedPoint rated_from_json(const json& j) {
    RatedPoint r;
    r.q_in = j.at("q_in_w").get<double>();
    r.q_out = j.at("q_out_w").get<double>();
    r.water_flow = j.at("water_flow_kg_s").get<double>();
    r.t_return = j.at("t_return_k").get<double>();
    r.delta_t = j.at("delta_t_k").get<double>();
    if (j.contains("t_exhaust_k")) r.t_exhaust = j.at("t_exhaust_k").get<double>();
    if (j.contains("eff_combustion_pct")) r.eff_combustion = j.at("eff_combustion_pct").get<double>();
    if (j.contains("eta_thermal")) r.eta_thermal = j.at("eta_thermal").get<double>();
    return r;
}

}  // namespace

BoilerSpec boiler_spec_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DataError(std::string("boiler spec JSON parse error: ") + e.what());
    }
    try {
        BoilerSpec s;
        s.id = j.at("id").get<std::string>();
        s.manufacturer = j.value("manufacturer", "");
        s.model = j.value("model", "");
        s.rated_input = j.at("rated_input_w").get<double>();
        s.rated_output = j.at("rated_output_w").get<double>();
        s.area_inner = j.at("area_inner_m2").get<double>();
        s.area_outer = j.at("area_outer_m2").get<double>();
        s.h_inner = j.value("h_inner_w_m2_k", 1000.0);
        s.h_outer_calibrated = j.value("h_outer_calibrated_w_m2_k", 0.0);
        s.nominal_water_flow = j.at("nominal_water_flow_kg_s").get<double>();
        s.nominal_return_temp = j.value("nominal_return_temp_k", 333.0);
        s.rated_co2_dry = j.value("rated_co2_dry", 0.10);
        s.water_volume = j.value("water_volume_m3", 0.0);
        s.hydraulic_diameter = j.value("hydraulic_diameter_m", 0.1016);
        s.shell_passes = j.value("shell_passes", 2);
        s.fuel = j.contains("fuel") ? fuel_from_json(j.at("fuel")) : FuelSpec::methane();
        if (j.contains("rated_point")) s.rated_point = rated_from_json(j.at("rated_point"));
        if (j.contains("validation_points")) {
            for (const auto& p : j.at("validation_points")) {
                s.validation_points.push_back(
                    {p.at("water_flow_kg_s").get<double>(),
                     p.at("expected_delta_t_K").get<double>()});
            }
        }
        s.finalize();
        return s;
    } catch (const json::exception& e) {
        throw DataError(std::string("boiler spec JSON field error: ") + e.what());
    }
}

BoilerSpec load_boiler_spec(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open boiler spec file " + file.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return boiler_spec_from_json_text(text);
}

std::string boiler_spec_to_json_text(const BoilerSpec& spec, const CalibrationReport* report) {
    json j;
    j["id"] = spec.id;
    j["manufacturer"] = spec.manufacturer;
    j["model"] = spec.model;
    j["rated_input_w"] = spec.rated_input;
    j["rated_output_w"] = spec.rated_output;
    j["area_inner_m2"] = spec.area_inner;
    j["area_outer_m2"] = spec.area_outer;
    j["h_inner_w_m2_k"] = spec.h_inner;
    if (spec.calibrated()) j["h_outer_calibrated_w_m2_k"] = spec.h_outer_calibrated;
    j["nominal_water_flow_kg_s"] = spec.nominal_water_flow;
    j["nominal_return_temp_k"] = spec.nominal_return_temp;
    j["rated_co2_dry"] = spec.rated_co2_dry;
    j["water_volume_m3"] = spec.water_volume;
    j["hydraulic_diameter_m"] = spec.hydraulic_diameter;
    j["shell_passes"] = spec.shell_passes;
    j["fuel"] = fuel_to_json(spec.fuel);
    j["baseline_z"] = spec.baseline_z;
    j["rated_point"] = rated_to_json(spec.rated_point);
    json points = json::array();
    for (const auto& p : spec.validation_points)
        points.push_back(
            {{"water_flow_kg_s", p.water_flow}, {"expected_delta_t_K", p.expected_delta_t}});
    j["validation_points"] = points;
    if (report) {
        json residuals;
        for (const auto& [name, value] : report->residuals) residuals[name] = value;
        j["calibration"] = json{{"h_outer_fitted_w_m2_k", report->h_outer_fitted},
                                {"iterations", report->iterations},
                                {"converged", report->converged},
                                {"residuals", residuals}};
    }
    return j.dump(2) + "\n";
}

void save_boiler_spec(const BoilerSpec& spec, const std::filesystem::path& file,
                      const CalibrationReport* report) {
    std::ofstream out(file);
    if (!out) throw DataError("cannot write boiler spec file " + file.string());
    out << boiler_spec_to_json_text(spec, report);
}

}  // namespace boilerfdd
