#include "boilerfdd/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "boilerfdd/errors.hpp"

namespace boilerfdd {

LabelScheme label_scheme_from_string(const std::string& s) {
    if (s == "31" || s == "full31") return LabelScheme::Full31;
    if (s == "22" || s == "merged22") return LabelScheme::MergedExcessAir22;
    if (s == "4" || s == "categorical4") return LabelScheme::Categorical4;
    throw ConfigError("unknown label scheme '" + s + "' (expected 31, 22 or 4)");
}

std::string to_string(LabelScheme s) {
    switch (s) {
        case LabelScheme::Full31: return "full31";
        case LabelScheme::MergedExcessAir22: return "merged22";
        case LabelScheme::Categorical4: return "categorical4";
    }
    throw std::logic_error("unreachable");
}

std::vector<double> fault_levels() {
    std::vector<double> levels;
    for (int k = 0; k < 10; ++k) levels.push_back(0.01 + 0.05 * k);
    return levels;
}

std::vector<FaultCondition> fault_grid() {
    std::vector<FaultCondition> grid;
    grid.push_back(FaultCondition::normal());
    for (double level : fault_levels()) grid.push_back(FaultCondition::excess_air(level));
    for (double level : fault_levels()) grid.push_back(FaultCondition::fouling(level));
    for (double level : fault_levels()) grid.push_back(FaultCondition::scaling(level));
    return grid;
}

std::vector<OperatingPoint> operating_grid(const GridConfig& config,
                                           double nominal_water_flow) {
    if (config.firing_fractions.empty() || config.water_flow_fractions.empty() ||
        config.t_outdoor.empty() || config.t_return.empty())
        throw ConfigError("every operating-grid axis needs at least one level");
    if (!(nominal_water_flow > 0.0)) throw ConfigError("nominal water flow must be positive");

    std::vector<OperatingPoint> ops;
    ops.reserve(config.firing_fractions.size() * config.water_flow_fractions.size() *
                config.t_outdoor.size() * config.t_return.size());
    for (double firing : config.firing_fractions)
        for (double frac : config.water_flow_fractions)
            for (double oat : config.t_outdoor)
                for (double ret : config.t_return) {
                    OperatingPoint op;
                    op.firing_fraction = firing;
                    op.water_flow = frac * nominal_water_flow;
                    op.t_outdoor = oat;
                    op.t_return = ret;
                    op.rh = config.rh;
                    try {
                        op.validate();
                    } catch (const SpecError& e) {
                        throw ConfigError(std::string("invalid operating level: ") + e.what());
                    }
                    ops.push_back(op);
                }
    return ops;
}

Dataset generate(const BoilerSpec& spec, const std::vector<OperatingPoint>& ops,
                 const std::vector<FaultCondition>& faults, bool include_fuel_flow) {
    if (!spec.calibrated()) throw SpecError("dataset generation requires a calibrated spec");

    Dataset ds;
    if (include_fuel_flow) ds.feature_names.push_back("fuel_flow");
    ds.rows.reserve(ops.size() * faults.size());
    for (const OperatingPoint& op : ops) {
        for (const FaultCondition& fault : faults) {
            LabeledSample row;
            row.boiler_id = spec.id;
            row.label = fault.label();
            try {
                const SteadyStateResult r = simulate(spec, op, fault);
                row.features = {op.t_return,  r.t_supply,      op.water_flow,
                                op.water_flow / spec.nominal_water_flow,
                                op.t_outdoor, spec.fuel.t_fuel, r.t_exhaust};
                if (include_fuel_flow) row.features.push_back(r.combustion.m_fuel);
            } catch (const std::exception&) {
                ++ds.excluded;
                continue;
            }
            ds.rows.push_back(std::move(row));
        }
    }
    return ds;
}

namespace {

std::string categorical_label(const std::string& full) {
    const auto colon = full.find(':');
    return colon == std::string::npos ? full : full.substr(0, colon);
}

}  // namespace

Dataset relabel(const Dataset& ds, LabelScheme scheme) {
    Dataset out;
    out.feature_names = ds.feature_names;
    out.excluded = ds.excluded;
    out.rows = ds.rows;
    for (LabeledSample& row : out.rows) {
        // validates the source label regardless of scheme
        const FaultCondition fault = FaultCondition::from_label(row.label);
        switch (scheme) {
            case LabelScheme::Full31:
                break;
            case LabelScheme::MergedExcessAir22:
                if (fault.kind == FaultCondition::Kind::ExcessAir) row.label = "excess_air";
                break;
            case LabelScheme::Categorical4:
                row.label = categorical_label(row.label);
                break;
        }
    }
    return out;
}

namespace {

std::string format_double(double v) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
        throw DataError("bad numeric field '" + s + "'");
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

void write_dataset_csv(const Dataset& ds, std::ostream& out) {
    out << "boiler_id";
    for (const auto& name : ds.feature_names) out << ',' << name;
    out << ",label\n";
    for (const LabeledSample& row : ds.rows) {
        out << row.boiler_id;
        for (double v : row.features) out << ',' << format_double(v);
        out << ',' << row.label << '\n';
    }
}

void write_dataset_csv(const Dataset& ds, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw DataError("cannot write dataset file " + file.string());
    write_dataset_csv(ds, out);
}

std::string dataset_csv_string(const Dataset& ds) {
    std::ostringstream out;
    write_dataset_csv(ds, out);
    return out.str();
}

Dataset read_dataset_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw DataError("empty dataset file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto header = split_csv_line(line);
    if (header.size() < 3 || header.front() != "boiler_id" || header.back() != "label")
        throw DataError("dataset header must be boiler_id,<features...>,label");

    Dataset ds;
    ds.feature_names.assign(header.begin() + 1, header.end() - 1);
    validate_feature_schema(ds.feature_names);

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw DataError("dataset line " + std::to_string(line_no) + " has " +
                            std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(header.size()));
        LabeledSample row;
        row.boiler_id = fields.front();
        row.label = fields.back();
        for (std::size_t i = 1; i + 1 < fields.size(); ++i)
            row.features.push_back(parse_double(fields[i]));
        ds.rows.push_back(std::move(row));
    }
    return ds;
}

Dataset read_dataset_csv(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw DataError("cannot open dataset file " + file.string());
    return read_dataset_csv(in);
}

void validate_feature_schema(const std::vector<std::string>& names) {
    const auto& canonical = canonical_feature_names();
    if (names.size() < canonical.size())
        throw DataError("feature schema is missing columns");
    for (std::size_t i = 0; i < canonical.size(); ++i)
        if (names[i] != canonical[i])
            throw DataError("feature column " + std::to_string(i) + " is '" + names[i] +
                            "', expected '" + canonical[i] + "'");
    for (std::size_t i = canonical.size(); i < names.size(); ++i)
        if (names[i] != "fuel_flow")
            throw DataError("unexpected extra feature column '" + names[i] + "'");
}

}  // namespace boilerfdd
