#include "boilerfdd/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "boilerfdd/calibration.hpp"
#include "boilerfdd/errors.hpp"
#include "boilerfdd/ml/split.hpp"
#include "boilerfdd/rng.hpp"
#include "boilerfdd/spec_io.hpp"

namespace boilerfdd {

using ml::Algorithm;

BoilerSpec load_calibrated_spec(const std::filesystem::path& file) {
    BoilerSpec spec = load_boiler_spec(file);
    if (!spec.calibrated()) calibrate_gas_htc(spec, spec.rated_point);
    return spec;
}

Dataset boiler_dataset(const BoilerSpec& spec, const GridConfig& grid) {
    return generate(spec, operating_grid(grid, spec.nominal_water_flow), fault_grid());
}

namespace {

Dataset dataset_in_scheme(const BoilerSpec& spec, const GridConfig& grid, LabelScheme scheme) {
    Dataset ds = boiler_dataset(spec, grid);
    return scheme == LabelScheme::Full31 ? ds : relabel(ds, scheme);
}

StudyCell run_cell(const std::string& boiler_id, Algorithm alg, const ml::Table& train,
                   const ml::Table& test, const StudyConfig& cfg) {
    const auto grid = ml::HyperGrid::defaults(alg);
    ml::TunedModel tuned = ml::tune_and_fit(grid, train, cfg.cv_folds,
                                            derive_seed(cfg.seed, static_cast<int>(alg)),
                                            cfg.jobs);
    StudyCell cell;
    cell.boiler_id = boiler_id;
    cell.alg = alg;
    cell.cv_score = tuned.search.cv_scores[static_cast<std::size_t>(tuned.search.best_index)];
    cell.report = ml::evaluate(tuned.model, test);
    cell.report.best_params = tuned.search.best;
    return cell;
}

}  // namespace

SingleBoilerStudyResult run_single_boiler_study(
    const std::vector<std::pair<std::string, Dataset>>& datasets, const StudyConfig& cfg) {
    SingleBoilerStudyResult result;
    result.scheme = cfg.scheme;
    for (const auto& [boiler_id, ds] : datasets) {
        const ml::Table table = ml::table_from_dataset(ds);
        const auto [train_idx, test_idx] =
            ml::stratified_split(table, cfg.test_fraction, derive_seed(cfg.seed, 0x5711));
        const ml::Table train = table.subset(train_idx);
        const ml::Table test = table.subset(test_idx);
        for (Algorithm alg : cfg.algorithms)
            result.cells.push_back(run_cell(boiler_id, alg, train, test, cfg));
    }
    return result;
}

SingleBoilerStudyResult run_single_boiler_study(const StudyConfig& cfg) {
    std::vector<std::pair<std::string, Dataset>> datasets;
    for (const auto& file : cfg.spec_files) {
        const BoilerSpec spec = load_calibrated_spec(file);
        datasets.emplace_back(spec.id, dataset_in_scheme(spec, cfg.grid, cfg.scheme));
    }
    return run_single_boiler_study(datasets, cfg);
}

void write_study_outputs(const SingleBoilerStudyResult& result,
                         const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);

    std::ofstream table(out_dir / "accuracy_table.csv");
    table << "boiler_id,algorithm,scheme,cv_accuracy,test_accuracy,macro_precision,macro_recall\n";
    nlohmann::json best_params(nlohmann::json::value_t::object);
    for (const StudyCell& cell : result.cells) {
        table << cell.boiler_id << ',' << ml::to_string(cell.alg) << ','
              << to_string(result.scheme) << ',' << cell.cv_score << ',' << cell.report.accuracy
              << ',' << cell.report.macro_precision << ',' << cell.report.macro_recall << '\n';
        std::ofstream confusion(out_dir /
                                ("confusion_" + cell.boiler_id + "_" + ml::to_string(cell.alg) +
                                 ".csv"));
        confusion << cell.report.confusion_csv();
        nlohmann::json p(nlohmann::json::value_t::object);
        for (const auto& [k, v] : cell.report.best_params.values) p[k] = v;
        for (const auto& [k, v] : cell.report.best_params.tags) p[k] = v;
        best_params[cell.boiler_id + "/" + ml::to_string(cell.alg)] = p;
    }
    std::ofstream params(out_dir / "best_params.json");
    params << best_params.dump(2) << '\n';

    std::ofstream summary(out_dir / "summary.md");
    summary << "# FDD accuracy (" << to_string(result.scheme) << ")\n\n";
    std::set<std::string> boilers;
    for (const auto& cell : result.cells) boilers.insert(cell.boiler_id);
    summary << "| classifier |";
    for (const auto& b : boilers) summary << ' ' << b << " |";
    summary << "\n|---|";
    for (std::size_t i = 0; i < boilers.size(); ++i) summary << "---|";
    summary << '\n';
    std::set<Algorithm> algs;
    for (const auto& cell : result.cells) algs.insert(cell.alg);
    for (Algorithm alg : algs) {
        summary << "| " << ml::to_string(alg) << " |";
        for (const auto& b : boilers) {
            double acc = 0.0;
            for (const auto& cell : result.cells)
                if (cell.boiler_id == b && cell.alg == alg) acc = cell.report.accuracy;
            summary << ' ' << std::round(acc * 1000.0) / 10.0 << "% |";
        }
        summary << '\n';
    }
}

// ---------------------------------------------------------------------------

void GeneralizationPlan::validate() const {
    if (iteration < 1 || iteration > 4) throw ConfigError("iteration must be 1..4");
    if (train_ids.empty()) throw ConfigError("generalization plan needs training boilers");
    if (iteration == 1 || iteration == 4) {
        if (test_ids.empty()) throw ConfigError("iterations 1 and 4 need test boilers");
        for (const auto& t : test_ids)
            if (std::find(train_ids.begin(), train_ids.end(), t) != train_ids.end())
                throw ConfigError("boiler '" + t + "' appears in both training and test sets");
    }
}

GeneralizationResult run_generalization(
    const std::vector<std::pair<std::string, Dataset>>& datasets22,
    const GeneralizationPlan& plan, Algorithm alg, std::uint64_t seed, int cv_folds, int jobs) {
    plan.validate();

    auto dataset_of = [&](const std::string& id) -> const Dataset& {
        for (const auto& [name, ds] : datasets22)
            if (name == id) return ds;
        throw ConfigError("no dataset for boiler '" + id + "'");
    };

    // pooled training data
    Dataset pool;
    for (const auto& id : plan.train_ids) {
        const Dataset& ds = dataset_of(id);
        pool.feature_names = ds.feature_names;
        pool.rows.insert(pool.rows.end(), ds.rows.begin(), ds.rows.end());
    }
    const ml::Table pool_table = ml::table_from_dataset(pool);
    const auto [train_idx, holdout_idx] =
        ml::stratified_split(pool_table, 0.20, derive_seed(seed, 0x6e41));
    const ml::Table train = pool_table.subset(train_idx);
    const ml::Table holdout = pool_table.subset(holdout_idx);

    const auto grid = ml::HyperGrid::defaults(alg);
    ml::TunedModel tuned =
        ml::tune_and_fit(grid, train, cv_folds, derive_seed(seed, static_cast<int>(alg)), jobs);

    GeneralizationResult result;
    result.iteration = plan.iteration;
    result.alg = alg;
    result.best_params = tuned.search.best;
    result.pooled_holdout_accuracy = ml::evaluate(tuned.model, holdout).accuracy;

    if (plan.iteration == 1 || plan.iteration == 4) {
        for (const auto& id : plan.test_ids) {
            const ml::Table target = ml::table_from_dataset(dataset_of(id));
            result.accuracy[id] = ml::evaluate(tuned.model, target).accuracy;
        }
    } else if (plan.iteration == 2) {
        // per-boiler share of the pooled hold-out
        for (const auto& id : plan.train_ids) {
            std::vector<int> rows;
            for (std::size_t i = 0; i < holdout_idx.size(); ++i)
                if (pool.rows[static_cast<std::size_t>(holdout_idx[i])].boiler_id == id)
                    rows.push_back(static_cast<int>(i));
            if (rows.empty()) continue;
            result.accuracy[id] = ml::evaluate(tuned.model, holdout.subset(rows)).accuracy;
        }
    } else {
        result.accuracy["pooled"] = result.pooled_holdout_accuracy;
    }
    return result;
}

void write_generalization_outputs(const std::vector<GeneralizationResult>& results,
                                  const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::ofstream table(out_dir / "generalization_table.csv");
    table << "iteration,algorithm,test_target,accuracy\n";
    for (const auto& r : results)
        for (const auto& [target, acc] : r.accuracy)
            table << r.iteration << ',' << ml::to_string(r.alg) << ',' << target << ',' << acc
                  << '\n';

    std::ofstream summary(out_dir / "generalization_summary.md");
    summary << "# Cross-boiler generalization\n\n"
            << "| iteration | classifier | test target | accuracy |\n|---|---|---|---|\n";
    for (const auto& r : results)
        for (const auto& [target, acc] : r.accuracy)
            summary << "| " << r.iteration << " | " << ml::to_string(r.alg) << " | " << target
                    << " | " << std::round(acc * 1000.0) / 10.0 << "% |\n";
}

// ---------------------------------------------------------------------------

ImpactReport fault_impact_report(const BoilerSpec& spec, const std::vector<double>& levels) {
    if (!spec.calibrated()) throw SpecError("impact report requires a calibrated spec");

    OperatingPoint op;
    op.firing_fraction = 1.0;
    op.water_flow = spec.nominal_water_flow;
    op.t_return = spec.nominal_return_temp;
    op.t_outdoor = kRatingAmbientTemp;
    op.rh = kRatingAmbientRh;

    const SteadyStateResult clean = simulate(spec, op, FaultCondition::normal());

    ImpactReport report;
    report.boiler_id = spec.id;
    report.baseline_q_out = clean.q_out;
    report.baseline_eta = clean.eta_thermal;
    report.baseline_eff_combustion = clean.eff_combustion;

    auto add = [&](const FaultCondition& fault) {
        const SteadyStateResult r = simulate(spec, op, fault);
        ImpactRow row;
        row.fault = fault;
        row.q_out = r.q_out;
        row.output_reduction = 1.0 - r.q_out / clean.q_out;
        row.eta_thermal = r.eta_thermal;
        row.eff_combustion = r.eff_combustion;
        row.efficiency_drop_points = 100.0 * (clean.eta_thermal - r.eta_thermal);
        row.consumption_increase = row.output_reduction / (1.0 - row.output_reduction);
        report.rows.push_back(row);
    };

    for (double level : levels) add(FaultCondition::excess_air(level));
    for (double level : levels) add(FaultCondition::fouling(level));
    for (double level : levels) add(FaultCondition::scaling(level));
    return report;
}

void write_impact_report_csv(const ImpactReport& report, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw DataError("cannot write impact report " + file.string());
    out << "boiler_id,fault,q_out_w,output_reduction,eta_thermal,eff_combustion_pct,"
           "efficiency_drop_points,gas_consumption_increase\n";
    for (const ImpactRow& row : report.rows) {
        out << report.boiler_id << ',' << row.fault.label() << ',' << row.q_out << ','
            << row.output_reduction << ',' << row.eta_thermal << ',' << row.eff_combustion << ','
            << row.efficiency_drop_points << ',' << row.consumption_increase << '\n';
    }
}

}  // namespace boilerfdd
