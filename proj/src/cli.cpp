#include "boilerfdd/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "boilerfdd/bas_io.hpp"
#include "boilerfdd/calibration.hpp"
#include "boilerfdd/dataset.hpp"
#include "boilerfdd/errors.hpp"
#include "boilerfdd/experiments.hpp"
#include "boilerfdd/manifest.hpp"
#include "boilerfdd/ml/model_io.hpp"
#include "boilerfdd/ml/split.hpp"
#include "boilerfdd/rng.hpp"
#include "boilerfdd/spec_io.hpp"

namespace boilerfdd {

using nlohmann::json;

namespace {

std::int64_t now_epoch() {
    return std::chrono::duration_cast<std::chrono::seconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

struct ManifestClock {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

json result_to_json(const SteadyStateResult& r) {
    return json{{"t_supply_k", r.t_supply},
                {"t_exhaust_k", r.t_exhaust},
                {"q_out_w", r.q_out},
                {"q_in_w", r.q_in},
                {"eta_thermal", r.eta_thermal},
                {"eff_combustion_pct", r.eff_combustion},
                {"flue_loss_pct", r.flue_loss},
                {"ua_w_k", r.ua},
                {"t_flame_k", r.combustion.t_flame},
                {"c_gas_w_k", r.combustion.c_gas},
                {"m_fuel_kg_s", r.combustion.m_fuel},
                {"m_dry_products_kg_s", r.combustion.m_dry_products},
                {"m_vapor_kg_s", r.combustion.m_vapor},
                {"excess_air", r.combustion.excess_air}};
}

GridConfig grid_from_json(const json& j) {
    GridConfig grid;
    if (j.contains("firing")) grid.firing_fractions = j.at("firing").get<std::vector<double>>();
    if (j.contains("flow_fractions"))
        grid.water_flow_fractions = j.at("flow_fractions").get<std::vector<double>>();
    if (j.contains("t_outdoor")) grid.t_outdoor = j.at("t_outdoor").get<std::vector<double>>();
    if (j.contains("t_return")) grid.t_return = j.at("t_return").get<std::vector<double>>();
    if (j.contains("rh")) grid.rh = j.at("rh").get<double>();
    return grid;
}

json load_config_file(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        if (args[i] == "--config") {
            std::ifstream in(args[i + 1]);
            if (!in) throw ConfigError("cannot open config file " + args[i + 1]);
            json j = json::parse(in, nullptr, false);
            if (j.is_discarded()) throw ConfigError("config file is not valid JSON");
            return j;
        }
    }
    return json::object();
}

LabelScheme infer_scheme(const std::vector<std::string>& model_classes) {
    bool has_level = false, has_merged_excess = false;
    for (const auto& c : model_classes) {
        if (c.find(':') != std::string::npos) has_level = true;
        if (c == "excess_air") has_merged_excess = true;
    }
    if (!has_level) return LabelScheme::Categorical4;
    return has_merged_excess ? LabelScheme::MergedExcessAir22 : LabelScheme::Full31;
}

}  // namespace

int dispatch(const std::vector<std::string>& args) {
    CLI::App app{"physics-based boiler emulator, fault-dataset generator and FDD toolkit"};
    app.require_subcommand(1);

    json config = json::object();
    std::string config_path;
    app.add_option("--config", config_path, "JSON configuration file (flags take precedence)");

    std::uint64_t seed = 7;
    int jobs = 0;
    app.add_option("--seed", seed, "master random seed");
    app.add_option("--jobs", jobs, "worker threads (0 = hardware)");

    // --- calibrate ---------------------------------------------------------
    auto* cal = app.add_subcommand("calibrate", "fit the gas-side coefficient to the rated point");
    std::string cal_spec, cal_out;
    double cal_tol = 1e-3;
    int cal_max_iter = 200;
    cal->add_option("--spec", cal_spec, "boiler spec JSON")->required();
    cal->add_option("--out", cal_out, "output spec JSON")->required();
    cal->add_option("--tol", cal_tol, "relative q_out tolerance");
    cal->add_option("--max-iter", cal_max_iter, "bisection iteration cap");

    // --- simulate ----------------------------------------------------------
    auto* sim = app.add_subcommand("simulate", "one steady-state point, result as JSON");
    std::string sim_spec, sim_fault = "normal", sim_out;
    double sim_firing = 1.0, sim_flow = 0.0, sim_return = 333.0, sim_oat = 294.0, sim_rh = 0.65;
    sim->add_option("--spec", sim_spec, "boiler spec JSON")->required();
    sim->add_option("--firing", sim_firing, "firing fraction (0,1]");
    sim->add_option("--flow", sim_flow, "water flow kg/s (default: nominal)");
    sim->add_option("--return", sim_return, "return water temperature K");
    sim->add_option("--oat", sim_oat, "outdoor air temperature K");
    sim->add_option("--rh", sim_rh, "relative humidity fraction");
    sim->add_option("--fault", sim_fault, "normal | excess_air:Z | fouling:F | scaling:S");
    sim->add_option("--out", sim_out, "also write the JSON here");

    // --- sweep -------------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "labeled dataset over the operating/fault grids");
    std::string sweep_spec, sweep_out, sweep_scheme = "31";
    bool sweep_fuel_flow = false;
    sweep->add_option("--spec", sweep_spec, "boiler spec JSON")->required();
    sweep->add_option("--out", sweep_out, "dataset CSV path")->required();
    sweep->add_option("--scheme", sweep_scheme, "label scheme: 31, 22 or 4");
    sweep->add_flag("--fuel-flow", sweep_fuel_flow, "append the fuel mass-flow column");

    // --- relabel -----------------------------------------------------------
    auto* rel = app.add_subcommand("relabel", "map a detailed dataset into another scheme");
    std::string rel_data, rel_out, rel_scheme = "22";
    rel->add_option("--data", rel_data, "dataset CSV (detailed labels)")->required();
    rel->add_option("--out", rel_out, "output CSV")->required();
    rel->add_option("--scheme", rel_scheme, "target scheme: 31, 22 or 4");

    // --- train -------------------------------------------------------------
    auto* train = app.add_subcommand("train", "grid search + refit + held-out evaluation");
    std::string train_data, train_alg = "dt", train_scheme = "31", train_out;
    double train_test_fraction = 0.33;
    int train_folds = 5;
    train->add_option("--data", train_data, "dataset CSV with detailed labels")->required();
    train->add_option("--alg", train_alg, "knn | dt | rf | svm");
    train->add_option("--scheme", train_scheme, "label scheme for training");
    train->add_option("--test-fraction", train_test_fraction, "held-out share");
    train->add_option("--folds", train_folds, "cross-validation folds");
    train->add_option("--out", train_out, "output directory")->required();

    // --- evaluate ----------------------------------------------------------
    auto* eval = app.add_subcommand("evaluate", "apply a model artifact to a labeled dataset");
    std::string eval_model, eval_data, eval_out;
    eval->add_option("--model", eval_model, "model JSON artifact")->required();
    eval->add_option("--data", eval_data, "dataset CSV with detailed labels")->required();
    eval->add_option("--out", eval_out, "output directory")->required();

    // --- study -------------------------------------------------------------
    auto* study = app.add_subcommand("study", "paper-style experiment suites");
    study->require_subcommand(1);

    auto* single = study->add_subcommand("single", "per-boiler accuracy tables");
    std::vector<std::string> single_specs;
    std::string single_scheme = "22", single_out;
    std::vector<std::string> single_algs = {"knn", "dt", "rf", "svm"};
    single->add_option("--specs", single_specs, "boiler spec files")
        ->required()
        ->delimiter(',');
    single->add_option("--scheme", single_scheme, "label scheme");
    single->add_option("--algs", single_algs, "algorithms")->delimiter(',');
    single->add_option("--out", single_out, "output directory")->required();

    auto* gen = study->add_subcommand("generalize", "cross-boiler iterations 1-4");
    std::vector<std::string> gen_specs, gen_train, gen_test;
    std::string gen_alg = "dt", gen_out;
    int gen_iteration = 1;
    gen->add_option("--specs", gen_specs, "boiler spec files")->required()->delimiter(',');
    gen->add_option("--iteration", gen_iteration, "1..4")->required();
    gen->add_option("--train", gen_train, "training boiler ids")->delimiter(',');
    gen->add_option("--test", gen_test, "test boiler ids")->delimiter(',');
    gen->add_option("--alg", gen_alg, "classifier");
    gen->add_option("--out", gen_out, "output directory")->required();

    auto* impact = study->add_subcommand("impact", "fault energy-impact report");
    std::string impact_spec, impact_out;
    std::vector<double> impact_levels;
    impact->add_option("--spec", impact_spec, "boiler spec JSON")->required();
    impact->add_option("--levels", impact_levels, "fault levels")->delimiter(',');
    impact->add_option("--out", impact_out, "output directory")->required();

    // --- ingest ------------------------------------------------------------
    auto* ingest = app.add_subcommand("ingest", "BAS exports -> classifier feature rows");
    std::string ingest_map, ingest_out;
    std::vector<std::string> ingest_data;
    std::int64_t ingest_interval = 300;
    ingest->add_option("--map", ingest_map, "point-map JSON")->required();
    ingest->add_option("--data", ingest_data, "wide CSV or per-point CSV files")
        ->required()
        ->delimiter(',');
    ingest->add_option("--interval", ingest_interval, "resampling interval, seconds");
    ingest->add_option("--out", ingest_out, "feature rows CSV")->required();

    // --- filter ------------------------------------------------------------
    auto* filt = app.add_subcommand("filter", "median-filter one point series");
    std::string filt_data, filt_out;
    int filt_window = 5;
    filt->add_option("--data", filt_data, "series CSV (timestamp,value)")->required();
    filt->add_option("--window", filt_window, "odd window length");
    filt->add_option("--out", filt_out, "filtered series CSV")->required();

    try {
        config = load_config_file(args);
        if (config.contains("seed")) seed = config.at("seed").get<std::uint64_t>();
        if (config.contains("jobs")) jobs = config.at("jobs").get<int>();
        GridConfig grid_config =
            config.contains("grid") ? grid_from_json(config.at("grid")) : GridConfig{};

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        ManifestClock clock;
        RunManifest manifest;
        manifest.argv = args;
        manifest.seed = seed;
        manifest.config_json = config.dump();
        manifest.started_utc = format_iso8601(now_epoch());

        if (*cal) {
            BoilerSpec spec = load_boiler_spec(cal_spec);
            const CalibrationReport report = calibrate_gas_htc(spec, spec.rated_point, cal_tol,
                                                               cal_max_iter);
            save_boiler_spec(spec, cal_out, &report);
            std::cout << "calibrated " << spec.id << ": h_outer = " << report.h_outer_fitted
                      << " W/m^2/K in " << report.iterations << " iterations\n";
            manifest.command = "calibrate";
            manifest.inputs = {cal_spec};
            manifest.outputs = {cal_out};
            manifest.elapsed_seconds = clock.seconds();
            write_manifest(manifest, std::filesystem::path(cal_out).parent_path());
        } else if (*sim) {
            const BoilerSpec spec = load_calibrated_spec(sim_spec);
            OperatingPoint op;
            op.firing_fraction = sim_firing;
            op.water_flow = sim_flow > 0.0 ? sim_flow : spec.nominal_water_flow;
            op.t_return = sim_return;
            op.t_outdoor = sim_oat;
            op.rh = sim_rh;
            const SteadyStateResult r =
                simulate(spec, op, FaultCondition::from_label(sim_fault));
            const std::string text = result_to_json(r).dump(2) + "\n";
            std::cout << text;
            if (!sim_out.empty()) {
                std::ofstream out(sim_out);
                out << text;
            }
        } else if (*sweep) {
            const BoilerSpec spec = load_calibrated_spec(sweep_spec);
            Dataset ds = generate(spec, operating_grid(grid_config, spec.nominal_water_flow),
                                  fault_grid(), sweep_fuel_flow);
            const LabelScheme scheme = label_scheme_from_string(sweep_scheme);
            if (scheme != LabelScheme::Full31) ds = relabel(ds, scheme);
            write_dataset_csv(ds, sweep_out);
            std::cout << "wrote " << ds.rows.size() << " rows (" << ds.excluded
                      << " excluded) to " << sweep_out << "\n";
            manifest.command = "sweep";
            manifest.inputs = {sweep_spec};
            manifest.outputs = {sweep_out};
            manifest.elapsed_seconds = clock.seconds();
            write_manifest(manifest, std::filesystem::path(sweep_out).parent_path());
        } else if (*rel) {
            const Dataset ds = read_dataset_csv(rel_data);
            write_dataset_csv(relabel(ds, label_scheme_from_string(rel_scheme)), rel_out);
        } else if (*train) {
            Dataset ds = read_dataset_csv(train_data);
            const LabelScheme scheme = label_scheme_from_string(train_scheme);
            if (scheme != LabelScheme::Full31) ds = relabel(ds, scheme);
            const ml::Table table = ml::table_from_dataset(ds);
            const auto [train_idx, test_idx] =
                ml::stratified_split(table, train_test_fraction, derive_seed(seed, 0x5711));
            const ml::Algorithm alg = ml::algorithm_from_string(train_alg);
            const auto grid = ml::HyperGrid::defaults(alg);
            ml::TunedModel tuned = ml::tune_and_fit(grid, table.subset(train_idx), train_folds,
                                                    derive_seed(seed, static_cast<int>(alg)),
                                                    jobs);
            ml::EvalReport report = ml::evaluate(tuned.model, table.subset(test_idx));
            report.best_params = tuned.search.best;

            std::filesystem::create_directories(train_out);
            const auto dir = std::filesystem::path(train_out);
            ml::save_model(tuned.model, dir / "model.json");
            std::ofstream(dir / "eval_report.json") << ml::eval_report_to_json_text(report);
            std::ofstream(dir / "eval_report.txt") << report.text_table();
            std::ofstream(dir / "confusion.csv") << report.confusion_csv();
            std::cout << "test accuracy " << report.accuracy << " with "
                      << tuned.search.best.describe() << "\n";
            manifest.command = "train";
            manifest.inputs = {train_data};
            manifest.outputs = {(dir / "model.json").string(),
                                (dir / "eval_report.json").string()};
            manifest.elapsed_seconds = clock.seconds();
            write_manifest(manifest, dir);
        } else if (*eval) {
            const ml::TrainedModel model = ml::load_model(eval_model);
            Dataset ds = read_dataset_csv(eval_data);
            const LabelScheme scheme = infer_scheme(model.classes);
            if (scheme != LabelScheme::Full31) ds = relabel(ds, scheme);
            ml::EvalReport report = ml::evaluate(model, ml::table_from_dataset(ds));
            report.best_params = model.params;
            std::filesystem::create_directories(eval_out);
            const auto dir = std::filesystem::path(eval_out);
            std::ofstream(dir / "eval_report.json") << ml::eval_report_to_json_text(report);
            std::ofstream(dir / "eval_report.txt") << report.text_table();
            std::ofstream(dir / "confusion.csv") << report.confusion_csv();
            std::cout << "accuracy " << report.accuracy << "\n";
            manifest.command = "evaluate";
            manifest.inputs = {eval_model, eval_data};
            manifest.outputs = {(dir / "eval_report.json").string()};
            manifest.elapsed_seconds = clock.seconds();
            write_manifest(manifest, dir);
        } else if (*single) {
            StudyConfig cfg;
            for (const auto& f : single_specs) cfg.spec_files.emplace_back(f);
            cfg.scheme = label_scheme_from_string(single_scheme);
            cfg.algorithms.clear();
            for (const auto& a : single_algs)
                cfg.algorithms.push_back(ml::algorithm_from_string(a));
            cfg.seed = seed;
            cfg.jobs = jobs;
            cfg.grid = grid_config;
            if (config.contains("test_fraction"))
                cfg.test_fraction = config.at("test_fraction").get<double>();
            if (config.contains("folds")) cfg.cv_folds = config.at("folds").get<int>();
            const SingleBoilerStudyResult result = run_single_boiler_study(cfg);
            write_study_outputs(result, single_out);
            std::cout << "study results in " << single_out << "\n";
            manifest.command = "study single";
            manifest.inputs = single_specs;
            manifest.outputs = {single_out};
            manifest.elapsed_seconds = clock.seconds();
            write_manifest(manifest, single_out);
        } else if (*gen) {
            std::vector<std::pair<std::string, Dataset>> datasets;
            std::vector<std::string> ids;
            for (const auto& f : gen_specs) {
                const BoilerSpec spec = load_calibrated_spec(f);
                datasets.emplace_back(
                    spec.id, relabel(boiler_dataset(spec, grid_config),
                                     LabelScheme::MergedExcessAir22));
                ids.push_back(spec.id);
            }
            GeneralizationPlan plan;
            plan.iteration = gen_iteration;
            plan.train_ids = gen_train.empty() ? ids : gen_train;
            if (gen_iteration == 1 || gen_iteration == 4) {
                plan.test_ids = gen_test;
            }
            const GeneralizationResult result = run_generalization(
                datasets, plan, ml::algorithm_from_string(gen_alg), seed, 5, jobs);
            write_generalization_outputs({result}, gen_out);
            std::cout << "generalization results in " << gen_out << "\n";
            manifest.command = "study generalize";
            manifest.inputs = gen_specs;
            manifest.outputs = {gen_out};
            manifest.elapsed_seconds = clock.seconds();
            write_manifest(manifest, gen_out);
        } else if (*impact) {
            const BoilerSpec spec = load_calibrated_spec(impact_spec);
            const std::vector<double> levels =
                impact_levels.empty() ? fault_levels() : impact_levels;
            const ImpactReport report = fault_impact_report(spec, levels);
            std::filesystem::create_directories(impact_out);
            write_impact_report_csv(report,
                                    std::filesystem::path(impact_out) / "impact_report.csv");
            std::cout << "impact report in " << impact_out << "\n";
            manifest.command = "study impact";
            manifest.inputs = {impact_spec};
            manifest.outputs = {impact_out};
            manifest.elapsed_seconds = clock.seconds();
            write_manifest(manifest, impact_out);
        } else if (*ingest) {
            const PointMap map = load_point_map(ingest_map);
            std::vector<TimeSeries> series;
            for (const auto& f : ingest_data) {
                if (ingest_data.size() == 1) {
                    // try the wide layout first
                    try {
                        series = read_wide_csv(f);
                        break;
                    } catch (const DataError&) {
                    }
                }
                series.push_back(read_series_csv(f));
            }
            const FeatureRows rows = to_feature_rows(map, series, ingest_interval);
            write_feature_rows_csv(rows, ingest_out);
            std::cout << "wrote " << rows.rows.size() << " feature rows to " << ingest_out
                      << "\n";
            manifest.command = "ingest";
            manifest.inputs = ingest_data;
            manifest.inputs.push_back(ingest_map);
            manifest.outputs = {ingest_out};
            manifest.elapsed_seconds = clock.seconds();
            write_manifest(manifest, std::filesystem::path(ingest_out).parent_path());
        } else if (*filt) {
            const TimeSeries series = read_series_csv(filt_data);
            write_series_csv(median_filter(series, filt_window), filt_out);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const SpecError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace boilerfdd
