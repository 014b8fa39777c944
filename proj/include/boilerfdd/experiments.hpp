#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "boilerfdd/boiler.hpp"
#include "boilerfdd/dataset.hpp"
#include "boilerfdd/ml/grid_search.hpp"
#include "boilerfdd/ml/metrics.hpp"

namespace boilerfdd {

// Shared protocol settings for the study runners.
struct StudyConfig {
    std::vector<std::filesystem::path> spec_files;
    LabelScheme scheme = LabelScheme::MergedExcessAir22;
    std::vector<ml::Algorithm> algorithms = {ml::Algorithm::Knn, ml::Algorithm::DecisionTree,
                                             ml::Algorithm::RandomForest, ml::Algorithm::Svm};
    std::uint64_t seed = 7;
    double test_fraction = 0.33;
    int cv_folds = 5;
    int jobs = 0;  // 0 = hardware concurrency
    GridConfig grid;
};

// Loads a spec, calibrates it against its rated point when needed, and
// returns the Full31 dataset over the configured operating grid.
BoilerSpec load_calibrated_spec(const std::filesystem::path& file);
Dataset boiler_dataset(const BoilerSpec& spec, const GridConfig& grid);

struct StudyCell {
    std::string boiler_id;
    ml::Algorithm alg = ml::Algorithm::DecisionTree;
    double cv_score = 0.0;
    ml::EvalReport report;
};

struct SingleBoilerStudyResult {
    LabelScheme scheme = LabelScheme::MergedExcessAir22;
    std::vector<StudyCell> cells;  // boiler-major, algorithm order as configured
};

// Per boiler and algorithm: grid search with k-fold CV on the training
// split, winner refit, held-out evaluation.
SingleBoilerStudyResult run_single_boiler_study(const StudyConfig& cfg);
// Same protocol on pre-generated datasets (keyed by boiler id).
SingleBoilerStudyResult run_single_boiler_study(
    const std::vector<std::pair<std::string, Dataset>>& datasets, const StudyConfig& cfg);

void write_study_outputs(const SingleBoilerStudyResult& result,
                         const std::filesystem::path& out_dir);

// ---------------------------------------------------------------------------
// Generalization iterations (22-class protocol)

struct GeneralizationPlan {
    int iteration = 1;  // 1: one->others, 2: pool->each, 3: pool->pool, 4: all-minus->withheld
    std::vector<std::string> train_ids;
    std::vector<std::string> test_ids;

    void validate() const;  // overlap rules for iterations 1 and 4
};

struct GeneralizationResult {
    int iteration = 1;
    ml::Algorithm alg = ml::Algorithm::DecisionTree;
    ml::ParamSet best_params;
    double pooled_holdout_accuracy = 0.0;       // accuracy on the pooled 20%
    std::map<std::string, double> accuracy;     // per test target
};

// Pools the training boilers' 22-class data, splits 80/20, grid-searches on
// the 80%, freezes the winner and evaluates per plan:
//   iterations 1 and 4: full datasets of the withheld boilers;
//   iteration 2: each boiler's share of the pooled 20% hold-out;
//   iteration 3: the pooled 20% hold-out.
GeneralizationResult run_generalization(
    const std::vector<std::pair<std::string, Dataset>>& datasets22,
    const GeneralizationPlan& plan, ml::Algorithm alg, std::uint64_t seed, int cv_folds,
    int jobs);

void write_generalization_outputs(const std::vector<GeneralizationResult>& results,
                                  const std::filesystem::path& out_dir);

// ---------------------------------------------------------------------------
// Fault energy-impact report

struct ImpactRow {
    FaultCondition fault;
    double q_out = 0.0;               // W
    double output_reduction = 0.0;    // fraction r
    double eta_thermal = 0.0;         // fraction
    double eff_combustion = 0.0;      // percent
    double efficiency_drop_points = 0.0;   // thermal, percentage points vs clean
    double consumption_increase = 0.0;     // r / (1 - r), equal delivered heat
};

struct ImpactReport {
    std::string boiler_id;
    double baseline_q_out = 0.0;
    double baseline_eta = 0.0;
    double baseline_eff_combustion = 0.0;
    std::vector<ImpactRow> rows;
};

// Rated-point simulations across the requested fault levels for all three
// fault kinds.
ImpactReport fault_impact_report(const BoilerSpec& spec, const std::vector<double>& levels);

void write_impact_report_csv(const ImpactReport& report, const std::filesystem::path& file);

}  // namespace boilerfdd
