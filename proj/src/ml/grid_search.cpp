#include "boilerfdd/ml/grid_search.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "boilerfdd/errors.hpp"
#include "boilerfdd/ml/split.hpp"
#include "boilerfdd/parallel.hpp"
#include "boilerfdd/rng.hpp"

namespace boilerfdd::ml {

HyperGrid HyperGrid::defaults(Algorithm alg) {
    HyperGrid grid;
    grid.alg = alg;
    switch (alg) {
        case Algorithm::Knn: {
            for (double k : {3.0, 5.0, 7.0}) {
                ParamSet p;
                p.values["k"] = k;
                grid.combos.push_back(std::move(p));
            }
            break;
        }
        case Algorithm::DecisionTree: {
            for (double depth : {5.0, 10.0, 15.0, 20.0})
                for (double leaf : {1.0, 2.0, 5.0, 10.0})
                    for (double split : {2.0, 5.0, 10.0})
                        for (const char* criterion : {"gini", "entropy"})
                            for (const char* splitter : {"random", "best"}) {
                                ParamSet p;
                                p.values["max_depth"] = depth;
                                p.values["min_samples_leaf"] = leaf;
                                p.values["min_samples_split"] = split;
                                p.tags["criterion"] = criterion;
                                p.tags["splitter"] = splitter;
                                grid.combos.push_back(std::move(p));
                            }
            break;
        }
        case Algorithm::RandomForest: {
            for (double depth : {5.0, 10.0, 15.0, 20.0})
                for (double leaf : {1.0, 2.0, 5.0, 10.0})
                    for (double split : {2.0, 5.0, 10.0})
                        for (double trees : {50.0, 100.0, 150.0}) {
                            ParamSet p;
                            p.values["max_depth"] = depth;
                            p.values["min_samples_leaf"] = leaf;
                            p.values["min_samples_split"] = split;
                            p.values["n_estimators"] = trees;
                            p.tags["bootstrap"] = "true";
                            grid.combos.push_back(std::move(p));
                        }
            break;
        }
        case Algorithm::Svm: {
            for (double gamma : {0.1, 1.0})
                for (double c : {500.0, 1000.0}) {
                    ParamSet p;
                    p.tags["kernel"] = "rbf";
                    p.values["gamma"] = gamma;
                    p.values["C"] = c;
                    grid.combos.push_back(std::move(p));
                }
            break;
        }
    }
    return grid;
}

namespace {

double fold_accuracy(const std::vector<int>& predicted, const std::vector<int>& truth) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) hits += (predicted[i] == truth[i]);
    return truth.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(truth.size());
}

// A group of combos whose members can share one fit. Random-forest combos
// differing only in n_estimators share the largest forest: smaller member
// forests are exact tree prefixes of it because tree seeds are per-index.
struct ComboGroup {
    std::vector<int> members;  // combo indices, ascending n_estimators for rf
};

std::vector<ComboGroup> group_combos(const HyperGrid& grid) {
    std::vector<ComboGroup> groups;
    if (grid.alg != Algorithm::RandomForest) {
        groups.resize(grid.combos.size());
        for (std::size_t i = 0; i < grid.combos.size(); ++i)
            groups[i].members = {static_cast<int>(i)};
        return groups;
    }
    std::map<std::string, int> key_to_group;
    for (std::size_t i = 0; i < grid.combos.size(); ++i) {
        ParamSet key = grid.combos[i];
        key.values.erase("n_estimators");
        const std::string key_text = key.describe();
        const auto [it, inserted] =
            key_to_group.emplace(key_text, static_cast<int>(groups.size()));
        if (inserted) groups.emplace_back();
        groups[static_cast<std::size_t>(it->second)].members.push_back(static_cast<int>(i));
    }
    for (auto& g : groups) {
        std::sort(g.members.begin(), g.members.end(), [&](int a, int b) {
            return grid.combos[static_cast<std::size_t>(a)].get("n_estimators", 0) <
                   grid.combos[static_cast<std::size_t>(b)].get("n_estimators", 0);
        });
    }
    return groups;
}

}  // namespace

GridSearchResult grid_search(const HyperGrid& grid, const Table& train, int k_folds,
                             std::uint64_t seed, int jobs) {
    if (grid.combos.empty()) throw ConfigError("hyperparameter grid is empty");
    if (train.size() == 0) throw DataError("grid search needs training rows");

    const auto folds = kfold_indices(train.y, k_folds, derive_seed(seed, 0xf01d));
    const std::size_t n_folds = folds.size();

    // shared fold tables
    std::vector<Table> fold_train(n_folds), fold_test(n_folds);
    for (std::size_t f = 0; f < n_folds; ++f) {
        std::vector<int> train_idx;
        train_idx.reserve(train.size() - folds[f].size());
        std::vector<bool> in_fold(train.size(), false);
        for (int i : folds[f]) in_fold[static_cast<std::size_t>(i)] = true;
        for (std::size_t i = 0; i < train.size(); ++i)
            if (!in_fold[i]) train_idx.push_back(static_cast<int>(i));
        fold_train[f] = train.subset(train_idx);
        fold_test[f] = train.subset(folds[f]);
    }

    const auto groups = group_combos(grid);
    const std::size_t n_combos = grid.combos.size();
    std::vector<std::vector<double>> score(n_combos, std::vector<double>(n_folds, 0.0));
    std::vector<bool> failed(n_combos, false);

    parallel_for(groups.size() * n_folds, jobs, [&](std::size_t task) {
        const std::size_t g = task / n_folds;
        const std::size_t f = task % n_folds;
        const ComboGroup& group = groups[g];
        const std::uint64_t fit_seed = derive_seed(derive_seed(seed, g), f);
        try {
            if (grid.alg == Algorithm::RandomForest && group.members.size() > 1) {
                const int largest = group.members.back();
                TrainedModel model = fit_model(Algorithm::RandomForest,
                                               grid.combos[static_cast<std::size_t>(largest)],
                                               fold_train[f], fit_seed, 1);
                const auto& forest = std::get<RandomForestModel>(model.impl);
                for (int member : group.members) {
                    const auto n_trees = static_cast<std::size_t>(
                        grid.combos[static_cast<std::size_t>(member)].get("n_estimators", 0));
                    const auto predicted = forest.predict(fold_test[f].x, n_trees);
                    score[static_cast<std::size_t>(member)][f] =
                        fold_accuracy(predicted, fold_test[f].y);
                }
            } else {
                for (int member : group.members) {
                    TrainedModel model =
                        fit_model(grid.alg, grid.combos[static_cast<std::size_t>(member)],
                                  fold_train[f], fit_seed, 1);
                    score[static_cast<std::size_t>(member)][f] =
                        fold_accuracy(model.predict(fold_test[f].x), fold_test[f].y);
                }
            }
        } catch (const std::exception&) {
            for (int member : group.members) failed[static_cast<std::size_t>(member)] = true;
        }
    });

    GridSearchResult result;
    result.evaluated = n_combos;
    result.cv_scores.resize(n_combos, 0.0);
    result.failed = failed;
    for (std::size_t i = 0; i < n_combos; ++i) {
        if (failed[i]) {
            result.cv_scores[i] = 0.0;
            continue;
        }
        double sum = 0.0;
        for (double s : score[i]) sum += s;
        result.cv_scores[i] = sum / static_cast<double>(n_folds);
    }
    for (std::size_t i = 0; i < n_combos; ++i) {
        if (result.best_index < 0 ||
            result.cv_scores[i] > result.cv_scores[static_cast<std::size_t>(result.best_index)])
            result.best_index = static_cast<int>(i);
    }
    result.best = grid.combos[static_cast<std::size_t>(result.best_index)];
    return result;
}

TunedModel tune_and_fit(const HyperGrid& grid, const Table& train, int k_folds,
                        std::uint64_t seed, int jobs) {
    TunedModel tuned;
    tuned.search = grid_search(grid, train, k_folds, seed, jobs);
    tuned.model =
        fit_model(grid.alg, tuned.search.best, train, derive_seed(seed, 0x5eed), jobs);
    return tuned;
}

}  // namespace boilerfdd::ml
