#pragma once

#include <cstdint>
#include <vector>

#include "boilerfdd/ml/classifier.hpp"

namespace boilerfdd::ml {

// Exhaustive hyperparameter grid in a fixed enumeration order.
struct HyperGrid {
    Algorithm alg = Algorithm::DecisionTree;
    std::vector<ParamSet> combos;

    // The published search spaces:
    //   knn: k {3,5,7}
    //   dt:  max_depth {5,10,15,20} x min_leaf {1,2,5,10} x min_split {2,5,10}
    //        x criterion {gini,entropy} x splitter {random,best}
    //   rf:  max_depth x min_leaf x min_split as dt, n_estimators {50,100,150}
    //   svm: RBF kernel, gamma {0.1,1} x C {500,1000}
    static HyperGrid defaults(Algorithm alg);
};

struct GridSearchResult {
    ParamSet best;
    int best_index = -1;
    std::vector<double> cv_scores;  // mean fold accuracy per combo, grid order
    std::vector<bool> failed;       // combos whose training failed (scored 0)
    std::size_t evaluated = 0;
};

// Mean k-fold accuracy for every combination; ties break to the earlier
// combo in grid order. Identical results regardless of the job count.
GridSearchResult grid_search(const HyperGrid& grid, const Table& train, int k_folds,
                             std::uint64_t seed, int jobs = 1);

// Convenience: grid search then refit of the winner on the full training set.
struct TunedModel {
    TrainedModel model;
    GridSearchResult search;
};
TunedModel tune_and_fit(const HyperGrid& grid, const Table& train, int k_folds,
                        std::uint64_t seed, int jobs = 1);

}  // namespace boilerfdd::ml
