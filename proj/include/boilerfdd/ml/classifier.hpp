#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "boilerfdd/ml/table.hpp"

namespace boilerfdd::ml {

enum class Algorithm { Knn, DecisionTree, RandomForest, Svm };

Algorithm algorithm_from_string(const std::string& s);
std::string to_string(Algorithm a);

// One point of a hyperparameter grid: numeric values plus categorical tags.
struct ParamSet {
    std::map<std::string, double> values;
    std::map<std::string, std::string> tags;

    double get(const std::string& name, double fallback) const;
    std::string tag(const std::string& name, const std::string& fallback) const;
    std::string describe() const;
    bool operator==(const ParamSet&) const = default;
};

// ---------------------------------------------------------------------------
// KNN

struct KnnModel {
    int k = 5;
    Standardizer scaler;
    Matrix train_x;  // stored standardized
    std::vector<int> train_y;
    std::size_t n_classes = 0;

    void fit(const Matrix& x, const std::vector<int>& y, std::size_t n_classes, int k,
             bool standardize);
    // Euclidean vote; distance ties resolve to the lower training-row index,
    // vote ties to the lower class id.
    int predict_row(const double* raw_row) const;
    std::vector<int> predict(const Matrix& x) const;
};

// ---------------------------------------------------------------------------
// CART decision tree

enum class Criterion { Gini, Entropy };
enum class Splitter { Best, Random };

struct TreeParams {
    int max_depth = std::numeric_limits<int>::max();
    int min_leaf = 1;
    int min_split = 2;
    Criterion criterion = Criterion::Gini;
    Splitter splitter = Splitter::Best;
    int max_features = 0;  // 0 = use all features
};

struct TreeNode {
    int feature = -1;      // -1 for leaves
    double threshold = 0.0;  // go left when x[feature] <= threshold
    int left = -1;
    int right = -1;
    int leaf_class = -1;
};

struct DecisionTreeModel {
    TreeParams params;
    std::vector<TreeNode> nodes;
    int depth = 0;

    void fit(const Matrix& x, const std::vector<int>& y, std::size_t n_classes,
             const TreeParams& params, std::uint64_t seed);
    // sample_indices selects (possibly repeated) training rows; used by the forest.
    void fit_on(const Matrix& x, const std::vector<int>& y, std::size_t n_classes,
                const TreeParams& params, std::uint64_t seed, std::vector<int> sample_indices);
    int predict_row(const double* row) const;
    std::vector<int> predict(const Matrix& x) const;
};

// ---------------------------------------------------------------------------
// Random forest

struct ForestParams {
    TreeParams tree;
    int n_estimators = 100;
    bool bootstrap = true;
    int max_features = -1;  // -1 = ceil(sqrt(d))
};

struct RandomForestModel {
    ForestParams params;
    std::vector<DecisionTreeModel> trees;
    std::size_t n_classes = 0;

    // Trees draw their randomness from per-tree seeds derived from `seed`,
    // so a forest with fewer estimators is a prefix of a larger one.
    void fit(const Matrix& x, const std::vector<int>& y, std::size_t n_classes,
             const ForestParams& params, std::uint64_t seed, int jobs = 1);
    int predict_row(const double* row, std::size_t n_trees = 0) const;
    std::vector<int> predict(const Matrix& x, std::size_t n_trees = 0) const;
};

// ---------------------------------------------------------------------------
// RBF-kernel SVM, SMO-trained, one-vs-one multiclass

struct SvmParams {
    double c = 1000.0;
    double gamma = 0.1;
    double kkt_tol = 1e-3;
    long long max_iter = 0;  // 0 = automatic cap from the problem size
};

// One binary machine of the one-vs-one scheme; positive = first class.
struct BinarySvm {
    int class_pos = 0;
    int class_neg = 0;
    Matrix support_x;               // standardized support vectors
    std::vector<double> dual_coef;  // alpha_i * y_i
    double bias = 0.0;

    double decision(const double* standardized_row, double gamma) const;
};

struct SvmModel {
    SvmParams params;
    Standardizer scaler;
    std::vector<BinarySvm> machines;
    std::size_t n_classes = 0;

    void fit(const Matrix& x, const std::vector<int>& y, std::size_t n_classes,
             const SvmParams& params);
    int predict_row(const double* raw_row) const;
    std::vector<int> predict(const Matrix& x) const;
};

// Dual solution of one binary soft-margin problem; exposed for testing
// against a brute-force QP oracle.
struct SmoSolution {
    std::vector<double> alpha;
    double bias = 0.0;
    long long iterations = 0;
    double kkt_gap = 0.0;
};

// labels in {+1, -1}; x is used as given (standardize first if desired).
SmoSolution smo_train(const Matrix& x, const std::vector<int>& y, double c, double gamma,
                      double kkt_tol, long long max_iter);

double rbf_kernel(const double* a, const double* b, std::size_t d, double gamma);

// ---------------------------------------------------------------------------
// Trained-model wrapper shared by grid search, evaluation and the artifact IO

struct TrainedModel {
    Algorithm alg = Algorithm::DecisionTree;
    ParamSet params;
    std::uint64_t seed = 0;
    std::vector<std::string> classes;
    std::vector<std::string> feature_names;
    std::variant<KnnModel, DecisionTreeModel, RandomForestModel, SvmModel> impl;

    std::vector<int> predict(const Matrix& x) const;
};

// Standardization applies to KNN and SVM only; trees see raw features.
bool algorithm_standardizes(Algorithm a);

TrainedModel fit_model(Algorithm alg, const ParamSet& params, const Table& train,
                       std::uint64_t seed, int jobs = 1);

}  // namespace boilerfdd::ml
