#include "boilerfdd/ml/classifier.hpp"

#include <cmath>
#include <sstream>

#include "boilerfdd/errors.hpp"

namespace boilerfdd::ml {

Algorithm algorithm_from_string(const std::string& s) {
    if (s == "knn") return Algorithm::Knn;
    if (s == "dt" || s == "tree") return Algorithm::DecisionTree;
    if (s == "rf" || s == "forest") return Algorithm::RandomForest;
    if (s == "svm") return Algorithm::Svm;
    throw ConfigError("unknown algorithm '" + s + "' (expected knn, dt, rf or svm)");
}

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::Knn: return "knn";
        case Algorithm::DecisionTree: return "dt";
        case Algorithm::RandomForest: return "rf";
        case Algorithm::Svm: return "svm";
    }
    throw std::logic_error("unreachable");
}

double ParamSet::get(const std::string& name, double fallback) const {
    const auto it = values.find(name);
    return it == values.end() ? fallback : it->second;
}

std::string ParamSet::tag(const std::string& name, const std::string& fallback) const {
    const auto it = tags.find(name);
    return it == tags.end() ? fallback : it->second;
}

std::string ParamSet::describe() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : values) {
        out << (first ? "" : ", ") << k << "=" << v;
        first = false;
    }
    for (const auto& [k, v] : tags) {
        out << (first ? "" : ", ") << k << "=" << v;
        first = false;
    }
    return out.str();
}

bool algorithm_standardizes(Algorithm a) {
    return a == Algorithm::Knn || a == Algorithm::Svm;
}

namespace {

TreeParams tree_params_from(const ParamSet& p) {
    TreeParams t;
    t.max_depth = static_cast<int>(p.get("max_depth", 1e9));
    t.min_leaf = static_cast<int>(p.get("min_samples_leaf", 1));
    t.min_split = static_cast<int>(p.get("min_samples_split", 2));
    const std::string criterion = p.tag("criterion", "gini");
    if (criterion == "gini")
        t.criterion = Criterion::Gini;
    else if (criterion == "entropy")
        t.criterion = Criterion::Entropy;
    else
        throw ConfigError("unknown criterion '" + criterion + "'");
    const std::string splitter = p.tag("splitter", "best");
    if (splitter == "best")
        t.splitter = Splitter::Best;
    else if (splitter == "random")
        t.splitter = Splitter::Random;
    else
        throw ConfigError("unknown splitter '" + splitter + "'");
    return t;
}

}  // namespace

TrainedModel fit_model(Algorithm alg, const ParamSet& params, const Table& train,
                       std::uint64_t seed, int jobs) {
    TrainedModel model;
    model.alg = alg;
    model.params = params;
    model.seed = seed;
    model.classes = train.classes;
    model.feature_names = train.feature_names;

    switch (alg) {
        case Algorithm::Knn: {
            KnnModel m;
            m.fit(train.x, train.y, train.classes.size(),
                  static_cast<int>(params.get("k", 5)),
                  params.tag("standardize", "true") == "true");
            model.impl = std::move(m);
            break;
        }
        case Algorithm::DecisionTree: {
            DecisionTreeModel m;
            m.fit(train.x, train.y, train.classes.size(), tree_params_from(params), seed);
            model.impl = std::move(m);
            break;
        }
        case Algorithm::RandomForest: {
            ForestParams fp;
            fp.tree = tree_params_from(params);
            fp.n_estimators = static_cast<int>(params.get("n_estimators", 100));
            fp.bootstrap = params.tag("bootstrap", "true") == "true";
            fp.max_features = static_cast<int>(params.get("max_features", -1));
            RandomForestModel m;
            m.fit(train.x, train.y, train.classes.size(), fp, seed, jobs);
            model.impl = std::move(m);
            break;
        }
        case Algorithm::Svm: {
            SvmParams sp;
            sp.c = params.get("C", 1000.0);
            sp.gamma = params.get("gamma", 0.1);
            sp.kkt_tol = params.get("tol", 1e-3);
            sp.max_iter = static_cast<long long>(params.get("max_iter", 0));
            SvmModel m;
            m.fit(train.x, train.y, train.classes.size(), sp);
            model.impl = std::move(m);
            break;
        }
    }
    return model;
}

std::vector<int> TrainedModel::predict(const Matrix& x) const {
    return std::visit([&](const auto& m) { return m.predict(x); }, impl);
}

}  // namespace boilerfdd::ml
