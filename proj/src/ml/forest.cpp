#include <cmath>
#include <numeric>

#include "boilerfdd/errors.hpp"
#include "boilerfdd/ml/classifier.hpp"
#include "boilerfdd/parallel.hpp"
#include "boilerfdd/rng.hpp"

namespace boilerfdd::ml {

void RandomForestModel::fit(const Matrix& x, const std::vector<int>& y, std::size_t classes,
                            const ForestParams& p, std::uint64_t seed, int jobs) {
    if (p.n_estimators < 1) throw ConfigError("forest: need at least one estimator");
    params = p;
    n_classes = classes;
    params.tree.max_features =
        p.max_features < 0
            ? static_cast<int>(std::ceil(std::sqrt(static_cast<double>(x.cols))))
            : p.max_features;

    trees.assign(static_cast<std::size_t>(params.n_estimators), DecisionTreeModel{});
    parallel_for(trees.size(), jobs, [&](std::size_t t) {
        const std::uint64_t tree_seed = derive_seed(seed, t);
        std::vector<int> sample;
        if (params.bootstrap) {
            Rng rng(derive_seed(tree_seed, 0x0b00));
            sample.resize(x.rows);
            for (auto& s : sample)
                s = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(x.rows)));
        } else {
            sample.resize(x.rows);
            std::iota(sample.begin(), sample.end(), 0);
        }
        trees[t].fit_on(x, y, n_classes, params.tree, tree_seed, std::move(sample));
    });
}

int RandomForestModel::predict_row(const double* row, std::size_t n_trees) const {
    if (n_trees == 0 || n_trees > trees.size()) n_trees = trees.size();
    std::vector<int> votes(n_classes, 0);
    for (std::size_t t = 0; t < n_trees; ++t) ++votes[trees[t].predict_row(row)];
    int best = 0;
    for (std::size_t c = 1; c < votes.size(); ++c)
        if (votes[c] > votes[best]) best = static_cast<int>(c);
    return best;
}

std::vector<int> RandomForestModel::predict(const Matrix& x, std::size_t n_trees) const {
    std::vector<int> out(x.rows);
    for (std::size_t i = 0; i < x.rows; ++i) out[i] = predict_row(x.row(i), n_trees);
    return out;
}

}  // namespace boilerfdd::ml
