#include <algorithm>
#include <cmath>

#include "boilerfdd/errors.hpp"
#include "boilerfdd/ml/classifier.hpp"

namespace boilerfdd::ml {

void KnnModel::fit(const Matrix& x, const std::vector<int>& y, std::size_t classes, int k_neighbors,
                   bool standardize) {
    if (x.rows == 0) throw DataError("knn: empty training set");
    if (k_neighbors < 1 || static_cast<std::size_t>(k_neighbors) > x.rows)
        throw ConfigError("knn: k must lie in [1, training size]");
    k = k_neighbors;
    n_classes = classes;
    scaler = Standardizer{};
    if (standardize) scaler.fit(x);
    train_x = scaler.transform(x);
    train_y = y;
}

int KnnModel::predict_row(const double* raw_row) const {
    const std::size_t d = train_x.cols;
    std::vector<double> q(d);
    scaler.transform_row(raw_row, q.data(), d);

    std::vector<std::pair<double, int>> dist;
    dist.reserve(train_x.rows);
    for (std::size_t i = 0; i < train_x.rows; ++i) {
        const double* r = train_x.row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            const double diff = q[j] - r[j];
            s += diff * diff;
        }
        dist.emplace_back(s, static_cast<int>(i));
    }
    const auto kth = dist.begin() + k;
    std::partial_sort(dist.begin(), kth, dist.end());

    std::vector<int> votes(n_classes, 0);
    for (auto it = dist.begin(); it != kth; ++it) ++votes[train_y[it->second]];
    int best = 0;
    for (std::size_t c = 1; c < votes.size(); ++c)
        if (votes[c] > votes[best]) best = static_cast<int>(c);
    return best;
}

std::vector<int> KnnModel::predict(const Matrix& x) const {
    std::vector<int> out(x.rows);
    for (std::size_t i = 0; i < x.rows; ++i) out[i] = predict_row(x.row(i));
    return out;
}

}  // namespace boilerfdd::ml
