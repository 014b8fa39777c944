#include "boilerfdd/ml/split.hpp"

#include <algorithm>
#include <cmath>

#include "boilerfdd/errors.hpp"
#include "boilerfdd/rng.hpp"

namespace boilerfdd::ml {

namespace {

std::vector<std::vector<int>> indices_by_class(const std::vector<int>& labels,
                                               std::size_t n_classes) {
    std::vector<std::vector<int>> per_class(n_classes);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const int c = labels[i];
        if (c < 0 || static_cast<std::size_t>(c) >= n_classes)
            throw DataError("label id out of range");
        per_class[static_cast<std::size_t>(c)].push_back(static_cast<int>(i));
    }
    return per_class;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> stratified_split(const Table& table,
                                                               double test_fraction,
                                                               std::uint64_t seed) {
    if (!(test_fraction > 0.0) || !(test_fraction < 1.0))
        throw ConfigError("test fraction must lie in (0, 1)");

    auto per_class = indices_by_class(table.y, table.classes.size());
    std::vector<int> train, test;
    for (std::size_t c = 0; c < per_class.size(); ++c) {
        auto& idx = per_class[c];
        if (idx.empty()) continue;
        if (idx.size() < 2)
            throw DataError("class '" + table.classes[c] +
                            "' has a single row; stratified split is impossible");
        Rng rng(derive_seed(seed, c));
        rng.shuffle(idx);
        auto n_test = static_cast<std::size_t>(
            std::llround(test_fraction * static_cast<double>(idx.size())));
        n_test = std::clamp<std::size_t>(n_test, 1, idx.size() - 1);
        test.insert(test.end(), idx.begin(), idx.begin() + static_cast<long>(n_test));
        train.insert(train.end(), idx.begin() + static_cast<long>(n_test), idx.end());
    }
    std::sort(train.begin(), train.end());
    std::sort(test.begin(), test.end());
    return {std::move(train), std::move(test)};
}

std::vector<std::vector<int>> kfold_indices(const std::vector<int>& labels, int k,
                                            std::uint64_t seed) {
    if (k < 2) throw ConfigError("fold count must be at least 2");
    if (static_cast<std::size_t>(k) > labels.size())
        throw ConfigError("fold count exceeds the number of rows");

    std::size_t n_classes = 0;
    for (int c : labels)
        n_classes = std::max(n_classes, static_cast<std::size_t>(c) + 1);
    auto per_class = indices_by_class(labels, n_classes);

    std::vector<std::vector<int>> folds(static_cast<std::size_t>(k));
    std::size_t next_fold = 0;
    for (std::size_t c = 0; c < per_class.size(); ++c) {
        auto& idx = per_class[c];
        Rng rng(derive_seed(seed, c));
        rng.shuffle(idx);
        // round-robin deal, continuing from where the previous class stopped
        // so small classes spread across folds
        for (int i : idx) {
            folds[next_fold].push_back(i);
            next_fold = (next_fold + 1) % folds.size();
        }
    }
    for (auto& fold : folds) std::sort(fold.begin(), fold.end());
    return folds;
}

}  // namespace boilerfdd::ml
