#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "boilerfdd/ml/table.hpp"

namespace boilerfdd::ml {

// Per-class proportional split; both index lists come back ascending.
// Every class needs at least two rows.
std::pair<std::vector<int>, std::vector<int>> stratified_split(const Table& table,
                                                               double test_fraction,
                                                               std::uint64_t seed);

// k disjoint, exhaustive, stratified folds over the label vector. Class
// counts per fold stay within one row of the proportional share.
std::vector<std::vector<int>> kfold_indices(const std::vector<int>& labels, int k,
                                            std::uint64_t seed);

}  // namespace boilerfdd::ml
