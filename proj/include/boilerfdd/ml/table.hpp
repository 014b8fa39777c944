#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "boilerfdd/dataset.hpp"

namespace boilerfdd::ml {

// Row-major dense matrix; enough linear algebra for the classifiers here.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }
    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    void push_row(const std::vector<double>& v);
};

// Feature matrix with integer class ids and the id -> name mapping.
struct Table {
    Matrix x;
    std::vector<int> y;
    std::vector<std::string> classes;       // fixed ordering: first appearance
    std::vector<std::string> feature_names;

    std::size_t size() const { return x.rows; }
    Table subset(const std::vector<int>& indices) const;
};

// Class ids in order of first appearance in the dataset rows.
Table table_from_dataset(const Dataset& ds);

// z-score statistics learned from training data only. Zero-spread columns
// (constant features) divide by 1 instead.
struct Standardizer {
    std::vector<double> mean;
    std::vector<double> spread;
    bool enabled = false;

    void fit(const Matrix& x);
    Matrix transform(const Matrix& x) const;
    void transform_row(const double* in, double* out, std::size_t d) const;
};

}  // namespace boilerfdd::ml
