#include "boilerfdd/ml/table.hpp"

#include <cmath>
#include <unordered_map>

#include "boilerfdd/errors.hpp"

namespace boilerfdd::ml {

void Matrix::push_row(const std::vector<double>& v) {
    if (rows == 0 && cols == 0) cols = v.size();
    if (v.size() != cols) throw DataError("matrix row width mismatch");
    data.insert(data.end(), v.begin(), v.end());
    ++rows;
}

Table Table::subset(const std::vector<int>& indices) const {
    Table t;
    t.classes = classes;
    t.feature_names = feature_names;
    t.x = Matrix(indices.size(), x.cols);
    t.y.reserve(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const double* src = x.row(static_cast<std::size_t>(indices[i]));
        std::copy(src, src + x.cols, t.x.row(i));
        t.y.push_back(y[static_cast<std::size_t>(indices[i])]);
    }
    return t;
}

Table table_from_dataset(const Dataset& ds) {
    Table t;
    t.feature_names = ds.feature_names;
    std::unordered_map<std::string, int> ids;
    t.x = Matrix(ds.rows.size(), ds.feature_names.size());
    t.y.reserve(ds.rows.size());
    for (std::size_t i = 0; i < ds.rows.size(); ++i) {
        const LabeledSample& row = ds.rows[i];
        if (row.features.size() != ds.feature_names.size())
            throw DataError("row feature width does not match the header");
        std::copy(row.features.begin(), row.features.end(), t.x.row(i));
        auto [it, inserted] = ids.emplace(row.label, static_cast<int>(t.classes.size()));
        if (inserted) t.classes.push_back(row.label);
        t.y.push_back(it->second);
    }
    return t;
}

void Standardizer::fit(const Matrix& x) {
    mean.assign(x.cols, 0.0);
    spread.assign(x.cols, 1.0);
    if (x.rows == 0) { enabled = true; return; }
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) mean[j] += x.at(i, j);
    for (double& m : mean) m /= static_cast<double>(x.rows);
    std::vector<double> var(x.cols, 0.0);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) {
            const double d = x.at(i, j) - mean[j];
            var[j] += d * d;
        }
    for (std::size_t j = 0; j < x.cols; ++j) {
        const double s = std::sqrt(var[j] / static_cast<double>(x.rows));
        spread[j] = s > 1e-12 ? s : 1.0;
    }
    enabled = true;
}

Matrix Standardizer::transform(const Matrix& x) const {
    if (!enabled) return x;
    Matrix out(x.rows, x.cols);
    for (std::size_t i = 0; i < x.rows; ++i) transform_row(x.row(i), out.row(i), x.cols);
    return out;
}

void Standardizer::transform_row(const double* in, double* out, std::size_t d) const {
    if (!enabled) {
        std::copy(in, in + d, out);
        return;
    }
    for (std::size_t j = 0; j < d; ++j) out[j] = (in[j] - mean[j]) / spread[j];
}

}  // namespace boilerfdd::ml
