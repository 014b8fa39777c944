#include <algorithm>
#include <cmath>
#include <numeric>

#include "boilerfdd/errors.hpp"
#include "boilerfdd/ml/classifier.hpp"
#include "boilerfdd/rng.hpp"

namespace boilerfdd::ml {

namespace {

// Split quality is compared through a "score to maximize" that is affine in
// the weighted child impurity, so no parent term is needed:
//   gini:    sum over children of (sum_c count_c^2 / n_child)
//   entropy: sum over children of (sum_c count_c*log2(count_c) - n*log2(n))
struct TreeBuilder {
    const Matrix& x;
    const std::vector<int>& y;
    std::size_t n_classes;
    const TreeParams& params;
    Rng rng;
    std::vector<TreeNode>& nodes;
    int& out_depth;

    std::vector<int> idx;                        // row indices, partitioned in place
    std::vector<std::pair<double, int>> sorted;  // (value, class) scratch
    std::vector<int> feature_order;
    std::vector<int> counts;        // per-class counts of the current node
    std::vector<int> counts_left;   // scan scratch
    std::vector<int> part_buf;      // stable partition scratch

    struct BestSplit {
        bool found = false;
        int feature = -1;
        double threshold = 0.0;
        double score = -std::numeric_limits<double>::infinity();
    };

    void count_classes(int lo, int hi) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int i = lo; i < hi; ++i) ++counts[y[static_cast<std::size_t>(idx[i])]];
    }

    int majority_class() const {
        int best = 0;
        for (std::size_t c = 1; c < counts.size(); ++c)
            if (counts[c] > counts[best]) best = static_cast<int>(c);
        return best;
    }

    bool is_pure() const {
        int seen = 0;
        for (int c : counts) seen += (c > 0);
        return seen <= 1;
    }

    // Candidate features for this node, in draw order. With the full
    // feature set the natural column order is kept, so equal-quality splits
    // break ties toward the lower feature index.
    int pick_features() {
        const int d = static_cast<int>(x.cols);
        feature_order.resize(static_cast<std::size_t>(d));
        std::iota(feature_order.begin(), feature_order.end(), 0);
        int m = params.max_features;
        if (m <= 0 || m >= d) return d;
        for (int i = 0; i < m; ++i) {
            const int j = i + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(d - i)));
            std::swap(feature_order[static_cast<std::size_t>(i)],
                      feature_order[static_cast<std::size_t>(j)]);
        }
        return m;
    }

    BestSplit best_split_exact(int lo, int hi, int n_candidates) {
        const int n = hi - lo;
        BestSplit best;
        const bool entropy = params.criterion == Criterion::Entropy;
        for (int f_i = 0; f_i < n_candidates; ++f_i) {
            const int f = feature_order[static_cast<std::size_t>(f_i)];
            sorted.resize(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                const int row = idx[lo + i];
                sorted[static_cast<std::size_t>(i)] = {x.at(static_cast<std::size_t>(row),
                                                            static_cast<std::size_t>(f)),
                                                       y[static_cast<std::size_t>(row)]};
            }
            std::sort(sorted.begin(), sorted.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            if (sorted.front().first == sorted.back().first) continue;  // constant feature

            std::fill(counts_left.begin(), counts_left.end(), 0);
            // incremental impurity bookkeeping
            double sq_left = 0.0, sq_right = 0.0;   // gini: sum of squared counts
            double cl_left = 0.0, cl_right = 0.0;   // entropy: sum of c*log2(c)
            if (entropy) {
                for (int c : counts)
                    if (c > 0) cl_right += static_cast<double>(c) * std::log2(static_cast<double>(c));
            } else {
                for (int c : counts) sq_right += static_cast<double>(c) * c;
            }
            auto move_left = [&](int cls) {
                const int c_old = counts_left[static_cast<std::size_t>(cls)];
                const int r_old = counts[static_cast<std::size_t>(cls)] - c_old;
                if (entropy) {
                    auto xlog = [](int v) {
                        return v > 0 ? static_cast<double>(v) * std::log2(static_cast<double>(v))
                                     : 0.0;
                    };
                    cl_left += xlog(c_old + 1) - xlog(c_old);
                    cl_right += xlog(r_old - 1) - xlog(r_old);
                } else {
                    sq_left += 2.0 * c_old + 1.0;
                    sq_right -= 2.0 * r_old - 1.0;
                }
                ++counts_left[static_cast<std::size_t>(cls)];
            };

            for (int i = 0; i < n - 1; ++i) {
                move_left(sorted[static_cast<std::size_t>(i)].second);
                const double v = sorted[static_cast<std::size_t>(i)].first;
                const double v_next = sorted[static_cast<std::size_t>(i + 1)].first;
                if (v == v_next) continue;
                const int n_left = i + 1;
                const int n_right = n - n_left;
                if (n_left < params.min_leaf || n_right < params.min_leaf) continue;
                double score;
                if (entropy) {
                    score = (cl_left - n_left * std::log2(static_cast<double>(n_left))) +
                            (cl_right - n_right * std::log2(static_cast<double>(n_right)));
                } else {
                    score = sq_left / n_left + sq_right / n_right;
                }
                if (score > best.score) {
                    // midpoint; fall back to v when the gap is below double
                    // resolution so the partition matches the scan boundary
                    double thr = v + 0.5 * (v_next - v);
                    if (!(thr < v_next)) thr = v;
                    best.found = true;
                    best.feature = f;
                    best.threshold = thr;
                    best.score = score;
                }
            }
        }
        return best;
    }

    BestSplit best_split_random(int lo, int hi, int n_candidates) {
        const int n = hi - lo;
        const bool entropy = params.criterion == Criterion::Entropy;
        BestSplit best;
        for (int f_i = 0; f_i < n_candidates; ++f_i) {
            const int f = feature_order[static_cast<std::size_t>(f_i)];
            double vmin = std::numeric_limits<double>::infinity();
            double vmax = -vmin;
            for (int i = lo; i < hi; ++i) {
                const double v =
                    x.at(static_cast<std::size_t>(idx[i]), static_cast<std::size_t>(f));
                vmin = std::min(vmin, v);
                vmax = std::max(vmax, v);
            }
            if (!(vmax > vmin)) continue;
            const double thr = rng.uniform(vmin, vmax);
            std::fill(counts_left.begin(), counts_left.end(), 0);
            int n_left = 0;
            for (int i = lo; i < hi; ++i) {
                const int row = idx[i];
                if (x.at(static_cast<std::size_t>(row), static_cast<std::size_t>(f)) <= thr) {
                    ++counts_left[static_cast<std::size_t>(y[static_cast<std::size_t>(row)])];
                    ++n_left;
                }
            }
            const int n_right = n - n_left;
            if (n_left < params.min_leaf || n_right < params.min_leaf) continue;
            double score = 0.0;
            if (entropy) {
                auto side = [&](auto count_of, int total) {
                    double s = 0.0;
                    for (std::size_t c = 0; c < counts.size(); ++c) {
                        const int v = count_of(c);
                        if (v > 0) s += static_cast<double>(v) * std::log2(static_cast<double>(v));
                    }
                    return s - static_cast<double>(total) * std::log2(static_cast<double>(total));
                };
                score = side([&](std::size_t c) { return counts_left[c]; }, n_left) +
                        side([&](std::size_t c) { return counts[c] - counts_left[c]; }, n_right);
            } else {
                double sq_l = 0.0, sq_r = 0.0;
                for (std::size_t c = 0; c < counts.size(); ++c) {
                    sq_l += static_cast<double>(counts_left[c]) * counts_left[c];
                    const int r = counts[c] - counts_left[c];
                    sq_r += static_cast<double>(r) * r;
                }
                score = sq_l / n_left + sq_r / n_right;
            }
            if (score > best.score) {
                best.found = true;
                best.feature = f;
                best.threshold = thr;
                best.score = score;
            }
        }
        return best;
    }

    // Stable partition of idx[lo, hi) on x[f] <= thr; returns the boundary.
    int partition(int lo, int hi, int f, double thr) {
        part_buf.clear();
        int write = lo;
        for (int i = lo; i < hi; ++i) {
            const int row = idx[i];
            if (x.at(static_cast<std::size_t>(row), static_cast<std::size_t>(f)) <= thr)
                idx[write++] = row;
            else
                part_buf.push_back(row);
        }
        std::copy(part_buf.begin(), part_buf.end(), idx.begin() + write);
        return write;
    }

    int build(int lo, int hi, int depth) {
        out_depth = std::max(out_depth, depth);
        const int n = hi - lo;
        count_classes(lo, hi);

        const int node_id = static_cast<int>(nodes.size());
        nodes.emplace_back();
        nodes[static_cast<std::size_t>(node_id)].leaf_class = majority_class();

        if (depth >= params.max_depth || n < params.min_split || n < 2 * params.min_leaf ||
            is_pure())
            return node_id;

        const int n_candidates = pick_features();
        BestSplit best = params.splitter == Splitter::Best
                             ? best_split_exact(lo, hi, n_candidates)
                             : best_split_random(lo, hi, n_candidates);
        if (!best.found) return node_id;

        const int mid = partition(lo, hi, best.feature, best.threshold);
        // a degenerate partition cannot happen: thresholds always separate values

        nodes[static_cast<std::size_t>(node_id)].feature = best.feature;
        nodes[static_cast<std::size_t>(node_id)].threshold = best.threshold;
        const int left = build(lo, mid, depth + 1);
        nodes[static_cast<std::size_t>(node_id)].left = left;
        const int right = build(mid, hi, depth + 1);
        nodes[static_cast<std::size_t>(node_id)].right = right;
        return node_id;
    }
};

}  // namespace

void DecisionTreeModel::fit(const Matrix& x, const std::vector<int>& y, std::size_t n_classes,
                            const TreeParams& p, std::uint64_t seed) {
    std::vector<int> all(x.rows);
    std::iota(all.begin(), all.end(), 0);
    fit_on(x, y, n_classes, p, seed, std::move(all));
}

void DecisionTreeModel::fit_on(const Matrix& x, const std::vector<int>& y, std::size_t n_classes,
                               const TreeParams& p, std::uint64_t seed,
                               std::vector<int> sample_indices) {
    if (x.rows == 0 || sample_indices.empty()) throw DataError("tree: empty training set");
    if (p.min_leaf < 1 || p.min_split < 2 || p.max_depth < 1)
        throw ConfigError("tree: invalid growth limits");
    params = p;
    nodes.clear();
    depth = 0;
    TreeBuilder builder{x,  y, n_classes, params, Rng(seed), nodes, depth, std::move(sample_indices),
                        {}, {}, std::vector<int>(n_classes, 0), std::vector<int>(n_classes, 0),
                        {}};
    builder.part_buf.reserve(builder.idx.size());
    builder.build(0, static_cast<int>(builder.idx.size()), 0);
}

int DecisionTreeModel::predict_row(const double* row) const {
    int node = 0;
    for (;;) {
        const TreeNode& nd = nodes[static_cast<std::size_t>(node)];
        if (nd.feature < 0) return nd.leaf_class;
        node = row[nd.feature] <= nd.threshold ? nd.left : nd.right;
    }
}

std::vector<int> DecisionTreeModel::predict(const Matrix& x) const {
    std::vector<int> out(x.rows);
    for (std::size_t i = 0; i < x.rows; ++i) out[i] = predict_row(x.row(i));
    return out;
}

}  // namespace boilerfdd::ml
