#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "boilerfdd/errors.hpp"
#include "boilerfdd/ml/classifier.hpp"

namespace boilerfdd::ml {

double rbf_kernel(const double* a, const double* b, std::size_t d, double gamma) {
    double s = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        const double diff = a[j] - b[j];
        s += diff * diff;
    }
    return std::exp(-gamma * s);
}

namespace {

// Kernel rows on demand; problems small enough get the full matrix upfront.
class KernelCache {
public:
    KernelCache(const Matrix& x, double gamma) : x_(x), gamma_(gamma), n_(x.rows) {
        full_ = n_ <= 3000;
        if (full_) {
            dense_.resize(n_ * n_);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = i; j < n_; ++j) {
                    const double k = rbf_kernel(x_.row(i), x_.row(j), x_.cols, gamma_);
                    dense_[i * n_ + j] = k;
                    dense_[j * n_ + i] = k;
                }
        } else {
            rows_.resize(n_);
        }
    }

    const double* row(std::size_t i) {
        if (full_) return dense_.data() + i * n_;
        auto& r = rows_[i];
        if (r.empty()) {
            if (cached_rows_ * n_ * 8 > kCacheBytes) {
                // drop everything; SMO revisits a small active set, so this
                // is rare and correctness does not depend on it
                for (auto& v : rows_) {
                    std::vector<double>().swap(v);
                }
                cached_rows_ = 0;
            }
            r.resize(n_);
            for (std::size_t j = 0; j < n_; ++j)
                r[j] = rbf_kernel(x_.row(i), x_.row(j), x_.cols, gamma_);
            ++cached_rows_;
        }
        return r.data();
    }

private:
    static constexpr std::size_t kCacheBytes = 512ull << 20;

    const Matrix& x_;
    double gamma_;
    std::size_t n_;
    bool full_ = false;
    std::vector<double> dense_;
    std::vector<std::vector<double>> rows_;
    std::size_t cached_rows_ = 0;
};

}  // namespace

SmoSolution smo_train(const Matrix& x, const std::vector<int>& y, double c, double gamma,
                      double kkt_tol, long long max_iter) {
    const std::size_t n = x.rows;
    if (n == 0) throw DataError("svm: empty training set");
    if (!(c > 0.0) || !(gamma > 0.0)) throw ConfigError("svm: C and gamma must be positive");
    if (max_iter <= 0)
        max_iter = std::max<long long>(2'000'000, 1000 * static_cast<long long>(n));

    KernelCache cache(x, gamma);
    std::vector<double> alpha(n, 0.0);
    std::vector<double> grad(n, -1.0);  // d/dalpha of 1/2 a'Qa - e'a at a = 0
    std::vector<double> diag(n);
    for (std::size_t t = 0; t < n; ++t) diag[t] = rbf_kernel(x.row(t), x.row(t), x.cols, gamma);

    auto in_up = [&](std::size_t t) {
        return (y[t] > 0 && alpha[t] < c) || (y[t] < 0 && alpha[t] > 0.0);
    };
    auto in_low = [&](std::size_t t) {
        return (y[t] > 0 && alpha[t] > 0.0) || (y[t] < 0 && alpha[t] < c);
    };

    SmoSolution sol;
    double gap = std::numeric_limits<double>::infinity();
    for (long long iter = 0; iter < max_iter; ++iter) {
        // second-order working-set selection: the worst violator paired with
        // the candidate promising the largest dual gain
        double m_up = -std::numeric_limits<double>::infinity();
        double m_low = std::numeric_limits<double>::infinity();
        std::size_t i = n;
        for (std::size_t t = 0; t < n; ++t) {
            const double v = -static_cast<double>(y[t]) * grad[t];
            if (in_up(t) && v > m_up) {
                m_up = v;
                i = t;
            }
            if (in_low(t)) m_low = std::min(m_low, v);
        }
        gap = m_up - m_low;
        sol.iterations = iter;
        if (gap <= kkt_tol || i == n) break;

        const double* k_i = cache.row(i);
        std::size_t j = n;
        double best_gain = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            if (!in_low(t)) continue;
            const double diff = m_up + static_cast<double>(y[t]) * grad[t];  // m_up - (-y g)
            if (diff <= 0.0) continue;
            const double a_t = std::max(diag[i] + diag[t] - 2.0 * k_i[t], 1e-12);
            const double gain = diff * diff / a_t;
            if (gain > best_gain) {
                best_gain = gain;
                j = t;
            }
        }
        if (j == n) break;

        const double* k_j = cache.row(j);
        const double eta = std::max(k_i[i] + k_j[j] - 2.0 * k_i[j], 1e-12);

        // Platt's two-variable solve on (i, j); E_i - E_j = y_i g_i - y_j g_j
        const double e_diff =
            static_cast<double>(y[i]) * grad[i] - static_cast<double>(y[j]) * grad[j];
        const double a_j_old = alpha[j];
        const double a_i_old = alpha[i];
        double lo, hi;
        if (y[i] != y[j]) {
            lo = std::max(0.0, a_j_old - a_i_old);
            hi = std::min(c, c + a_j_old - a_i_old);
        } else {
            lo = std::max(0.0, a_i_old + a_j_old - c);
            hi = std::min(c, a_i_old + a_j_old);
        }
        double a_j = a_j_old + static_cast<double>(y[j]) * e_diff / eta;
        a_j = std::clamp(a_j, lo, hi);
        // keep the pair on the equality constraint, then snap rounding
        // residue back into the box so bound membership stays exact
        double a_i = a_i_old + static_cast<double>(y[i] * y[j]) * (a_j_old - a_j);
        a_i = std::clamp(a_i, 0.0, c);
        if (a_j < 1e-12 * c) a_j = 0.0;
        if (a_j > c * (1.0 - 1e-12)) a_j = c;
        if (a_i < 1e-12 * c) a_i = 0.0;
        if (a_i > c * (1.0 - 1e-12)) a_i = c;

        const double d_i = a_i - a_i_old;
        const double d_j = a_j - a_j_old;
        if (d_i == 0.0 && d_j == 0.0) break;  // numerically exhausted pair
        alpha[i] = a_i;
        alpha[j] = a_j;
        for (std::size_t t = 0; t < n; ++t)
            grad[t] += static_cast<double>(y[t]) *
                       (static_cast<double>(y[i]) * k_i[t] * d_i +
                        static_cast<double>(y[j]) * k_j[t] * d_j);
    }
    sol.kkt_gap = gap;
    if (gap > kkt_tol && sol.iterations + 1 >= max_iter)
        throw ConvergenceError("svm: SMO hit the iteration cap with KKT gap " +
                                   std::to_string(gap),
                               gap);

    // bias from free support vectors, else from the violating-pair midpoint
    double sum = 0.0;
    int free_count = 0;
    for (std::size_t t = 0; t < n; ++t) {
        if (alpha[t] > 1e-10 && alpha[t] < c - 1e-10) {
            sum += -static_cast<double>(y[t]) * grad[t];
            ++free_count;
        }
    }
    if (free_count > 0) {
        sol.bias = sum / free_count;
    } else {
        double m_up = -std::numeric_limits<double>::infinity();
        double m_low = std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < n; ++t) {
            const double v = -static_cast<double>(y[t]) * grad[t];
            if (in_up(t)) m_up = std::max(m_up, v);
            if (in_low(t)) m_low = std::min(m_low, v);
        }
        sol.bias = 0.5 * (m_up + m_low);
    }
    sol.alpha = std::move(alpha);
    return sol;
}

double BinarySvm::decision(const double* row, double gamma) const {
    double f = bias;
    for (std::size_t i = 0; i < support_x.rows; ++i)
        f += dual_coef[i] * rbf_kernel(support_x.row(i), row, support_x.cols, gamma);
    return f;
}

void SvmModel::fit(const Matrix& x, const std::vector<int>& y, std::size_t classes,
                   const SvmParams& p) {
    if (x.rows == 0) throw DataError("svm: empty training set");
    params = p;
    n_classes = classes;
    scaler = Standardizer{};
    scaler.fit(x);
    const Matrix xs = scaler.transform(x);

    std::vector<std::vector<int>> rows_of(classes);
    for (std::size_t i = 0; i < y.size(); ++i)
        rows_of[static_cast<std::size_t>(y[i])].push_back(static_cast<int>(i));

    machines.clear();
    for (std::size_t a = 0; a < classes; ++a) {
        for (std::size_t b = a + 1; b < classes; ++b) {
            if (rows_of[a].empty() || rows_of[b].empty()) continue;
            const std::size_t m = rows_of[a].size() + rows_of[b].size();
            Matrix px(m, xs.cols);
            std::vector<int> py(m);
            std::size_t w = 0;
            for (int r : rows_of[a]) {
                std::copy(xs.row(static_cast<std::size_t>(r)),
                          xs.row(static_cast<std::size_t>(r)) + xs.cols, px.row(w));
                py[w++] = +1;
            }
            for (int r : rows_of[b]) {
                std::copy(xs.row(static_cast<std::size_t>(r)),
                          xs.row(static_cast<std::size_t>(r)) + xs.cols, px.row(w));
                py[w++] = -1;
            }
            SmoSolution sol = smo_train(px, py, params.c, params.gamma, params.kkt_tol,
                                        params.max_iter);
            BinarySvm machine;
            machine.class_pos = static_cast<int>(a);
            machine.class_neg = static_cast<int>(b);
            machine.bias = sol.bias;
            std::size_t n_sv = 0;
            for (double v : sol.alpha) n_sv += (v > 1e-10);
            machine.support_x = Matrix(n_sv, xs.cols);
            machine.dual_coef.reserve(n_sv);
            std::size_t sv = 0;
            for (std::size_t i = 0; i < m; ++i) {
                if (sol.alpha[i] <= 1e-10) continue;
                std::copy(px.row(i), px.row(i) + px.cols, machine.support_x.row(sv++));
                machine.dual_coef.push_back(sol.alpha[i] * py[i]);
            }
            machines.push_back(std::move(machine));
        }
    }
}

int SvmModel::predict_row(const double* raw_row) const {
    std::vector<double> q(scaler.mean.size());
    scaler.transform_row(raw_row, q.data(), q.size());
    std::vector<int> votes(n_classes, 0);
    for (const BinarySvm& m : machines) {
        const double f = m.decision(q.data(), params.gamma);
        ++votes[static_cast<std::size_t>(f >= 0.0 ? m.class_pos : m.class_neg)];
    }
    int best = 0;
    for (std::size_t c = 1; c < votes.size(); ++c)
        if (votes[c] > votes[best]) best = static_cast<int>(c);
    return best;
}

std::vector<int> SvmModel::predict(const Matrix& x) const {
    std::vector<int> out(x.rows);
    for (std::size_t i = 0; i < x.rows; ++i) out[i] = predict_row(x.row(i));
    return out;
}

}  // namespace boilerfdd::ml
