#include "boilerfdd/ml/metrics.hpp"

#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "boilerfdd/errors.hpp"

namespace boilerfdd::ml {

EvalReport report_from_confusion(std::vector<std::vector<long long>> confusion,
                                 std::vector<std::string> classes) {
    const std::size_t k = classes.size();
    EvalReport r;
    r.classes = std::move(classes);
    r.confusion = std::move(confusion);
    r.precision.assign(k, 0.0);
    r.recall.assign(k, 0.0);

    long long total = 0, diagonal = 0;
    std::vector<long long> row_sum(k, 0), col_sum(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const long long v = r.confusion[i][j];
            total += v;
            row_sum[i] += v;
            col_sum[j] += v;
            if (i == j) diagonal += v;
        }
    if (total == 0) throw EvaluationError("empty confusion matrix");
    r.accuracy = static_cast<double>(diagonal) / static_cast<double>(total);
    for (std::size_t i = 0; i < k; ++i) {
        r.recall[i] = row_sum[i] > 0
                          ? static_cast<double>(r.confusion[i][i]) / static_cast<double>(row_sum[i])
                          : 0.0;
        r.precision[i] = col_sum[i] > 0 ? static_cast<double>(r.confusion[i][i]) /
                                              static_cast<double>(col_sum[i])
                                        : 0.0;
    }
    double p = 0.0, q = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        p += r.precision[i];
        q += r.recall[i];
    }
    r.macro_precision = p / static_cast<double>(k);
    r.macro_recall = q / static_cast<double>(k);
    return r;
}

EvalReport evaluate(const TrainedModel& model, const Table& test) {
    if (test.size() == 0) throw EvaluationError("empty test set");

    std::unordered_map<std::string, int> model_id;
    for (std::size_t i = 0; i < model.classes.size(); ++i)
        model_id.emplace(model.classes[i], static_cast<int>(i));

    std::vector<int> truth(test.size());
    for (std::size_t i = 0; i < test.size(); ++i) {
        const std::string& name = test.classes[static_cast<std::size_t>(test.y[i])];
        const auto it = model_id.find(name);
        if (it == model_id.end())
            throw EvaluationError("test class '" + name + "' was never seen in training");
        truth[i] = it->second;
    }

    const std::vector<int> predicted = model.predict(test.x);
    const std::size_t k = model.classes.size();
    std::vector<std::vector<long long>> confusion(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < test.size(); ++i)
        ++confusion[static_cast<std::size_t>(truth[i])][static_cast<std::size_t>(predicted[i])];
    return report_from_confusion(std::move(confusion), model.classes);
}

std::string EvalReport::text_table() const {
    std::ostringstream out;
    out << std::fixed << std::setprecision(4);
    out << "accuracy:        " << accuracy << "\n";
    out << "macro precision: " << macro_precision << "\n";
    out << "macro recall:    " << macro_recall << "\n\n";
    std::size_t width = 8;
    for (const auto& c : classes) width = std::max(width, c.size() + 2);
    out << std::left << std::setw(static_cast<int>(width)) << "class"
        << std::right << std::setw(11) << "precision" << std::setw(11) << "recall" << "\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        out << std::left << std::setw(static_cast<int>(width)) << classes[i] << std::right
            << std::setw(11) << precision[i] << std::setw(11) << recall[i] << "\n";
    }
    return out.str();
}

std::string EvalReport::confusion_csv() const {
    std::ostringstream out;
    out << "true\\predicted";
    for (const auto& c : classes) out << ',' << c;
    out << '\n';
    for (std::size_t i = 0; i < classes.size(); ++i) {
        out << classes[i];
        for (std::size_t j = 0; j < classes.size(); ++j) out << ',' << confusion[i][j];
        out << '\n';
    }
    return out.str();
}

}  // namespace boilerfdd::ml
