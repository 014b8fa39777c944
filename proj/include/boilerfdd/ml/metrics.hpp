#pragma once

#include <string>
#include <vector>

#include "boilerfdd/ml/classifier.hpp"

namespace boilerfdd::ml {

struct EvalReport {
    double accuracy = 0.0;
    std::vector<double> precision;  // per class, column-based; 0 when column empty
    std::vector<double> recall;     // per class, row-based
    double macro_precision = 0.0;
    double macro_recall = 0.0;
    std::vector<std::vector<long long>> confusion;  // rows = true, cols = predicted
    std::vector<std::string> classes;               // model class ordering
    ParamSet best_params;                           // filled by study / training drivers

    std::string text_table() const;
    std::string confusion_csv() const;
};

// Confusion matrix in the model's class order; test labels must all be
// known to the model (EvaluationError otherwise).
EvalReport evaluate(const TrainedModel& model, const Table& test);

// Metrics from an externally produced confusion matrix; shared by evaluate
// and by tests that build matrices by hand.
EvalReport report_from_confusion(std::vector<std::vector<long long>> confusion,
                                 std::vector<std::string> classes);

}  // namespace boilerfdd::ml
