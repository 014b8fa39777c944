#pragma once

#include <filesystem>
#include <string>

#include "boilerfdd/ml/classifier.hpp"
#include "boilerfdd/ml/metrics.hpp"

namespace boilerfdd::ml {

// Self-describing JSON artifact: algorithm, params, standardization stats,
// class list and the full model payload (trees / forest / support vectors /
// stored training set for knn).
std::string model_to_json_text(const TrainedModel& model);
void save_model(const TrainedModel& model, const std::filesystem::path& file);
TrainedModel load_model(const std::filesystem::path& file);
TrainedModel model_from_json_text(const std::string& text);

std::string eval_report_to_json_text(const EvalReport& report);

}  // namespace boilerfdd::ml
