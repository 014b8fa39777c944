#pragma once

#include <filesystem>
#include <string>

#include "boilerfdd/boiler.hpp"
#include "boilerfdd/calibration.hpp"

namespace boilerfdd {

// Boiler-spec JSON document: BoilerSpec fields plus the rated point, the
// manufacturer validation points, and (once calibrated) a "calibration" key.
BoilerSpec load_boiler_spec(const std::filesystem::path& file);
BoilerSpec boiler_spec_from_json_text(const std::string& text);

std::string boiler_spec_to_json_text(const BoilerSpec& spec,
                                     const CalibrationReport* report = nullptr);
void save_boiler_spec(const BoilerSpec& spec, const std::filesystem::path& file,
                      const CalibrationReport* report = nullptr);

}  // namespace boilerfdd
