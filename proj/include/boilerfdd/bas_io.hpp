#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace boilerfdd {

// One BAS point export; timestamps are epoch seconds, strictly increasing.
// Samples whose value field is empty or non-finite are dropped at parse time
// and counted in `missing`.
struct TimeSeries {
    std::string name;
    std::vector<std::pair<std::int64_t, double>> samples;
    int missing = 0;

    void validate() const;
};

// Centered median filter; edge windows shrink symmetrically so length and
// timestamps are preserved. Window must be odd and no longer than the series.
TimeSeries median_filter(const TimeSeries& series, int window);

// "YYYY-MM-DDTHH:MM:SS" with optional trailing 'Z'; a space separator is
// accepted too. Fractional seconds are truncated.
std::int64_t parse_iso8601(const std::string& text);
std::string format_iso8601(std::int64_t epoch_seconds);

// timestamp,value CSV for one point
TimeSeries read_series_csv(const std::filesystem::path& file, const std::string& name = "");
void write_series_csv(const TimeSeries& series, const std::filesystem::path& file);

// timestamp,<point>,<point>,... CSV holding several points at once
std::vector<TimeSeries> read_wide_csv(const std::filesystem::path& file);

// JSON object mapping BAS point names to the seven canonical feature names.
using PointMap = std::map<std::string, std::string>;
PointMap load_point_map(const std::filesystem::path& file);

struct FeatureRows {
    std::vector<std::string> feature_names;
    std::vector<std::int64_t> timestamps;
    std::vector<std::vector<double>> rows;
};

// Aligns the mapped series onto a shared clock (last observation carried
// forward) and emits rows in the dataset feature schema, label-less.
FeatureRows to_feature_rows(const PointMap& map, const std::vector<TimeSeries>& series,
                            std::int64_t interval_seconds);

void write_feature_rows_csv(const FeatureRows& rows, const std::filesystem::path& file);

}  // namespace boilerfdd
