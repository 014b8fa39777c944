#include "boilerfdd/bas_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "boilerfdd/dataset.hpp"
#include "boilerfdd/errors.hpp"

namespace boilerfdd {

void TimeSeries::validate() const {
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i].first <= samples[i - 1].first)
            throw DataError("series '" + name + "' timestamps are not strictly increasing");
    for (const auto& [ts, v] : samples)
        if (!std::isfinite(v))
            throw DataError("series '" + name + "' holds a non-finite value");
}

TimeSeries median_filter(const TimeSeries& series, int window) {
    if (window < 1 || window % 2 == 0)
        throw ConfigError("median filter window must be an odd positive integer");
    const auto n = static_cast<int>(series.samples.size());
    if (window > n) throw ConfigError("median filter window exceeds the series length");

    TimeSeries out = series;
    std::vector<double> scratch;
    const int half = window / 2;
    for (int i = 0; i < n; ++i) {
        const int reach = std::min({half, i, n - 1 - i});
        scratch.clear();
        for (int j = i - reach; j <= i + reach; ++j)
            scratch.push_back(series.samples[static_cast<std::size_t>(j)].second);
        auto mid = scratch.begin() + reach;  // window size 2*reach+1 is odd
        std::nth_element(scratch.begin(), mid, scratch.end());
        out.samples[static_cast<std::size_t>(i)].second = *mid;
    }
    return out;
}

namespace {

// days since 1970-01-01 for a civil date (Gregorian)
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

}  // namespace

std::int64_t parse_iso8601(const std::string& text) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
    char sep = 0;
    const int got = std::sscanf(text.c_str(), "%4d-%2d-%2d%c%2d:%2d:%2d", &y, &mo, &d, &sep,
                                &h, &mi, &s);
    if (got < 7 || (sep != 'T' && sep != ' '))
        throw DataError("cannot parse timestamp '" + text + "' (expected ISO-8601)");
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || s > 60)
        throw DataError("timestamp '" + text + "' is out of range");
    return days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + s;
}

std::string format_iso8601(std::int64_t epoch_seconds) {
    std::int64_t days = epoch_seconds / 86400;
    std::int64_t rem = epoch_seconds % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    int y, m, d;
    civil_from_days(days, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", y, m, d,
                  static_cast<int>(rem / 3600), static_cast<int>(rem / 60 % 60),
                  static_cast<int>(rem % 60));
    return buf;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

bool parse_value(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto r = std::from_chars(begin, end, out);
    if (r.ec != std::errc{} || r.ptr != end) return false;
    return std::isfinite(out);
}

std::string trim_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

TimeSeries read_series_csv(const std::filesystem::path& file, const std::string& name) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open series file " + file.string());
    TimeSeries series;
    series.name = name.empty() ? file.stem().string() : name;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        line = trim_cr(line);
        if (line.empty()) continue;
        auto fields = split_line(line);
        if (first && !fields.empty() && fields[0] == "timestamp") {
            first = false;
            continue;
        }
        first = false;
        if (fields.size() != 2)
            throw DataError("series line needs timestamp,value: '" + line + "'");
        const std::int64_t ts = parse_iso8601(fields[0]);
        double v;
        if (!parse_value(fields[1], v)) {
            ++series.missing;
            continue;
        }
        series.samples.emplace_back(ts, v);
    }
    series.validate();
    return series;
}

void write_series_csv(const TimeSeries& series, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw DataError("cannot write series file " + file.string());
    out << "timestamp,value\n";
    char buf[32];
    for (const auto& [ts, v] : series.samples) {
        auto r = std::to_chars(buf, buf + sizeof buf, v);
        out << format_iso8601(ts) << ',' << std::string_view(buf, r.ptr - buf) << '\n';
    }
}

std::vector<TimeSeries> read_wide_csv(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open wide CSV " + file.string());
    std::string line;
    if (!std::getline(in, line)) throw DataError("empty wide CSV " + file.string());
    auto header = split_line(trim_cr(line));
    if (header.size() < 2 || header[0] != "timestamp")
        throw DataError("wide CSV header must start with 'timestamp'");

    std::vector<TimeSeries> series(header.size() - 1);
    for (std::size_t i = 1; i < header.size(); ++i) series[i - 1].name = header[i];

    while (std::getline(in, line)) {
        line = trim_cr(line);
        if (line.empty()) continue;
        auto fields = split_line(line);
        if (fields.size() != header.size())
            throw DataError("wide CSV row width mismatch: '" + line + "'");
        const std::int64_t ts = parse_iso8601(fields[0]);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            double v;
            if (parse_value(fields[i], v))
                series[i - 1].samples.emplace_back(ts, v);
            else
                ++series[i - 1].missing;
        }
    }
    for (auto& s : series) s.validate();
    return series;
}

PointMap load_point_map(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open point map " + file.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError(std::string("point map JSON parse error: ") + e.what());
    }
    PointMap map;
    for (const auto& [bas_name, canonical] : j.items())
        map[bas_name] = canonical.get<std::string>();
    return map;
}

FeatureRows to_feature_rows(const PointMap& map, const std::vector<TimeSeries>& series,
                            std::int64_t interval_seconds) {
    if (interval_seconds <= 0) throw ConfigError("sampling interval must be positive");
    const auto& canonical = canonical_feature_names();

    // canonical feature -> series
    std::map<std::string, const TimeSeries*> by_feature;
    for (const TimeSeries& s : series) {
        const auto it = map.find(s.name);
        if (it == map.end()) continue;
        by_feature[it->second] = &s;
    }
    for (const auto& name : canonical)
        if (!by_feature.count(name))
            throw ConfigError("no mapped series for canonical point '" + name + "'");

    std::int64_t start = std::numeric_limits<std::int64_t>::min();
    std::int64_t stop = std::numeric_limits<std::int64_t>::max();
    for (const auto& name : canonical) {
        const TimeSeries* s = by_feature[name];
        if (s->samples.empty()) throw DataError("series '" + s->name + "' is empty");
        start = std::max(start, s->samples.front().first);
        stop = std::min(stop, s->samples.back().first);
    }
    if (start > stop) throw DataError("mapped series have no overlapping time window");

    FeatureRows out;
    out.feature_names.assign(canonical.begin(), canonical.end());
    std::vector<std::size_t> cursor(canonical.size(), 0);
    for (std::int64_t t = start; t <= stop; t += interval_seconds) {
        std::vector<double> row(canonical.size());
        for (std::size_t f = 0; f < canonical.size(); ++f) {
            const auto& samples = by_feature[canonical[f]]->samples;
            auto& c = cursor[f];
            while (c + 1 < samples.size() && samples[c + 1].first <= t) ++c;
            row[f] = samples[c].second;  // last observation carried forward
        }
        out.timestamps.push_back(t);
        out.rows.push_back(std::move(row));
    }
    validate_feature_schema(out.feature_names);
    return out;
}

void write_feature_rows_csv(const FeatureRows& rows, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw DataError("cannot write feature rows " + file.string());
    out << "timestamp";
    for (const auto& name : rows.feature_names) out << ',' << name;
    out << '\n';
    char buf[32];
    for (std::size_t i = 0; i < rows.rows.size(); ++i) {
        out << format_iso8601(rows.timestamps[i]);
        for (double v : rows.rows[i]) {
            auto r = std::to_chars(buf, buf + sizeof buf, v);
            out << ',' << std::string_view(buf, r.ptr - buf);
        }
        out << '\n';
    }
}

}  // namespace boilerfdd
