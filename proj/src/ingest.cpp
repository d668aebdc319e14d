#include "mprobust/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

namespace mprobust {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

[[noreturn]] void fail_row(const std::filesystem::path& file, std::size_t line_no,
                           const std::string& why) {
    throw std::invalid_argument(file.string() + ":" + std::to_string(line_no) + ": " + why);
}

double parse_double_field(const std::string& text, const std::filesystem::path& file,
                          std::size_t line_no) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        fail_row(file, line_no, "expected a number, got '" + text + "'");
    }
    return value;
}

std::int64_t parse_int_field(const std::string& text, const std::filesystem::path& file,
                             std::size_t line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        fail_row(file, line_no, "expected an integer, got '" + text + "'");
    }
    return value;
}

// Strips a UTF-8 BOM and a trailing CR so files from other tools read cleanly.
void tidy_line(std::string& line, bool first) {
    if (first && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        line.erase(0, 3);
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

std::ifstream open_or_throw(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw std::invalid_argument("cannot open " + file.string());
    }
    return in;
}

void expect_header(const std::filesystem::path& file, std::ifstream& in,
                   const std::string& expected) {
    std::string line;
    if (!std::getline(in, line)) {
        fail_row(file, 1, "missing header row, expected '" + expected + "'");
    }
    tidy_line(line, true);
    if (line != expected) {
        fail_row(file, 1, "unexpected header '" + line + "', expected '" + expected + "'");
    }
}

// Howard Hinnant's days-from-civil; valid over the full proleptic Gregorian
// range we care about.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    unsigned yoe = static_cast<unsigned>(y - era * 400);
    unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

} // namespace

double amag(double ax, double ay, double az) {
    if (!std::isfinite(ax) || !std::isfinite(ay) || !std::isfinite(az)) {
        throw std::invalid_argument("acceleration components must be finite");
    }
    return std::sqrt(ax * ax + ay * ay + az * az);
}

ResampleResult resample_mean(std::span<const TimedValue> samples, std::int64_t interval_ms,
                             std::string name) {
    if (interval_ms <= 0) {
        throw std::invalid_argument("resampling interval must be positive");
    }
    if (samples.empty()) {
        throw std::invalid_argument("cannot resample an empty sample stream");
    }
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i].timestamp_ms < samples[i - 1].timestamp_ms) {
            throw std::invalid_argument("samples must be sorted by timestamp (violation at row " +
                                        std::to_string(i) + ")");
        }
    }

    std::vector<double> values;
    std::size_t empty_buckets = 0;
    std::int64_t bucket = floor_div(samples[0].timestamp_ms, interval_ms);
    double acc = 0.0;
    std::size_t count = 0;
    auto flush = [&] {
        values.push_back(acc / static_cast<double>(count));
        acc = 0.0;
        count = 0;
    };
    for (const TimedValue& s : samples) {
        std::int64_t sample_bucket = floor_div(s.timestamp_ms, interval_ms);
        if (sample_bucket != bucket) {
            flush();
            empty_buckets += static_cast<std::size_t>(sample_bucket - bucket - 1);
            bucket = sample_bucket;
        }
        acc += s.value;
        ++count;
    }
    flush();
    return ResampleResult{TimeSeries(std::move(values), std::move(name)), empty_buckets};
}

TimeSeries bigram_gaps(std::span<const KeystrokeEvent> events, const Bigram& target,
                       std::int64_t max_gap_ms, std::string name) {
    std::vector<double> gaps;
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
        if (events[i + 1].timestamp_ms < events[i].timestamp_ms) {
            throw std::invalid_argument("keystroke timestamps must be non-decreasing (row " +
                                        std::to_string(i + 1) + ")");
        }
        if (events[i].key_token != target.first || events[i + 1].key_token != target.second) {
            continue;
        }
        std::int64_t gap = events[i + 1].timestamp_ms - events[i].timestamp_ms;
        if (gap > 0 && gap <= max_gap_ms) {
            gaps.push_back(static_cast<double>(gap));
        }
    }
    return TimeSeries(std::move(gaps), std::move(name));
}

Bigram most_frequent_bigram(std::span<const KeystrokeEvent> events, std::int64_t max_gap_ms) {
    std::map<Bigram, std::size_t> counts;
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
        std::int64_t gap = events[i + 1].timestamp_ms - events[i].timestamp_ms;
        if (gap > 0 && gap <= max_gap_ms) {
            ++counts[{events[i].key_token, events[i + 1].key_token}];
        }
    }
    if (counts.empty()) {
        throw std::invalid_argument("no bigram occurs within the gap threshold");
    }
    // map iteration is ordered, so the first maximum is the smallest pair.
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it) {
        if (it->second > best->second) {
            best = it;
        }
    }
    return best->first;
}

TimeSeries traffic_hourly_sum(std::span<const TrafficReading> readings, std::string name) {
    if (readings.empty()) {
        throw std::invalid_argument("no traffic readings to aggregate");
    }
    std::map<std::int64_t, double> totals;
    for (const TrafficReading& r : readings) {
        if (r.count < 0) {
            throw std::invalid_argument("traffic counts must be nonnegative");
        }
        totals[r.epoch_hour] += static_cast<double>(r.count);
    }
    std::vector<double> values;
    values.reserve(totals.size());
    for (const auto& [hour, total] : totals) {
        values.push_back(total);
    }
    return TimeSeries(std::move(values), std::move(name));
}

std::int64_t parse_iso_hour(const std::string& text) {
    // "YYYY-MM-DD" then 'T' or ' ' then "HH"; anything after the hour (minutes,
    // seconds, a 'Z') is accepted and ignored.
    auto bad = [&]() -> std::int64_t {
        throw std::invalid_argument("cannot parse ISO-8601 hour from '" + text + "'");
    };
    if (text.size() < 13 || text[4] != '-' || text[7] != '-' ||
        (text[10] != 'T' && text[10] != ' ')) {
        return bad();
    }
    auto num = [&](std::size_t pos, std::size_t len) -> std::int64_t {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + pos + len, value);
        if (ec != std::errc{} || ptr != text.data() + pos + len) {
            bad();
        }
        return value;
    };
    std::int64_t year = num(0, 4);
    std::int64_t month = num(5, 2);
    std::int64_t day = num(8, 2);
    std::int64_t hour = num(11, 2);
    if (month < 1 || month > 12 || day < 1 || day > 31 || hour < 0 || hour > 23) {
        return bad();
    }
    return days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day)) * 24 +
           hour;
}

std::vector<KeystrokeEvent> read_keystrokes_csv(const std::filesystem::path& file) {
    std::ifstream in = open_or_throw(file);
    expect_header(file, in, "timestamp_ms,key_token");
    std::vector<KeystrokeEvent> events;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        tidy_line(line, false);
        if (line.empty()) {
            continue;
        }
        auto fields = split_fields(line);
        if (fields.size() != 2) {
            fail_row(file, line_no, "expected 2 fields, got " + std::to_string(fields.size()));
        }
        events.push_back({parse_int_field(fields[0], file, line_no), fields[1]});
    }
    return events;
}

std::vector<AccelSample> read_accel_csv(const std::filesystem::path& file) {
    std::ifstream in = open_or_throw(file);
    expect_header(file, in, "timestamp_ms,ax,ay,az");
    std::vector<AccelSample> samples;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        tidy_line(line, false);
        if (line.empty()) {
            continue;
        }
        auto fields = split_fields(line);
        if (fields.size() != 4) {
            fail_row(file, line_no, "expected 4 fields, got " + std::to_string(fields.size()));
        }
        samples.push_back({parse_int_field(fields[0], file, line_no),
                           parse_double_field(fields[1], file, line_no),
                           parse_double_field(fields[2], file, line_no),
                           parse_double_field(fields[3], file, line_no)});
    }
    return samples;
}

std::vector<TrafficReading> read_traffic_csv(const std::filesystem::path& file) {
    std::ifstream in = open_or_throw(file);
    expect_header(file, in, "hour_iso8601,site_id,count");
    std::vector<TrafficReading> readings;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        tidy_line(line, false);
        if (line.empty()) {
            continue;
        }
        auto fields = split_fields(line);
        if (fields.size() != 3) {
            fail_row(file, line_no, "expected 3 fields, got " + std::to_string(fields.size()));
        }
        TrafficReading r;
        try {
            r.epoch_hour = parse_iso_hour(fields[0]);
        } catch (const std::invalid_argument& e) {
            fail_row(file, line_no, e.what());
        }
        r.site_id = fields[1];
        r.count = parse_int_field(fields[2], file, line_no);
        if (r.count < 0) {
            fail_row(file, line_no, "traffic count must be nonnegative");
        }
        readings.push_back(std::move(r));
    }
    return readings;
}

} // namespace mprobust
