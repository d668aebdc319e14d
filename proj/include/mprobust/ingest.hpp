#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mprobust/time_series.hpp"

namespace mprobust {

struct AccelSample {
    std::int64_t timestamp_ms = 0;
    double ax = 0.0, ay = 0.0, az = 0.0;
};

struct KeystrokeEvent {
    std::int64_t timestamp_ms = 0;
    std::string key_token;
};

struct TrafficReading {
    std::int64_t epoch_hour = 0; // hours since 1970-01-01T00 UTC
    std::string site_id;
    long long count = 0;
};

struct TimedValue {
    std::int64_t timestamp_ms = 0;
    double value = 0.0;
};

/// Orientation-invariant acceleration magnitude sqrt(ax^2 + ay^2 + az^2).
double amag(double ax, double ay, double az);

struct ResampleResult {
    TimeSeries series;
    std::size_t empty_buckets = 0; // gaps: buckets that produced no value
};

/// Mean per non-overlapping interval bucket (buckets anchored at epoch 0,
/// bucket = floor(timestamp / interval)). Empty buckets emit nothing and are
/// counted as gaps. Input must be sorted by timestamp.
ResampleResult resample_mean(std::span<const TimedValue> samples,
                             std::int64_t interval_ms, std::string name = "");

using Bigram = std::pair<std::string, std::string>;

/// Inter-keystroke gaps (ms) of every adjacent event pair matching the bigram,
/// in occurrence order. Gaps outside (0, max_gap_ms] are dropped.
TimeSeries bigram_gaps(std::span<const KeystrokeEvent> events, const Bigram& target,
                       std::int64_t max_gap_ms = 1000, std::string name = "");

/// The most frequent adjacent pair among gaps within (0, max_gap_ms]; ties go
/// to the lexicographically smallest pair. Throws if no pair qualifies.
Bigram most_frequent_bigram(std::span<const KeystrokeEvent> events,
                            std::int64_t max_gap_ms = 1000);

/// Sum of counts over all sites per hour, hours in chronological order.
/// Hours absent from the input emit nothing.
TimeSeries traffic_hourly_sum(std::span<const TrafficReading> readings,
                              std::string name = "");

// CSV readers. All expect a header row; fields are comma-separated, UTF-8,
// unquoted. Malformed rows raise std::invalid_argument naming file and line.
std::vector<KeystrokeEvent> read_keystrokes_csv(const std::filesystem::path& file); // timestamp_ms,key_token
std::vector<AccelSample> read_accel_csv(const std::filesystem::path& file);         // timestamp_ms,ax,ay,az
std::vector<TrafficReading> read_traffic_csv(const std::filesystem::path& file);    // hour_iso8601,site_id,count

/// Parses "YYYY-MM-DD[T ]HH[...]" (UTC) to hours since the epoch.
std::int64_t parse_iso_hour(const std::string& text);

} // namespace mprobust
