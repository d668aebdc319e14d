#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "mprobust/time_series.hpp"

namespace mprobust {

/// Subsequence length m. Must be at least 2 (a one-point window has no
/// variance to normalize away) and no longer than the series it is applied to.
struct WindowLength {
    std::size_t m;
    explicit WindowLength(std::size_t length);
};

/// Half-width of the trivial-match band: positions j with |j - i| <= half_width
/// are never admissible neighbors of position i.
struct ExclusionZone {
    std::size_t half_width = 0;

    /// Default policy: half_width = ceil(m / 4).
    static ExclusionZone for_window(WindowLength w);
};

/// Nearest-neighbor distance and index per subsequence position.
struct MatrixProfile {
    std::vector<double> distances;
    std::vector<std::size_t> indices;
    std::size_t window = 0;        // m
    std::size_t source_length = 0; // n; length() == n - m + 1

    std::size_t length() const { return distances.size(); }
};

struct ProfileSummary {
    double mean = 0.0;
    double max = 0.0;
    double min = 0.0;
};

/// Windows with population std below this are treated as flat (zero variance).
inline constexpr double kDegeneracyEpsilon = 1e-12;

/// Sentinel distance for positions disqualified by the exclusion zone.
inline constexpr double kExcludedDistance = std::numeric_limits<double>::infinity();

struct ZNormResult {
    std::vector<double> values;
    bool degenerate = false;
};

/// Shift to mean 0, scale to population std 1. A flat window (std below
/// kDegeneracyEpsilon) maps to all zeros with the degenerate flag set.
ZNormResult z_normalize(std::span<const double> window);

/// Euclidean distance between the z-normalized copies of a and b.
/// Flat-window rule: two flat windows are at distance 0; a flat window is at
/// distance sqrt(m) from any non-flat one. Result is clamped to [0, 2*sqrt(m)].
double znorm_distance(std::span<const double> a, std::span<const double> b);

/// Distances from the query subsequence to every subsequence of the series.
/// Entries inside the exclusion zone of query_index hold kExcludedDistance.
std::vector<double> distance_profile(const TimeSeries& series, std::size_t query_index,
                                     WindowLength window, ExclusionZone zone);

/// Exhaustive double-loop reference: per position, the minimum znorm_distance
/// over all admissible neighbors, ties broken toward the smallest index.
MatrixProfile matrix_profile_naive(const TimeSeries& series, WindowLength window,
                                   ExclusionZone zone);

/// Exact O(n^2) computation via streaming sliding dot products. Output matches
/// matrix_profile_naive up to floating-point noise and is bitwise independent
/// of the worker count.
MatrixProfile matrix_profile_fast(const TimeSeries& series, WindowLength window,
                                  ExclusionZone zone, unsigned jobs = 1);

/// Mean / max / min over the profile distances, ignoring sentinel entries.
ProfileSummary summarize(const MatrixProfile& profile);

} // namespace mprobust
