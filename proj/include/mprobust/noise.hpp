#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mprobust/time_series.hpp"

namespace mprobust {

enum class NoiseKind {
    duplicated_anomaly,  // a random set of values each repeated k times total
    irrelevant_features, // values drawn from Unif[min(X), max(X)] at random gaps
};

enum class DuplicatePlacement {
    adjacent,   // copies immediately follow the duplicated value
    random_gap, // each copy lands at a uniformly chosen gap of the series
};

struct NoiseSpec {
    NoiseKind kind = NoiseKind::duplicated_anomaly;
    int times = 2;                     // k, duplicates only; k >= 2
    double irrelevant_fraction = 0.05; // p, irrelevant features only; p in (0, 1]
    double anomaly_fraction = 0.05;    // fraction of positions duplicated
    DuplicatePlacement placement = DuplicatePlacement::adjacent;
    std::uint64_t seed = 1;

    /// Short token for filenames, e.g. "dup2" or "irr10".
    std::string file_token() const;
    /// Human-readable row label, e.g. "Duplicated Anomaly x 2".
    std::string label() const;
};

/// Ground truth of one injection: which output positions hold injected values.
struct CorruptionRecord {
    std::vector<std::size_t> inserted_positions; // sorted ascending
    NoiseSpec source;
};

/// Duplicates round(anomaly_fraction * n) randomly chosen values so that each
/// appears k times in the output; length grows to n + s * (k - 1). The
/// original values keep their relative order. Stream consumption: s draws to
/// pick anchors, then (random_gap placement only) one gap draw per copy, in
/// ascending anchor order.
std::pair<TimeSeries, CorruptionRecord> inject_duplicates(
    const TimeSeries& series, int k, double anomaly_fraction, std::uint64_t seed,
    DuplicatePlacement placement = DuplicatePlacement::adjacent);

/// Inserts round(p * n) values drawn from Unif[min(X), max(X)] at gaps chosen
/// uniformly (with replacement) among the n + 1 gaps; original order is
/// preserved. Stream consumption per injected value: one real draw, then one
/// gap draw. Throws degenerate_support_error when min(X) == max(X).
std::pair<TimeSeries, CorruptionRecord> inject_irrelevant(
    const TimeSeries& series, double p, std::uint64_t seed);

/// Dispatches on spec.kind.
std::pair<TimeSeries, CorruptionRecord> apply_noise(const TimeSeries& series,
                                                    const NoiseSpec& spec);

/// floor(x + 0.5); documented so injected counts are reproducible.
std::size_t round_half_up(double x);

} // namespace mprobust
