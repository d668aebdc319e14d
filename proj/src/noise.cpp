#include "mprobust/noise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "mprobust/errors.hpp"
#include "mprobust/rng.hpp"

namespace mprobust {

namespace {

std::string percent_token(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", p * 100.0);
    return buf;
}

// Inserted values tagged with the gap they land in and their draw order.
struct GapInsert {
    std::size_t gap = 0;
    std::size_t order = 0;
    double value = 0.0;
};

// Merges gap-addressed insertions into the series, preserving original order
// and draw order within a gap. Returns the output positions of the inserts.
std::pair<std::vector<double>, std::vector<std::size_t>> merge_gap_inserts(
    const std::vector<double>& original, std::vector<GapInsert> inserts) {
    std::stable_sort(inserts.begin(), inserts.end(),
                     [](const GapInsert& a, const GapInsert& b) {
                         if (a.gap != b.gap) {
                             return a.gap < b.gap;
                         }
                         return a.order < b.order;
                     });
    std::vector<double> out;
    out.reserve(original.size() + inserts.size());
    std::vector<std::size_t> positions;
    positions.reserve(inserts.size());

    std::size_t next = 0;
    for (std::size_t gap = 0; gap <= original.size(); ++gap) {
        while (next < inserts.size() && inserts[next].gap == gap) {
            positions.push_back(out.size());
            out.push_back(inserts[next].value);
            ++next;
        }
        if (gap < original.size()) {
            out.push_back(original[gap]);
        }
    }
    return {std::move(out), std::move(positions)};
}

} // namespace

std::size_t round_half_up(double x) {
    return static_cast<std::size_t>(std::floor(x + 0.5));
}

std::string NoiseSpec::file_token() const {
    if (kind == NoiseKind::duplicated_anomaly) {
        return "dup" + std::to_string(times);
    }
    return "irr" + percent_token(irrelevant_fraction);
}

std::string NoiseSpec::label() const {
    if (kind == NoiseKind::duplicated_anomaly) {
        return "Duplicated Anomaly x " + std::to_string(times);
    }
    return "Irrelevant Features - " + percent_token(irrelevant_fraction) + "%";
}

std::pair<TimeSeries, CorruptionRecord> inject_duplicates(const TimeSeries& series, int k,
                                                          double anomaly_fraction,
                                                          std::uint64_t seed,
                                                          DuplicatePlacement placement) {
    if (k < 2) {
        throw std::invalid_argument("duplicate multiplier k must be at least 2");
    }
    if (!(anomaly_fraction > 0.0 && anomaly_fraction <= 1.0)) {
        throw std::invalid_argument("anomaly fraction must lie in (0, 1]");
    }
    std::size_t n = series.size();
    std::size_t selected = round_half_up(anomaly_fraction * static_cast<double>(n));
    if (selected == 0) {
        throw std::invalid_argument(
            "anomaly fraction selects no positions on a series of length " +
            std::to_string(n) + "; use a longer series or a larger fraction");
    }

    RandomStream rng(seed);
    std::vector<std::size_t> anchors = sample_without_replacement(rng, n, selected);
    std::size_t copies = static_cast<std::size_t>(k - 1);

    NoiseSpec spec;
    spec.kind = NoiseKind::duplicated_anomaly;
    spec.times = k;
    spec.anomaly_fraction = anomaly_fraction;
    spec.placement = placement;
    spec.seed = seed;

    CorruptionRecord record;
    record.source = spec;

    std::vector<double> out;
    if (placement == DuplicatePlacement::adjacent) {
        out.reserve(n + selected * copies);
        std::size_t next_anchor = 0;
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(series.values[i]);
            if (next_anchor < anchors.size() && anchors[next_anchor] == i) {
                for (std::size_t c = 0; c < copies; ++c) {
                    record.inserted_positions.push_back(out.size());
                    out.push_back(series.values[i]);
                }
                ++next_anchor;
            }
        }
    } else {
        std::vector<GapInsert> inserts;
        inserts.reserve(selected * copies);
        std::size_t order = 0;
        for (std::size_t a : anchors) {
            for (std::size_t c = 0; c < copies; ++c) {
                inserts.push_back({rng.next_index(n + 1), order++, series.values[a]});
            }
        }
        auto [merged, positions] = merge_gap_inserts(series.values, std::move(inserts));
        out = std::move(merged);
        record.inserted_positions = std::move(positions);
    }

    return {TimeSeries(std::move(out), series.name + "+" + spec.file_token()),
            std::move(record)};
}

std::pair<TimeSeries, CorruptionRecord> inject_irrelevant(const TimeSeries& series, double p,
                                                          std::uint64_t seed) {
    if (!(p > 0.0 && p <= 1.0)) {
        throw std::invalid_argument("irrelevant-feature fraction must lie in (0, 1]");
    }
    std::size_t n = series.size();
    if (n < 2) {
        throw std::invalid_argument("irrelevant-feature injection needs at least 2 values");
    }
    auto [lo_it, hi_it] = std::minmax_element(series.values.begin(), series.values.end());
    double lo = *lo_it;
    double hi = *hi_it;
    if (lo == hi) {
        throw degenerate_support_error(
            "series is constant; uniform support [min, max] is a single point and "
            "injected values would be indistinguishable from data");
    }

    std::size_t count = round_half_up(p * static_cast<double>(n));

    NoiseSpec spec;
    spec.kind = NoiseKind::irrelevant_features;
    spec.irrelevant_fraction = p;
    spec.seed = seed;

    RandomStream rng(seed);
    std::vector<GapInsert> inserts;
    inserts.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        double value = rng.next_real(lo, hi);
        std::size_t gap = rng.next_index(n + 1);
        inserts.push_back({gap, t, value});
    }

    auto [merged, positions] = merge_gap_inserts(series.values, std::move(inserts));

    CorruptionRecord record;
    record.source = spec;
    record.inserted_positions = std::move(positions);

    return {TimeSeries(std::move(merged), series.name + "+" + spec.file_token()),
            std::move(record)};
}

std::pair<TimeSeries, CorruptionRecord> apply_noise(const TimeSeries& series,
                                                    const NoiseSpec& spec) {
    if (spec.kind == NoiseKind::duplicated_anomaly) {
        return inject_duplicates(series, spec.times, spec.anomaly_fraction, spec.seed,
                                 spec.placement);
    }
    return inject_irrelevant(series, spec.irrelevant_fraction, spec.seed);
}

} // namespace mprobust
