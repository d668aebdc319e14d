#include "mprobust/robustness.hpp"

#include <cmath>
#include <stdexcept>

#include "mprobust/errors.hpp"
#include "mprobust/parallel.hpp"

namespace mprobust {

namespace {

RobustnessReport build_report(const MatrixProfile& original, const ProfileSummary& original_summary,
                              const MatrixProfile& noisy, double sum_abs_diffs) {
    if (original_summary.max <= 0.0) {
        throw normalization_undefined_error(
            "original matrix profile is all zero; the normalized dissimilarity divides by "
            "its maximum and is undefined (raw sum of absolute differences: " +
                std::to_string(sum_abs_diffs) + ")",
            sum_abs_diffs);
    }
    RobustnessReport report;
    report.sum_abs_diffs = sum_abs_diffs;
    report.normalized_dissimilarity =
        sum_abs_diffs / static_cast<double>(original.length()) / original_summary.max;
    report.original_summary = original_summary;
    report.noisy_summary = summarize(noisy);
    report.original_mp_length = original.length();
    report.noisy_mp_length = noisy.length();
    return report;
}

} // namespace

ComparisonDetail compare_profiles_detail(const MatrixProfile& original,
                                         const MatrixProfile& noisy, Radius radius) {
    if (original.distances.empty() || noisy.distances.empty()) {
        throw std::invalid_argument("cannot compare empty matrix profiles");
    }
    ProfileSummary original_summary = summarize(original);
    WarpingResult warp = fastdtw(original.distances, noisy.distances, radius);
    ComparisonDetail detail;
    detail.report = build_report(original, original_summary, noisy, warp.total_cost);
    detail.warp = std::move(warp);
    return detail;
}

RobustnessReport compare_profiles(const MatrixProfile& original, const MatrixProfile& noisy,
                                  Radius radius) {
    return compare_profiles_detail(original, noisy, radius).report;
}

std::vector<NoiseSpec> default_noise_grid() {
    std::vector<NoiseSpec> grid;
    for (int k = 2; k <= 6; ++k) {
        NoiseSpec spec;
        spec.kind = NoiseKind::duplicated_anomaly;
        spec.times = k;
        spec.anomaly_fraction = 0.05;
        grid.push_back(spec);
    }
    for (double p : {0.01, 0.05, 0.10, 0.25, 0.50}) {
        NoiseSpec spec;
        spec.kind = NoiseKind::irrelevant_features;
        spec.irrelevant_fraction = p;
        grid.push_back(spec);
    }
    return grid;
}

GridResult run_grid(const TimeSeries& series, WindowLength window, ExclusionZone zone,
                    const GridOptions& options) {
    GridResult result;
    result.original = matrix_profile_fast(series, window, zone, options.jobs);
    result.original_summary = summarize(result.original);

    // Zero-noise control: the full comparison applied to the unmodified data.
    result.control = compare_profiles(result.original, result.original, options.radius);
    result.control.dataset = series.name;
    result.control.noise_label = "Original Matrix Profile";

    const std::vector<NoiseSpec> grid =
        options.grid.empty() ? default_noise_grid() : options.grid;
    const std::vector<std::uint64_t>& seeds = options.seeds;
    if (seeds.empty()) {
        return result;
    }

    std::size_t task_count = grid.size() * seeds.size();
    result.runs.resize(task_count);
    if (options.keep_first_seed_detail) {
        result.first_seed_details.resize(grid.size());
    }

    auto run_one = [&](std::size_t task) {
        std::size_t g = task / seeds.size();
        std::size_t s = task % seeds.size();
        NoiseSpec spec = grid[g];
        spec.seed = seeds[s];
        spec.placement = options.placement;
        try {
            auto [noisy_series, record] = apply_noise(series, spec);
            MatrixProfile noisy = matrix_profile_fast(noisy_series, window, zone, 1);
            ComparisonDetail detail =
                compare_profiles_detail(result.original, noisy, options.radius);
            detail.report.dataset = series.name;
            detail.report.noise_label = spec.label();
            detail.report.seed = spec.seed;
            result.runs[task] = detail.report;
            if (options.keep_first_seed_detail && s == 0) {
                AlignmentDetail& slot = result.first_seed_details[g];
                slot.noise_label = spec.label();
                slot.seed = spec.seed;
                slot.warp = std::move(detail.warp);
                slot.noisy_distances = std::move(noisy.distances);
            }
        } catch (const degenerate_support_error& e) {
            throw degenerate_support_error("grid point '" + spec.label() + "', seed " +
                                           std::to_string(spec.seed) + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("grid point '" + spec.label() + "', seed " +
                                        std::to_string(spec.seed) + ": " + e.what());
        }
    };

    run_tasks(options.jobs, task_count, run_one);

    // Seed-averaged row per grid point.
    result.aggregates.reserve(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
        GridAggregate agg;
        agg.noise_label = grid[g].label();
        double count = static_cast<double>(seeds.size());
        for (std::size_t s = 0; s < seeds.size(); ++s) {
            const RobustnessReport& r = result.runs[g * seeds.size() + s];
            agg.mean_sum_abs_diffs += r.sum_abs_diffs;
            agg.mean_dissimilarity += r.normalized_dissimilarity;
            agg.mean_noisy_summary.mean += r.noisy_summary.mean;
            agg.mean_noisy_summary.max += r.noisy_summary.max;
            agg.mean_noisy_summary.min += r.noisy_summary.min;
        }
        agg.mean_sum_abs_diffs /= count;
        agg.mean_dissimilarity /= count;
        agg.mean_noisy_summary.mean /= count;
        agg.mean_noisy_summary.max /= count;
        agg.mean_noisy_summary.min /= count;
        if (seeds.size() > 1) {
            double acc = 0.0;
            for (std::size_t s = 0; s < seeds.size(); ++s) {
                double d = result.runs[g * seeds.size() + s].normalized_dissimilarity -
                           agg.mean_dissimilarity;
                acc += d * d;
            }
            agg.stddev_dissimilarity = std::sqrt(acc / (count - 1.0));
        }
        result.aggregates.push_back(std::move(agg));
    }
    return result;
}

} // namespace mprobust
