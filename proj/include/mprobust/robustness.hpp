#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mprobust/dtw.hpp"
#include "mprobust/matrix_profile.hpp"
#include "mprobust/noise.hpp"

namespace mprobust {

/// One (dataset, noise setting, seed) comparison between the clean-data
/// profile and a noisy-data profile.
struct RobustnessReport {
    std::string dataset;
    std::string noise_label;
    std::uint64_t seed = 0;
    double sum_abs_diffs = 0.0;            // DTW-matched sum of |differences|
    double normalized_dissimilarity = 0.0; // sum / original length / original max
    ProfileSummary original_summary;
    ProfileSummary noisy_summary;
    std::size_t original_mp_length = 0;
    std::size_t noisy_mp_length = 0;
};

/// Report plus the alignment that produced it (kept for plot emission).
struct ComparisonDetail {
    RobustnessReport report;
    WarpingResult warp;
};

/// Aligns the two distance vectors with fastdtw and normalizes the summed
/// absolute differences by the original profile's length and maximum. Throws
/// normalization_undefined_error (carrying the raw sum) when the original
/// profile is all zero.
RobustnessReport compare_profiles(const MatrixProfile& original,
                                  const MatrixProfile& noisy, Radius radius);

ComparisonDetail compare_profiles_detail(const MatrixProfile& original,
                                         const MatrixProfile& noisy, Radius radius);

/// The standard ten-point corruption grid: duplicates x2..x6 at a 5% anomaly
/// fraction, then irrelevant features at 1/5/10/25/50%.
std::vector<NoiseSpec> default_noise_grid();

struct GridOptions {
    std::vector<std::uint64_t> seeds;
    Radius radius = Radius{};
    unsigned jobs = 1;
    DuplicatePlacement placement = DuplicatePlacement::adjacent;
    std::vector<NoiseSpec> grid; // empty -> default_noise_grid()
    bool keep_first_seed_detail = false;
};

/// Per-grid-point statistics over seeds.
struct GridAggregate {
    std::string noise_label;
    double mean_sum_abs_diffs = 0.0;
    double mean_dissimilarity = 0.0;
    double stddev_dissimilarity = 0.0; // sample std over seeds, 0 if < 2 seeds
    ProfileSummary mean_noisy_summary;
};

/// Alignment data retained for the first seed of one grid point.
struct AlignmentDetail {
    std::string noise_label;
    std::uint64_t seed = 0;
    WarpingResult warp;
    std::vector<double> noisy_distances;
};

struct GridResult {
    MatrixProfile original;
    ProfileSummary original_summary;
    RobustnessReport control;          // original vs. itself; exactly zero
    std::vector<RobustnessReport> runs; // grid-major, then seed order
    std::vector<GridAggregate> aggregates;
    std::vector<AlignmentDetail> first_seed_details; // when requested
};

/// Computes the clean profile once, then for every (grid point, seed) injects
/// noise, recomputes the profile at the same window and zone, and compares.
/// Jobs are independent and run on a bounded worker pool; the result is
/// independent of the worker count.
GridResult run_grid(const TimeSeries& series, WindowLength window, ExclusionZone zone,
                    const GridOptions& options);

} // namespace mprobust
