// Acceptance suite: end-to-end checks of the profile kernels, the warping
// oracles, the noise grid and the scale targets. Prints one PASS/FAIL line
// per criterion; exits nonzero if any criterion fails.
//
// Criterion 6 needs the public Dublin SCATS traffic dataset, which is not
// redistributable with this repository; point MPROBUST_TRAFFIC_CSV at a local
// copy (either the aggregated hourly series in the generic `value` schema or
// the `hour_iso8601,site_id,count` schema) to enable it. Without the file the
// criterion reports SKIP.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "mprobust/dtw.hpp"
#include "mprobust/ingest.hpp"
#include "mprobust/io.hpp"
#include "mprobust/matrix_profile.hpp"
#include "mprobust/noise.hpp"
#include "mprobust/rng.hpp"
#include "mprobust/robustness.hpp"
#include "support/synthetic.hpp"

using namespace mprobust;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& details) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << details
              << std::endl;
    if (!ok) {
        ++failures;
    }
}

void report_skip(int criterion, const std::string& details) {
    std::cout << "[SKIP] criterion " << criterion << ": " << details << std::endl;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------- criterion 1

void criterion_1_oracle_equivalence() {
    auto start = Clock::now();
    RandomStream rng(20240601);
    const std::vector<std::size_t> window_choices{4, 8, 20, 60};
    double worst = 0.0;
    std::size_t checked = 0;
    bool ok = true;

    for (int rep = 0; rep < 100 && ok; ++rep) {
        std::size_t n = 50 + rng.next_index(1951); // [50, 2000]
        std::vector<std::size_t> valid;
        for (std::size_t m : window_choices) {
            std::size_t hw = ExclusionZone::for_window(WindowLength(m)).half_width;
            if (n >= m + hw + 1) {
                valid.push_back(m);
            }
        }
        std::size_t m = valid[rng.next_index(valid.size())];
        TimeSeries series = rep % 2 == 0
                                ? synthetic::random_walk(n, rng.next_u64())
                                : synthetic::noisy_sine(n, 20.0 + rng.next_real(0.0, 80.0),
                                                        0.3, rng.next_u64());
        WindowLength w(m);
        ExclusionZone zone = ExclusionZone::for_window(w);
        MatrixProfile naive = matrix_profile_naive(series, w, zone);
        MatrixProfile fast = matrix_profile_fast(series, w, zone, 2);
        for (std::size_t i = 0; i < naive.length(); ++i) {
            double diff = std::abs(naive.distances[i] - fast.distances[i]);
            worst = std::max(worst, diff);
            if (diff > 1e-8) {
                ok = false;
                break;
            }
        }
        checked += naive.length();
    }

    double elapsed = seconds_since(start);
    ok = ok && elapsed < 120.0;
    report(1, ok,
           "fast vs naive on 100 random series, " + std::to_string(checked) +
               " positions, worst |diff| " + format_double(worst) + ", " +
               std::to_string(elapsed) + "s (limit 120s)");
}

// ---------------------------------------------------------------- criterion 2

void enumerate_paths(const std::vector<double>& a, const std::vector<double>& b,
                     std::size_t i, std::size_t j, double cost, double& best) {
    cost += std::abs(a[i] - b[j]);
    if (i + 1 == a.size() && j + 1 == b.size()) {
        best = std::min(best, cost);
        return;
    }
    if (i + 1 < a.size() && j + 1 < b.size()) {
        enumerate_paths(a, b, i + 1, j + 1, cost, best);
    }
    if (i + 1 < a.size()) {
        enumerate_paths(a, b, i + 1, j, cost, best);
    }
    if (j + 1 < b.size()) {
        enumerate_paths(a, b, i, j + 1, cost, best);
    }
}

void criterion_2_dtw_exactness() {
    RandomStream rng(777);
    bool enumeration_ok = true;
    for (int rep = 0; rep < 50 && enumeration_ok; ++rep) {
        std::size_t la = 1 + rng.next_index(12);
        std::size_t lb = 1 + rng.next_index(12);
        std::vector<double> a(la), b(lb);
        for (double& v : a) {
            v = rng.next_real(-5.0, 5.0);
        }
        for (double& v : b) {
            v = rng.next_real(-5.0, 5.0);
        }
        double best = std::numeric_limits<double>::infinity();
        enumerate_paths(a, b, 0, 0, 0.0, best);
        enumeration_ok = dtw_exact(a, b).total_cost == best;
    }

    bool full_radius_ok = true;
    for (int rep = 0; rep < 50 && full_radius_ok; ++rep) {
        std::size_t la = 2 + rng.next_index(999);
        std::size_t lb = 2 + rng.next_index(999);
        std::vector<double> a(la), b(lb);
        for (double& v : a) {
            v = rng.next_real(-5.0, 5.0);
        }
        for (double& v : b) {
            v = rng.next_real(-5.0, 5.0);
        }
        WarpingResult exact = dtw_exact(a, b);
        WarpingResult fast = fastdtw(a, b, Radius(std::max(la, lb)));
        full_radius_ok = fast.total_cost == exact.total_cost && fast.path == exact.path;
    }

    report(2, enumeration_ok && full_radius_ok,
           std::string("exhaustive-enumeration match (50 pairs, len<=12): ") +
               (enumeration_ok ? "exact" : "MISMATCH") +
               "; full-radius fastdtw == dtw_exact (50 pairs, len<=1000): " +
               (full_radius_ok ? "exact" : "MISMATCH"));
}

// ---------------------------------------------------------------- criterion 3

void criterion_3_zero_noise_identity() {
    struct Case {
        TimeSeries series;
        std::size_t m;
    };
    std::vector<Case> cases;
    cases.push_back({synthetic::traffic_surrogate(3600, 7), 24});
    cases.push_back({synthetic::keystroke_surrogate(4000, 11), 20});
    cases.push_back({synthetic::calf_surrogate(4000, 13), 60});

    bool ok = true;
    std::string details;
    for (const Case& c : cases) {
        WindowLength w(c.m);
        ExclusionZone zone = ExclusionZone::for_window(w);
        MatrixProfile original = matrix_profile_fast(c.series, w, zone, 2);
        // No injection: rerun the pipeline on the untouched series.
        MatrixProfile replay = matrix_profile_fast(c.series, w, zone, 2);
        RobustnessReport r = compare_profiles(original, replay, Radius(30));
        bool exact_zero = r.sum_abs_diffs == 0.0 && r.normalized_dissimilarity == 0.0;
        ok = ok && exact_zero;
        details += c.series.name + (exact_zero ? "=0 " : "!=0 ");
    }
    report(3, ok, "zero-noise pipeline identity: " + details);
}

// ---------------------------------------------------------------- criterion 4

GridResult run_standard_grid(const TimeSeries& series, std::size_t m) {
    GridOptions options;
    options.seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    options.radius = Radius(30);
    options.jobs = 2;
    WindowLength w(m);
    return run_grid(series, w, ExclusionZone::for_window(w), options);
}

void criterion_4_monotone_trend() {
    auto start = Clock::now();
    TimeSeries series = synthetic::traffic_surrogate(3600, 7);
    GridResult result = run_standard_grid(series, 24);

    bool dup_monotone = true;
    for (std::size_t g = 1; g < 5; ++g) {
        dup_monotone = dup_monotone && result.aggregates[g].mean_dissimilarity >
                                           result.aggregates[g - 1].mean_dissimilarity;
    }
    bool irr_monotone = true;
    for (std::size_t g = 6; g < 10; ++g) {
        irr_monotone = irr_monotone && result.aggregates[g].mean_dissimilarity >
                                           result.aggregates[g - 1].mean_dissimilarity;
    }

    std::string dup_values, irr_values;
    for (std::size_t g = 0; g < 5; ++g) {
        dup_values += format_double(result.aggregates[g].mean_dissimilarity) + " ";
    }
    for (std::size_t g = 5; g < 10; ++g) {
        irr_values += format_double(result.aggregates[g].mean_dissimilarity) + " ";
    }

    double elapsed = seconds_since(start);
    bool ok = dup_monotone && irr_monotone && elapsed < 300.0;
    report(4, ok,
           "10-seed means rise strictly; x2..x6: " + dup_values + "| 1..50%: " + irr_values +
               "| " + std::to_string(elapsed) + "s (limit 300s)");
}

// ---------------------------------------------------------------- criterion 5

void criterion_5_duplicates_vs_irrelevant() {
    struct Case {
        TimeSeries series;
        std::size_t m;
    };
    std::vector<Case> cases;
    cases.push_back({synthetic::keystroke_surrogate(6000, 11), 20});
    cases.push_back({synthetic::calf_surrogate(8000, 13), 60});
    cases.push_back({synthetic::traffic_surrogate(3600, 7), 24});

    bool ok = true;
    std::string details;
    for (const Case& c : cases) {
        NoiseSpec dup;
        dup.kind = NoiseKind::duplicated_anomaly;
        dup.times = 2;
        dup.anomaly_fraction = 0.05;
        NoiseSpec irr;
        irr.kind = NoiseKind::irrelevant_features;
        irr.irrelevant_fraction = 0.05;

        GridOptions options;
        options.seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        options.radius = Radius(30);
        options.jobs = 2;
        options.grid = {dup, irr};
        WindowLength w(c.m);
        GridResult result = run_grid(c.series, w, ExclusionZone::for_window(w), options);

        double dup_mean = result.aggregates[0].mean_dissimilarity;
        double irr_mean = result.aggregates[1].mean_dissimilarity;
        bool ordered = irr_mean > dup_mean;
        ok = ok && ordered;
        details += c.series.name + " dup2=" + format_double(dup_mean) +
                   " irr5=" + format_double(irr_mean) + (ordered ? " ok; " : " WRONG; ");
    }
    report(5, ok, "matched-volume ordering: " + details);
}

// ---------------------------------------------------------------- criterion 6

void criterion_6_table_reproduction() {
    const char* env = std::getenv("MPROBUST_TRAFFIC_CSV");
    if (env == nullptr || !std::filesystem::exists(env)) {
        report_skip(6, "public traffic dataset not available; set MPROBUST_TRAFFIC_CSV to "
                       "a local copy to enable this check");
        return;
    }

    TimeSeries series;
    try {
        series = read_series_csv(env);
    } catch (const std::exception&) {
        auto readings = read_traffic_csv(env);
        series = traffic_hourly_sum(readings, "traffic");
    }

    WindowLength w(24);
    ExclusionZone zone = ExclusionZone::for_window(w);
    MatrixProfile mp = matrix_profile_fast(series, w, zone, 2);
    ProfileSummary s = summarize(mp);

    bool summary_ok = std::abs(s.mean - 0.34) <= 0.1 && std::abs(s.max - 2.25) <= 0.1 &&
                      std::abs(s.min - 0.13) <= 0.1;

    // Median 10-seed duplicated-anomaly-x2 cost within a factor 2 of the
    // reference single-run value 1,739 for this dataset and grid point.
    std::vector<double> sums;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto [noisy, record] = inject_duplicates(series, 2, 0.05, seed);
        MatrixProfile noisy_mp = matrix_profile_fast(noisy, w, zone, 2);
        sums.push_back(compare_profiles(mp, noisy_mp, Radius(30)).sum_abs_diffs);
    }
    std::sort(sums.begin(), sums.end());
    double median = 0.5 * (sums[4] + sums[5]);
    bool magnitude_ok = median >= 1739.0 / 2.0 && median <= 1739.0 * 2.0;

    report(6, summary_ok && magnitude_ok,
           "n=" + std::to_string(series.size()) + ", summary mean/max/min " +
               format_double(s.mean) + "/" + format_double(s.max) + "/" +
               format_double(s.min) + " vs 0.34/2.25/0.13 (+-0.1); median dup-x2 cost " +
               format_double(median) + " vs 1739 (factor 2)");
}

// ---------------------------------------------------------------- criterion 7

void criterion_7_scale() {
    TimeSeries series = synthetic::calf_surrogate(60480, 99, "calf_scale");
    WindowLength w(60);
    ExclusionZone zone = ExclusionZone::for_window(w);

    auto t1 = Clock::now();
    MatrixProfile single = matrix_profile_fast(series, w, zone, 1);
    double single_s = seconds_since(t1);

    auto t2 = Clock::now();
    MatrixProfile four = matrix_profile_fast(series, w, zone, 4);
    double four_s = seconds_since(t2);

    bool identical = single.distances == four.distances && single.indices == four.indices;

    auto [noisy, record] = inject_duplicates(series, 2, 0.05, 3);
    MatrixProfile noisy_mp = matrix_profile_fast(noisy, w, zone, 4);

    auto t3 = Clock::now();
    WarpingResult warp = fastdtw(single.distances, noisy_mp.distances, Radius(30));
    double dtw_s = seconds_since(t3);

    bool ok = single_s < 600.0 && four_s < 180.0 && dtw_s < 120.0 && identical &&
              warp.total_cost > 0.0;
    report(7, ok,
           "n=60480 m=60: single-thread " + std::to_string(single_s) +
               "s (limit 600), 4 workers " + std::to_string(four_s) +
               "s (limit 180), outputs " + (identical ? "identical" : "DIFFER") +
               "; fastdtw r=30 on " + std::to_string(single.length()) + " vs " +
               std::to_string(noisy_mp.length()) + " profiles " + std::to_string(dtw_s) +
               "s (limit 120)");
}

// ---------------------------------------------------------------- criterion 8

void criterion_8_noise_cardinalities() {
    RandomStream rng(808);
    bool ok = true;
    std::size_t cases = 0;

    // Fixed spot check: 5% anchors duplicated x6 adds 25%.
    {
        TimeSeries series = synthetic::random_walk(100, 1);
        auto [noisy, record] = inject_duplicates(series, 6, 0.05, 2);
        ok = ok && noisy.size() == 125;
        ++cases;
    }

    while (cases < 1000 && ok) {
        std::size_t n = 10 + rng.next_index(2000);
        TimeSeries series = synthetic::random_walk(n, rng.next_u64());
        if (cases % 2 == 0) {
            int k = 2 + static_cast<int>(rng.next_index(5));
            double fraction = 0.01 + 0.3 * rng.next_unit();
            std::size_t s = round_half_up(fraction * static_cast<double>(n));
            if (s == 0) {
                continue;
            }
            auto [noisy, record] = inject_duplicates(series, k, fraction, rng.next_u64());
            ok = noisy.size() == n + s * static_cast<std::size_t>(k - 1) &&
                 record.inserted_positions.size() == s * static_cast<std::size_t>(k - 1);
        } else {
            double p = 0.01 + 0.6 * rng.next_unit();
            std::size_t r = round_half_up(p * static_cast<double>(n));
            auto [noisy, record] = inject_irrelevant(series, p, rng.next_u64());
            ok = noisy.size() == n + r && record.inserted_positions.size() == r;
        }
        ++cases;
    }
    report(8, ok, std::to_string(cases) + " randomized injections match the closed forms" +
                      (ok ? "" : " (first failure at case " + std::to_string(cases) + ")"));
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.insert(std::atoi(argv[i]));
    }
    auto wanted = [&](int c) { return selected.empty() || selected.count(c) > 0; };

    if (wanted(1)) criterion_1_oracle_equivalence();
    if (wanted(2)) criterion_2_dtw_exactness();
    if (wanted(3)) criterion_3_zero_noise_identity();
    if (wanted(4)) criterion_4_monotone_trend();
    if (wanted(5)) criterion_5_duplicates_vs_irrelevant();
    if (wanted(6)) criterion_6_table_reproduction();
    if (wanted(7)) criterion_7_scale();
    if (wanted(8)) criterion_8_noise_cardinalities();

    if (failures == 0) {
        std::cout << "acceptance: all executed criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed" << std::endl;
    return 1;
}
