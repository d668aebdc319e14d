#include "mprobust/matrix_profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mprobust/parallel.hpp"

namespace mprobust {

namespace {

// Rows computed per worker task. Fixed so the streaming recurrence restarts at
// the same rows no matter how many workers run, keeping output bitwise stable.
constexpr std::size_t kRowChunk = 512;

struct WindowStats {
    double mean = 0.0;
    double std = 0.0;
    double inv_std = 0.0;
    bool degenerate = false;
};

WindowStats window_stats(const double* x, std::size_t m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        acc += x[i];
    }
    WindowStats s;
    s.mean = acc / static_cast<double>(m);
    double acc2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double d = x[i] - s.mean;
        acc2 += d * d;
    }
    s.std = std::sqrt(acc2 / static_cast<double>(m));
    s.degenerate = s.std < kDegeneracyEpsilon;
    s.inv_std = s.degenerate ? 0.0 : 1.0 / s.std;
    return s;
}

// Distance between the z-normalized windows at a and b given their stats.
// Mirrors znorm_distance exactly so cached-stats paths agree with it.
double pair_distance(const double* a, const WindowStats& sa, const double* b,
                     const WindowStats& sb, std::size_t m) {
    if (sa.degenerate && sb.degenerate) {
        return 0.0;
    }
    double md = static_cast<double>(m);
    if (sa.degenerate || sb.degenerate) {
        return std::sqrt(md);
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double diff = (a[i] - sa.mean) * sa.inv_std - (b[i] - sb.mean) * sb.inv_std;
        acc += diff * diff;
    }
    return std::min(std::sqrt(acc), 2.0 * std::sqrt(md));
}

void check_window_fits(const TimeSeries& series, WindowLength window) {
    if (window.m > series.size()) {
        throw std::invalid_argument(
            "subsequence length m=" + std::to_string(window.m) +
            " must not exceed the series length n=" + std::to_string(series.size()) +
            "; choose a window smaller than the series being analysed");
    }
}

void check_profile_preconditions(const TimeSeries& series, WindowLength window,
                                 ExclusionZone zone) {
    check_window_fits(series, window);
    std::size_t n = series.size();
    if (n < window.m + zone.half_width + 1) {
        throw std::invalid_argument(
            "series too short for a matrix profile: need n >= m + half_width + 1, got n=" +
            std::to_string(n) + ", m=" + std::to_string(window.m) +
            ", half_width=" + std::to_string(zone.half_width));
    }
    std::size_t profile_len = n - window.m + 1;
    for (std::size_t i = 0; i < profile_len; ++i) {
        bool has_left = i > zone.half_width;
        bool has_right = i + zone.half_width + 1 <= profile_len - 1;
        if (!has_left && !has_right) {
            throw std::invalid_argument("no admissible neighbor exists for position " +
                                        std::to_string(i) +
                                        "; shrink the exclusion zone or extend the series");
        }
    }
}

} // namespace

WindowLength::WindowLength(std::size_t length) : m(length) {
    if (m < 2) {
        throw std::invalid_argument("window length must be at least 2, got " +
                                    std::to_string(m));
    }
}

ExclusionZone ExclusionZone::for_window(WindowLength w) {
    return ExclusionZone{(w.m + 3) / 4};
}

ZNormResult z_normalize(std::span<const double> window) {
    if (window.size() < 2) {
        throw std::invalid_argument("z-normalization needs a window of at least 2 values");
    }
    WindowStats s = window_stats(window.data(), window.size());
    ZNormResult out;
    out.values.resize(window.size());
    out.degenerate = s.degenerate;
    if (s.degenerate) {
        std::fill(out.values.begin(), out.values.end(), 0.0);
        return out;
    }
    for (std::size_t i = 0; i < window.size(); ++i) {
        out.values[i] = (window[i] - s.mean) * s.inv_std;
    }
    return out;
}

double znorm_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("znorm_distance requires windows of equal length");
    }
    if (a.size() < 2) {
        throw std::invalid_argument("znorm_distance needs windows of at least 2 values");
    }
    WindowStats sa = window_stats(a.data(), a.size());
    WindowStats sb = window_stats(b.data(), b.size());
    return pair_distance(a.data(), sa, b.data(), sb, a.size());
}

std::vector<double> distance_profile(const TimeSeries& series, std::size_t query_index,
                                     WindowLength window, ExclusionZone zone) {
    check_window_fits(series, window);
    std::size_t n = series.size();
    std::size_t m = window.m;
    std::size_t profile_len = n - m + 1;
    if (query_index >= profile_len) {
        throw std::invalid_argument("query index " + std::to_string(query_index) +
                                    " out of range [0, " + std::to_string(profile_len - 1) +
                                    "]");
    }
    const double* x = series.values.data();
    WindowStats query = window_stats(x + query_index, m);

    std::vector<double> profile(profile_len);
    for (std::size_t j = 0; j < profile_len; ++j) {
        std::size_t gap = query_index > j ? query_index - j : j - query_index;
        if (gap <= zone.half_width) {
            profile[j] = kExcludedDistance;
            continue;
        }
        WindowStats sj = window_stats(x + j, m);
        profile[j] = pair_distance(x + query_index, query, x + j, sj, m);
    }
    return profile;
}

MatrixProfile matrix_profile_naive(const TimeSeries& series, WindowLength window,
                                   ExclusionZone zone) {
    check_profile_preconditions(series, window, zone);
    std::size_t n = series.size();
    std::size_t m = window.m;
    std::size_t profile_len = n - m + 1;
    const double* x = series.values.data();

    std::vector<WindowStats> stats(profile_len);
    for (std::size_t i = 0; i < profile_len; ++i) {
        stats[i] = window_stats(x + i, m);
    }

    MatrixProfile mp;
    mp.window = m;
    mp.source_length = n;
    mp.distances.resize(profile_len);
    mp.indices.resize(profile_len);

    for (std::size_t i = 0; i < profile_len; ++i) {
        double best = kExcludedDistance;
        std::size_t best_j = profile_len; // smallest index wins ties
        for (std::size_t j = 0; j < profile_len; ++j) {
            std::size_t gap = i > j ? i - j : j - i;
            if (gap <= zone.half_width) {
                continue;
            }
            double d = pair_distance(x + i, stats[i], x + j, stats[j], m);
            if (d < best) {
                best = d;
                best_j = j;
            }
        }
        mp.distances[i] = best;
        mp.indices[i] = best_j;
    }
    return mp;
}

MatrixProfile matrix_profile_fast(const TimeSeries& series, WindowLength window,
                                  ExclusionZone zone, unsigned jobs) {
    check_profile_preconditions(series, window, zone);
    std::size_t n = series.size();
    std::size_t m = window.m;
    std::size_t profile_len = n - m + 1;

    // Work on a globally centered copy: the correlation identity below
    // subtracts m*mu_i*mu_j from the sliding dot product, and centering keeps
    // that cancellation benign. The z-normalized distance is unchanged.
    std::vector<double> centered(series.values);
    double global_mean = 0.0;
    for (double v : centered) {
        global_mean += v;
    }
    global_mean /= static_cast<double>(n);
    for (double& v : centered) {
        v -= global_mean;
    }
    const double* x = centered.data();

    std::vector<WindowStats> stats(profile_len);
    for (std::size_t i = 0; i < profile_len; ++i) {
        stats[i] = window_stats(x + i, m);
    }

    // First distance profile by direct sliding dot products; row i reuses it
    // for its leading column, dot(sub_i, sub_0) == dot(sub_0, sub_i).
    std::vector<double> first_row_qt(profile_len);
    for (std::size_t j = 0; j < profile_len; ++j) {
        double acc = 0.0;
        for (std::size_t t = 0; t < m; ++t) {
            acc += x[t] * x[j + t];
        }
        first_row_qt[j] = acc;
    }

    MatrixProfile mp;
    mp.window = m;
    mp.source_length = n;
    mp.distances.resize(profile_len);
    mp.indices.resize(profile_len);

    double md = static_cast<double>(m);
    double bound = 2.0 * std::sqrt(md);

    auto qt_distance = [&](double qt, const WindowStats& si, const WindowStats& sj) {
        if (si.degenerate && sj.degenerate) {
            return 0.0;
        }
        if (si.degenerate || sj.degenerate) {
            return std::sqrt(md);
        }
        double corr = (qt - md * si.mean * sj.mean) * (si.inv_std * sj.inv_std) / md;
        corr = std::clamp(corr, -1.0, 1.0);
        return std::min(std::sqrt(2.0 * md * (1.0 - corr)), bound);
    };

    std::size_t chunk_count = (profile_len + kRowChunk - 1) / kRowChunk;

    auto process_chunk = [&](std::size_t chunk) {
        std::size_t row_begin = chunk * kRowChunk;
        std::size_t row_end = std::min(row_begin + kRowChunk, profile_len);
        std::vector<double> qt(profile_len);

        for (std::size_t i = row_begin; i < row_end; ++i) {
            if (i == row_begin) {
                for (std::size_t j = 0; j < profile_len; ++j) {
                    double acc = 0.0;
                    for (std::size_t t = 0; t < m; ++t) {
                        acc += x[i + t] * x[j + t];
                    }
                    qt[j] = acc;
                }
            } else {
                // QT(i, j) = QT(i-1, j-1) - x[i-1]x[j-1] + x[i+m-1]x[j+m-1]
                for (std::size_t j = profile_len - 1; j >= 1; --j) {
                    qt[j] = qt[j - 1] - x[i - 1] * x[j - 1] + x[i + m - 1] * x[j + m - 1];
                }
                qt[0] = first_row_qt[i];
            }

            double best = kExcludedDistance;
            std::size_t best_j = profile_len;
            std::size_t zone_lo = i > zone.half_width ? i - zone.half_width : 0;
            std::size_t zone_hi = i + zone.half_width; // inclusive, may clip below
            for (std::size_t j = 0; j < profile_len; ++j) {
                if (j >= zone_lo && j <= zone_hi) {
                    continue;
                }
                double d = qt_distance(qt[j], stats[i], stats[j]);
                if (d < best) {
                    best = d;
                    best_j = j;
                }
            }
            // Re-evaluate the winner through the direct route so the stored
            // distance is the same quantity the naive path reports.
            mp.distances[i] = pair_distance(x + i, stats[i], x + best_j, stats[best_j], m);
            mp.indices[i] = best_j;
        }
    };

    run_tasks(jobs, chunk_count, process_chunk);
    return mp;
}

ProfileSummary summarize(const MatrixProfile& profile) {
    if (profile.distances.empty()) {
        throw std::invalid_argument("cannot summarize an empty matrix profile");
    }
    double acc = 0.0;
    double mx = -kExcludedDistance;
    double mn = kExcludedDistance;
    std::size_t counted = 0;
    for (double d : profile.distances) {
        if (d == kExcludedDistance) {
            continue;
        }
        acc += d;
        mx = std::max(mx, d);
        mn = std::min(mn, d);
        ++counted;
    }
    if (counted == 0) {
        throw std::invalid_argument("matrix profile holds only sentinel distances");
    }
    return ProfileSummary{acc / static_cast<double>(counted), mx, mn};
}

} // namespace mprobust
