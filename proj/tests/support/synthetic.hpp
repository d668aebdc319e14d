#pragma once

// Deterministic synthetic series used across the test suites: a random walk,
// a noisy periodic signal, and surrogates shaped like the three case-study
// datasets (inter-keystroke gaps, wearable-accelerometer activity, hourly
// city traffic volume).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "mprobust/rng.hpp"
#include "mprobust/time_series.hpp"

namespace synthetic {

inline mprobust::TimeSeries random_walk(std::size_t n, std::uint64_t seed,
                                        std::string name = "walk") {
    mprobust::RandomStream rng(seed);
    std::vector<double> values(n);
    double level = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        level += rng.next_real(-1.0, 1.0);
        values[i] = level;
    }
    return mprobust::TimeSeries(std::move(values), std::move(name));
}

inline mprobust::TimeSeries noisy_sine(std::size_t n, double period, double noise,
                                       std::uint64_t seed, std::string name = "sine") {
    mprobust::RandomStream rng(seed);
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = std::sin(2.0 * 3.14159265358979323846 * static_cast<double>(i) / period) +
                    noise * rng.next_real(-1.0, 1.0);
    }
    return mprobust::TimeSeries(std::move(values), std::move(name));
}

/// Hourly vehicle counts with rush-hour peaks whose position, width and
/// height vary by weekday and drift day to day, plus slow intraday wander and
/// multiplicative count noise. Days resemble each other without ever
/// repeating exactly, like real loop-detector data. n = 3600 mirrors five
/// months of hours.
inline mprobust::TimeSeries traffic_surrogate(std::size_t n = 3600, std::uint64_t seed = 7,
                                              std::string name = "traffic_surrogate") {
    mprobust::RandomStream rng(seed);
    constexpr double kMorningCenter[7] = {8.2, 8.6, 8.0, 8.9, 8.4, 10.5, 11.2};
    constexpr double kEveningCenter[7] = {17.2, 17.8, 18.3, 17.0, 16.6, 15.5, 16.8};
    constexpr double kMorningWidth[7] = {1.4, 1.9, 1.5, 2.2, 1.7, 2.8, 3.1};
    constexpr double kEveningWidth[7] = {2.0, 1.6, 2.4, 1.8, 2.9, 3.4, 2.6};
    constexpr double kMorningAmp[7] = {1.0, 0.85, 1.1, 0.9, 1.05, 0.5, 0.45};
    constexpr double kEveningAmp[7] = {0.9, 1.05, 0.8, 1.15, 1.2, 0.6, 0.5};

    std::vector<double> values(n);
    double wander = 0.0;
    double m_center = 0.0, e_center = 0.0, m_width = 1.0, e_width = 1.0;
    double m_amp = 0.0, e_amp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t dow = (i / 24) % 7;
        if (i % 24 == 0) {
            m_center = kMorningCenter[dow] + rng.next_real(-0.7, 0.7);
            e_center = kEveningCenter[dow] + rng.next_real(-0.7, 0.7);
            m_width = kMorningWidth[dow] + rng.next_real(0.0, 0.6);
            e_width = kEveningWidth[dow] + rng.next_real(0.0, 0.6);
            m_amp = kMorningAmp[dow] * (0.85 + rng.next_real(0.0, 0.3));
            e_amp = kEveningAmp[dow] * (0.85 + rng.next_real(0.0, 0.3));
        }
        double hour = static_cast<double>(i % 24);
        double morning = m_amp * std::exp(-0.5 * std::pow((hour - m_center) / m_width, 2.0));
        double evening = e_amp * std::exp(-0.5 * std::pow((hour - e_center) / e_width, 2.0));
        double base = 180.0 + 950.0 * (morning + evening);
        wander = 0.7 * wander + rng.next_real(-30.0, 30.0);
        base = base * (1.0 + 0.15 * rng.next_real(-1.0, 1.0)) + wander;
        values[i] = std::max(0.0, std::round(base));
    }
    return mprobust::TimeSeries(std::move(values), std::move(name));
}

/// Positive inter-keystroke gaps in (0, 1000] ms: a lognormal-ish bulk around
/// 150 ms with occasional long pauses, like filtered typing data.
inline mprobust::TimeSeries keystroke_surrogate(std::size_t n = 6000, std::uint64_t seed = 11,
                                                std::string name = "keystrokes_surrogate") {
    mprobust::RandomStream rng(seed);
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        double z = rng.next_real(-1.0, 1.0) + rng.next_real(-1.0, 1.0) +
                   rng.next_real(-1.0, 1.0); // roughly bell-shaped on [-3, 3]
        double gap = 150.0 * std::exp(0.45 * z);
        if (rng.next_unit() < 0.03) {
            gap = rng.next_real(500.0, 1000.0); // thinking pause
        }
        values[i] = std::clamp(gap, 25.0, 1000.0);
    }
    return mprobust::TimeSeries(std::move(values), std::move(name));
}

/// Per-minute acceleration-magnitude means: a circadian baseline near 1 g
/// with smooth activity bouts and sensor noise.
inline mprobust::TimeSeries calf_surrogate(std::size_t n = 8000, std::uint64_t seed = 13,
                                           std::string name = "calf_surrogate") {
    mprobust::RandomStream rng(seed);
    std::vector<double> values(n);
    double bout = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double minute_of_day = static_cast<double>(i % 1440);
        double circadian =
            0.25 * std::sin(2.0 * 3.14159265358979323846 * minute_of_day / 1440.0);
        if (rng.next_unit() < 0.01) {
            bout = rng.next_real(0.5, 1.5); // start of a play/locomotion bout
        }
        bout *= 0.97;
        values[i] = 1.0 + circadian + bout + 0.08 * rng.next_real(-1.0, 1.0);
    }
    return mprobust::TimeSeries(std::move(values), std::move(name));
}

} // namespace synthetic
