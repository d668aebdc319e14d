#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mprobust {

/// Ordered real-valued samples. Values are checked finite on construction;
/// everything downstream (profiles, noise, warping) relies on that.
struct TimeSeries {
    std::vector<double> values;
    std::string name;

    TimeSeries() = default;
    explicit TimeSeries(std::vector<double> v, std::string label = "");

    std::size_t size() const { return values.size(); }
};

} // namespace mprobust
