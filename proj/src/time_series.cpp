#include "mprobust/time_series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mprobust {

TimeSeries::TimeSeries(std::vector<double> v, std::string label)
    : values(std::move(v)), name(std::move(label)) {
    if (values.empty()) {
        throw std::invalid_argument("time series must hold at least one value");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw std::invalid_argument("time series value at position " + std::to_string(i) +
                                        " is not finite");
        }
    }
}

} // namespace mprobust
