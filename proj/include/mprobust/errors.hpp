#pragma once

#include <stdexcept>
#include <string>

namespace mprobust {

/// Uniform value injection needs a non-degenerate [min, max] support.
class degenerate_support_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The normalized dissimilarity divides by the reference profile's maximum;
/// an all-zero reference profile leaves only the raw summed cost defined.
class normalization_undefined_error : public std::runtime_error {
public:
    normalization_undefined_error(const std::string& what, double sum)
        : std::runtime_error(what), sum_abs_diffs(sum) {}

    double sum_abs_diffs;
};

} // namespace mprobust
