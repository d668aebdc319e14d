#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mprobust {

enum class WarpAlgorithm { exact, fast };

/// Refinement radius of the multilevel approximation.
struct Radius {
    std::size_t r;
    explicit Radius(std::size_t value = 30);
};

/// A monotone, connected alignment between two sequences and its summed
/// absolute-difference cost.
struct WarpingResult {
    double total_cost = 0.0;
    std::vector<std::pair<std::size_t, std::size_t>> path;
    WarpAlgorithm algorithm = WarpAlgorithm::exact;
    std::size_t radius = 0; // meaningful for WarpAlgorithm::fast only
};

/// Globally minimal alignment by full dynamic programming over |a_i - b_j|.
/// Ties prefer the diagonal step, then the i-advancing step.
WarpingResult dtw_exact(std::span<const double> a, std::span<const double> b);

/// Multilevel coarsen-project-refine approximation. Never undershoots the
/// exact cost; equal to it whenever the refinement corridor contains the
/// optimal path (always when radius >= max(len(a), len(b))).
WarpingResult fastdtw(std::span<const double> a, std::span<const double> b,
                      Radius radius = Radius{});

/// Contiguous per-row column bands [lo[i], hi[i]] of an (rows x cols) grid.
struct Corridor {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::size_t> lo;
    std::vector<std::size_t> hi;

    bool contains(std::size_t i, std::size_t j) const {
        return i < rows && j >= lo[i] && j <= hi[i];
    }
    std::size_t cell_count() const;
};

/// Projects a coarse warping path onto the grid at twice the resolution and
/// widens it by `radius` cells on each side. Corridors produced from the same
/// path are nested in the radius.
Corridor expand_window(const std::vector<std::pair<std::size_t, std::size_t>>& coarse_path,
                       std::size_t rows, std::size_t cols, std::size_t radius);

/// Dynamic programming restricted to the corridor cells. Same local cost and
/// tie-breaking as dtw_exact.
WarpingResult dtw_constrained(std::span<const double> a, std::span<const double> b,
                              const Corridor& corridor);

/// Half-resolution copy: entry t is the mean of elements 2t and 2t+1; an
/// unpaired final element passes through unchanged. Length ceil(len / 2).
std::vector<double> half_resolution(std::span<const double> x);

} // namespace mprobust
