#include "mprobust/dtw.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace mprobust {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Predecessor codes, in tie-break preference order.
enum Pred : std::uint8_t { kStart = 0, kDiag = 1, kUp = 2, kLeft = 3 };

void check_nonempty(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("warping requires two non-empty sequences");
    }
}

std::vector<std::pair<std::size_t, std::size_t>> backtrack(
    std::size_t end_i, std::size_t end_j,
    const std::function<Pred(std::size_t, std::size_t)>& pred_at) {
    std::vector<std::pair<std::size_t, std::size_t>> path;
    std::size_t i = end_i;
    std::size_t j = end_j;
    for (;;) {
        path.emplace_back(i, j);
        Pred p = pred_at(i, j);
        if (p == kStart) {
            break;
        }
        if (p == kDiag) {
            --i;
            --j;
        } else if (p == kUp) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(path.begin(), path.end());
    return path;
}

// Full-grid dynamic programming; rolling cost rows plus a byte predecessor
// matrix keep memory at O(len_a * len_b) bytes.
WarpingResult dtw_full(std::span<const double> a, std::span<const double> b) {
    std::size_t la = a.size();
    std::size_t lb = b.size();
    std::vector<std::uint8_t> preds(la * lb, kStart);
    std::vector<double> prev(lb, kInf);
    std::vector<double> cur(lb, kInf);

    for (std::size_t i = 0; i < la; ++i) {
        for (std::size_t j = 0; j < lb; ++j) {
            double local = std::abs(a[i] - b[j]);
            if (i == 0 && j == 0) {
                cur[0] = local;
                preds[0] = kStart;
                continue;
            }
            double best = kInf;
            Pred pred = kStart;
            if (i > 0 && j > 0 && prev[j - 1] < best) {
                best = prev[j - 1];
                pred = kDiag;
            }
            if (i > 0 && prev[j] < best) {
                best = prev[j];
                pred = kUp;
            }
            if (j > 0 && cur[j - 1] < best) {
                best = cur[j - 1];
                pred = kLeft;
            }
            cur[j] = best + local;
            preds[i * lb + j] = pred;
        }
        std::swap(prev, cur);
    }

    WarpingResult result;
    result.total_cost = prev[lb - 1];
    result.path = backtrack(la - 1, lb - 1, [&](std::size_t i, std::size_t j) {
        return static_cast<Pred>(preds[i * lb + j]);
    });
    result.algorithm = WarpAlgorithm::exact;
    return result;
}

WarpingResult fastdtw_impl(std::span<const double> a, std::span<const double> b,
                           std::size_t radius) {
    if (a.size() <= radius + 2 || b.size() <= radius + 2) {
        return dtw_full(a, b);
    }
    std::vector<double> coarse_a = half_resolution(a);
    std::vector<double> coarse_b = half_resolution(b);
    WarpingResult coarse = fastdtw_impl(coarse_a, coarse_b, radius);
    Corridor corridor = expand_window(coarse.path, a.size(), b.size(), radius);
    return dtw_constrained(a, b, corridor);
}

} // namespace

Radius::Radius(std::size_t value) : r(value) {
    if (r < 1) {
        throw std::invalid_argument("radius must be at least 1");
    }
}

std::size_t Corridor::cell_count() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        total += hi[i] - lo[i] + 1;
    }
    return total;
}

std::vector<double> half_resolution(std::span<const double> x) {
    std::vector<double> out;
    out.reserve((x.size() + 1) / 2);
    std::size_t pairs = x.size() / 2;
    for (std::size_t t = 0; t < pairs; ++t) {
        out.push_back(0.5 * (x[2 * t] + x[2 * t + 1]));
    }
    if (x.size() % 2 == 1) {
        out.push_back(x.back());
    }
    return out;
}

Corridor expand_window(const std::vector<std::pair<std::size_t, std::size_t>>& coarse_path,
                       std::size_t rows, std::size_t cols, std::size_t radius) {
    if (coarse_path.empty()) {
        throw std::invalid_argument("cannot expand an empty path");
    }
    Corridor corridor;
    corridor.rows = rows;
    corridor.cols = cols;

    // Project each coarse cell onto its 2x2 block at the finer resolution.
    std::vector<std::size_t> lo(rows, cols);
    std::vector<std::size_t> hi(rows, 0);
    for (auto [ci, cj] : coarse_path) {
        std::size_t j0 = std::min(2 * cj, cols - 1);
        std::size_t j1 = std::min(2 * cj + 1, cols - 1);
        for (std::size_t fi = 2 * ci; fi <= std::min(2 * ci + 1, rows - 1); ++fi) {
            lo[fi] = std::min(lo[fi], j0);
            hi[fi] = std::max(hi[fi], j1);
        }
    }

    // Widen by `radius` in both directions. The projected bands are monotone,
    // so the union over neighboring rows reduces to a lookup r rows away.
    corridor.lo.resize(rows);
    corridor.hi.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        std::size_t up = i > radius ? i - radius : 0;
        std::size_t down = std::min(i + radius, rows - 1);
        std::size_t wide_lo = lo[up] > radius ? lo[up] - radius : 0;
        std::size_t wide_hi = std::min(hi[down] + radius, cols - 1);
        corridor.lo[i] = wide_lo;
        corridor.hi[i] = wide_hi;
    }
    return corridor;
}

WarpingResult dtw_constrained(std::span<const double> a, std::span<const double> b,
                              const Corridor& corridor) {
    check_nonempty(a, b);
    std::size_t la = a.size();
    std::size_t lb = b.size();
    if (corridor.rows != la || corridor.cols != lb) {
        throw std::invalid_argument("corridor shape does not match the sequences");
    }
    if (!corridor.contains(0, 0) || !corridor.contains(la - 1, lb - 1)) {
        throw std::invalid_argument("corridor must contain both path endpoints");
    }

    std::vector<std::size_t> offsets(la + 1, 0);
    for (std::size_t i = 0; i < la; ++i) {
        offsets[i + 1] = offsets[i] + (corridor.hi[i] - corridor.lo[i] + 1);
    }
    std::vector<std::uint8_t> preds(offsets[la], kStart);
    std::vector<double> prev(lb, kInf);
    std::vector<double> cur(lb, kInf);

    for (std::size_t i = 0; i < la; ++i) {
        std::size_t row_lo = corridor.lo[i];
        std::size_t row_hi = corridor.hi[i];
        std::size_t prev_lo = i > 0 ? corridor.lo[i - 1] : 0;
        std::size_t prev_hi = i > 0 ? corridor.hi[i - 1] : 0;
        for (std::size_t j = row_lo; j <= row_hi; ++j) {
            double local = std::abs(a[i] - b[j]);
            if (i == 0 && j == 0) {
                cur[0] = local;
                preds[offsets[0]] = kStart;
                continue;
            }
            double best = kInf;
            Pred pred = kStart;
            if (i > 0 && j > 0 && j - 1 >= prev_lo && j - 1 <= prev_hi &&
                prev[j - 1] < best) {
                best = prev[j - 1];
                pred = kDiag;
            }
            if (i > 0 && j >= prev_lo && j <= prev_hi && prev[j] < best) {
                best = prev[j];
                pred = kUp;
            }
            if (j > row_lo && cur[j - 1] < best) {
                best = cur[j - 1];
                pred = kLeft;
            }
            cur[j] = best + local;
            preds[offsets[i] + (j - row_lo)] = pred;
        }
        std::swap(prev, cur);
        std::fill(cur.begin(), cur.end(), kInf);
    }

    WarpingResult result;
    result.total_cost = prev[lb - 1];
    result.path = backtrack(la - 1, lb - 1, [&](std::size_t i, std::size_t j) {
        return static_cast<Pred>(preds[offsets[i] + (j - corridor.lo[i])]);
    });
    result.algorithm = WarpAlgorithm::exact;
    return result;
}

WarpingResult dtw_exact(std::span<const double> a, std::span<const double> b) {
    check_nonempty(a, b);
    return dtw_full(a, b);
}

WarpingResult fastdtw(std::span<const double> a, std::span<const double> b, Radius radius) {
    check_nonempty(a, b);
    WarpingResult result = fastdtw_impl(a, b, radius.r);
    result.algorithm = WarpAlgorithm::fast;
    result.radius = radius.r;
    return result;
}

} // namespace mprobust
