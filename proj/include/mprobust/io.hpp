#pragma once

#include <filesystem>
#include <string>

#include "mprobust/dtw.hpp"
#include "mprobust/matrix_profile.hpp"
#include "mprobust/time_series.hpp"

namespace mprobust {

/// Writes the whole file via a temp-and-rename so readers never observe a
/// partial file.
void write_text_file_atomic(const std::filesystem::path& file, const std::string& content);

/// Shortest round-trip formatting for doubles (%.17g trimmed).
std::string format_double(double value);

// Generic value series: header "value", one sample per row. Doubles survive a
// write/read round trip exactly.
TimeSeries read_series_csv(const std::filesystem::path& file);
void write_series_csv(const std::filesystem::path& file, const TimeSeries& series);

// Profile files: header "position,distance,index".
MatrixProfile read_profile_csv(const std::filesystem::path& file);
void write_profile_csv(const std::filesystem::path& file, const MatrixProfile& profile);

/// Warping path as two columns "i,j".
void write_path_csv(const std::filesystem::path& file, const WarpingResult& result);

} // namespace mprobust
