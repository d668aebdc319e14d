#include "mprobust/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace mprobust {

namespace {

[[noreturn]] void fail_row(const std::filesystem::path& file, std::size_t line_no,
                           const std::string& why) {
    throw std::invalid_argument(file.string() + ":" + std::to_string(line_no) + ": " + why);
}

void expect_header(const std::filesystem::path& file, std::ifstream& in,
                   const std::string& expected) {
    std::string line;
    if (!std::getline(in, line)) {
        fail_row(file, 1, "missing header row, expected '" + expected + "'");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != expected) {
        fail_row(file, 1, "unexpected header '" + line + "', expected '" + expected + "'");
    }
}

double parse_double_field(const std::string& text, const std::filesystem::path& file,
                          std::size_t line_no) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        fail_row(file, line_no, "expected a number, got '" + text + "'");
    }
    return value;
}

} // namespace

void write_text_file_atomic(const std::filesystem::path& file, const std::string& content) {
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, file);
}

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

TimeSeries read_series_csv(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw std::invalid_argument("cannot open " + file.string());
    }
    expect_header(file, in, "value");
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        values.push_back(parse_double_field(line, file, line_no));
    }
    if (values.empty()) {
        fail_row(file, line_no, "series file holds no values");
    }
    return TimeSeries(std::move(values), file.stem().string());
}

void write_series_csv(const std::filesystem::path& file, const TimeSeries& series) {
    std::string content = "value\n";
    for (double v : series.values) {
        content += format_double(v);
        content += '\n';
    }
    write_text_file_atomic(file, content);
}

MatrixProfile read_profile_csv(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw std::invalid_argument("cannot open " + file.string());
    }
    expect_header(file, in, "position,distance,index");
    MatrixProfile mp;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::size_t c1 = line.find(',');
        std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c2 == std::string::npos) {
            fail_row(file, line_no, "expected 3 fields");
        }
        std::string pos_text = line.substr(0, c1);
        std::string dist_text = line.substr(c1 + 1, c2 - c1 - 1);
        std::string idx_text = line.substr(c2 + 1);
        std::size_t pos = 0;
        std::size_t idx = 0;
        auto r1 = std::from_chars(pos_text.data(), pos_text.data() + pos_text.size(), pos);
        auto r2 = std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), idx);
        if (r1.ec != std::errc{} || r2.ec != std::errc{}) {
            fail_row(file, line_no, "malformed position or index");
        }
        if (pos != mp.distances.size()) {
            fail_row(file, line_no, "positions must be consecutive from 0");
        }
        mp.distances.push_back(parse_double_field(dist_text, file, line_no));
        mp.indices.push_back(idx);
    }
    if (mp.distances.empty()) {
        fail_row(file, line_no, "profile file holds no rows");
    }
    return mp;
}

void write_profile_csv(const std::filesystem::path& file, const MatrixProfile& profile) {
    std::string content = "position,distance,index\n";
    for (std::size_t i = 0; i < profile.length(); ++i) {
        content += std::to_string(i);
        content += ',';
        content += format_double(profile.distances[i]);
        content += ',';
        content += std::to_string(profile.indices[i]);
        content += '\n';
    }
    write_text_file_atomic(file, content);
}

void write_path_csv(const std::filesystem::path& file, const WarpingResult& result) {
    std::string content = "i,j\n";
    for (auto [i, j] : result.path) {
        content += std::to_string(i);
        content += ',';
        content += std::to_string(j);
        content += '\n';
    }
    write_text_file_atomic(file, content);
}

} // namespace mprobust
