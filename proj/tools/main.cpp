// mprobust: matrix profiles for univariate series, parameterized noise
// injection, and DTW-normalized robustness reports.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mprobust/errors.hpp"
#include "mprobust/ingest.hpp"
#include "mprobust/io.hpp"
#include "mprobust/matrix_profile.hpp"
#include "mprobust/noise.hpp"
#include "mprobust/robustness.hpp"
#include "mprobust/time_series.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace mprobust;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitMetricUndefined = 4;
constexpr int kSchemaVersion = 1;

struct RunConfig {
    std::string input;
    std::string kind = "generic";
    std::size_t window = 0;
    std::optional<std::size_t> exclusion; // default: ceil(m/4)
    std::string out_dir = ".";
    std::string format = "both"; // json|csv|both
    unsigned jobs = 1;
    std::vector<std::uint64_t> seeds;
    std::size_t radius = 30;
    // noise parameters
    std::string noise_kind; // dup|irrelevant; empty means full grid
    int dup_k = 2;
    double irrelevant_p = 0.05;
    double anomaly_fraction = 0.05;
    std::string placement = "adjacent";
    // ingest parameters
    std::string bigram;
    bool top_bigram = false;
    std::int64_t max_gap_ms = 1000;
    std::int64_t interval_ms = 60000;
};

std::string sanitize_name(const std::string& name) {
    std::string out = name;
    for (char& c : out) {
        if (c == ' ' || c == '/' || c == '\\') {
            c = '_';
        }
    }
    return out.empty() ? "series" : out;
}

Bigram parse_bigram(const std::string& text) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == text.size()) {
        throw std::invalid_argument("--bigram expects 'first,second'");
    }
    return {text.substr(0, comma), text.substr(comma + 1)};
}

TimeSeries load_input_series(const RunConfig& cfg) {
    fs::path input(cfg.input);
    std::string stem = sanitize_name(input.stem().string());
    if (cfg.kind == "generic") {
        TimeSeries s = read_series_csv(input);
        s.name = stem;
        return s;
    }
    if (cfg.kind == "keystrokes") {
        auto events = read_keystrokes_csv(input);
        Bigram target;
        if (cfg.top_bigram) {
            target = most_frequent_bigram(events, cfg.max_gap_ms);
        } else if (!cfg.bigram.empty()) {
            target = parse_bigram(cfg.bigram);
        } else {
            throw std::invalid_argument("keystrokes input needs --bigram or --top-bigram");
        }
        return bigram_gaps(events, target, cfg.max_gap_ms,
                           stem + "_" + target.first + target.second);
    }
    if (cfg.kind == "calf") {
        auto samples = read_accel_csv(input);
        std::vector<TimedValue> magnitudes;
        magnitudes.reserve(samples.size());
        for (const AccelSample& s : samples) {
            magnitudes.push_back({s.timestamp_ms, amag(s.ax, s.ay, s.az)});
        }
        ResampleResult r = resample_mean(magnitudes, cfg.interval_ms, stem + "_amag");
        if (r.empty_buckets > 0) {
            std::cerr << "note: " << r.empty_buckets
                      << " empty resampling bucket(s) produced no value\n";
        }
        return r.series;
    }
    if (cfg.kind == "traffic") {
        auto readings = read_traffic_csv(input);
        return traffic_hourly_sum(readings, stem + "_hourly");
    }
    throw std::invalid_argument("unknown input kind '" + cfg.kind + "'");
}

WindowLength window_from(const RunConfig& cfg) {
    return WindowLength(cfg.window);
}

ExclusionZone zone_from(const RunConfig& cfg, WindowLength w) {
    if (cfg.exclusion) {
        return ExclusionZone{*cfg.exclusion};
    }
    return ExclusionZone::for_window(w);
}

std::vector<std::uint64_t> resolve_seeds(const RunConfig& cfg, std::size_t default_count) {
    if (!cfg.seeds.empty()) {
        return cfg.seeds;
    }
    if (const char* env = std::getenv("MP_ROBUST_SEED")) {
        return {std::strtoull(env, nullptr, 10)};
    }
    std::vector<std::uint64_t> seeds(default_count);
    for (std::size_t i = 0; i < default_count; ++i) {
        seeds[i] = i + 1;
    }
    return seeds;
}

json summary_json(const ProfileSummary& s) {
    return json{{"mean", s.mean}, {"max", s.max}, {"min", s.min}};
}

json spec_json(const NoiseSpec& spec) {
    json j;
    j["kind"] = spec.kind == NoiseKind::duplicated_anomaly ? "duplicated_anomaly"
                                                           : "irrelevant_features";
    if (spec.kind == NoiseKind::duplicated_anomaly) {
        j["times"] = spec.times;
        j["anomaly_fraction"] = spec.anomaly_fraction;
        j["placement"] =
            spec.placement == DuplicatePlacement::adjacent ? "adjacent" : "random_gap";
    } else {
        j["fraction"] = spec.irrelevant_fraction;
    }
    j["seed"] = spec.seed;
    return j;
}

int cmd_mp(const RunConfig& cfg) {
    TimeSeries series = load_input_series(cfg);
    WindowLength w = window_from(cfg);
    ExclusionZone zone = zone_from(cfg, w);
    MatrixProfile mp = matrix_profile_fast(series, w, zone, cfg.jobs);
    ProfileSummary summary = summarize(mp);

    fs::path out(cfg.out_dir);
    fs::create_directories(out);
    std::string base = sanitize_name(series.name);

    if (cfg.format != "json") {
        write_profile_csv(out / (base + ".mp.csv"), mp);

        std::string plot = "position,value,mp_distance\n";
        for (std::size_t i = 0; i < series.size(); ++i) {
            plot += std::to_string(i);
            plot += ',';
            plot += format_double(series.values[i]);
            plot += ',';
            if (i < mp.length()) {
                plot += format_double(mp.distances[i]);
            }
            plot += '\n';
        }
        write_text_file_atomic(out / (base + ".mp.plot.csv"), plot);
    }

    if (cfg.format != "csv") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["name"] = series.name;
        j["n"] = series.size();
        j["m"] = w.m;
        j["exclusion_half_width"] = zone.half_width;
        j["profile_length"] = mp.length();
        j["summary"] = summary_json(summary);
        write_text_file_atomic(out / (base + ".mp.summary.json"), j.dump(2) + "\n");
    }

    std::cout << base << ": profile length " << mp.length() << ", mean " << summary.mean
              << ", max " << summary.max << ", min " << summary.min << "\n";
    return kExitOk;
}

NoiseSpec noise_spec_from(const RunConfig& cfg, std::uint64_t seed) {
    NoiseSpec spec;
    if (cfg.noise_kind == "dup") {
        spec.kind = NoiseKind::duplicated_anomaly;
        spec.times = cfg.dup_k;
        spec.anomaly_fraction = cfg.anomaly_fraction;
    } else if (cfg.noise_kind == "irrelevant") {
        spec.kind = NoiseKind::irrelevant_features;
        spec.irrelevant_fraction = cfg.irrelevant_p;
    } else {
        throw std::invalid_argument("--noise must be 'dup' or 'irrelevant'");
    }
    spec.placement = cfg.placement == "random" ? DuplicatePlacement::random_gap
                                               : DuplicatePlacement::adjacent;
    spec.seed = seed;
    return spec;
}

int cmd_noise(const RunConfig& cfg) {
    TimeSeries series = load_input_series(cfg);
    std::vector<std::uint64_t> seeds = resolve_seeds(cfg, 1);

    fs::path out(cfg.out_dir);
    fs::create_directories(out);
    std::string base = sanitize_name(series.name);

    for (std::uint64_t seed : seeds) {
        NoiseSpec spec = noise_spec_from(cfg, seed);
        auto [noisy, record] = apply_noise(series, spec);
        std::string stem = base + "." + spec.file_token() + "." + std::to_string(seed);
        write_series_csv(out / (stem + ".csv"), noisy);

        json j;
        j["schema_version"] = kSchemaVersion;
        j["spec"] = spec_json(spec);
        j["original_length"] = series.size();
        j["output_length"] = noisy.size();
        j["inserted_positions"] = record.inserted_positions;
        write_text_file_atomic(out / (stem + ".record.json"), j.dump(2) + "\n");

        std::cout << stem << ".csv: " << series.size() << " -> " << noisy.size()
                  << " values\n";
    }
    return kExitOk;
}

int cmd_robustness(const RunConfig& cfg) {
    TimeSeries series = load_input_series(cfg);
    WindowLength w = window_from(cfg);
    ExclusionZone zone = zone_from(cfg, w);

    GridOptions options;
    options.seeds = resolve_seeds(cfg, 10);
    options.radius = Radius(cfg.radius);
    options.jobs = cfg.jobs;
    options.placement = cfg.placement == "random" ? DuplicatePlacement::random_gap
                                                  : DuplicatePlacement::adjacent;
    options.keep_first_seed_detail = true;
    if (!cfg.noise_kind.empty()) {
        for (const NoiseSpec& spec : default_noise_grid()) {
            bool dup = spec.kind == NoiseKind::duplicated_anomaly;
            if (cfg.noise_kind == "dup" && dup) {
                options.grid.push_back(spec);
            } else if (cfg.noise_kind == "irrelevant" && !dup) {
                options.grid.push_back(spec);
            }
        }
    }

    GridResult result = run_grid(series, w, zone, options);

    fs::path out(cfg.out_dir);
    fs::create_directories(out);
    std::string base = sanitize_name(series.name);

    if (cfg.format != "csv") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["dataset"] = series.name;
        j["n"] = series.size();
        j["m"] = w.m;
        j["exclusion_half_width"] = zone.half_width;
        j["radius"] = cfg.radius;
        j["seeds"] = options.seeds;
        auto report_json = [](const RobustnessReport& r) {
            json o;
            o["dataset"] = r.dataset;
            o["noise"] = r.noise_label;
            o["seed"] = r.seed;
            o["sum_abs_diffs"] = r.sum_abs_diffs;
            o["normalized_dissimilarity"] = r.normalized_dissimilarity;
            o["original_summary"] = summary_json(r.original_summary);
            o["noisy_summary"] = summary_json(r.noisy_summary);
            o["original_mp_length"] = r.original_mp_length;
            o["noisy_mp_length"] = r.noisy_mp_length;
            return o;
        };
        j["control"] = report_json(result.control);
        j["reports"] = json::array();
        for (const RobustnessReport& r : result.runs) {
            j["reports"].push_back(report_json(r));
        }
        j["aggregates"] = json::array();
        for (const GridAggregate& a : result.aggregates) {
            json o;
            o["noise"] = a.noise_label;
            o["mean_sum_abs_diffs"] = a.mean_sum_abs_diffs;
            o["mean_normalized_dissimilarity"] = a.mean_dissimilarity;
            o["stddev_normalized_dissimilarity"] = a.stddev_dissimilarity;
            o["mean_noisy_summary"] = summary_json(a.mean_noisy_summary);
            j["aggregates"].push_back(o);
        }
        write_text_file_atomic(out / (base + ".robustness.json"), j.dump(2) + "\n");
    }

    if (cfg.format != "json") {
        // Signal / Type / sum abs diffs / Mean / Max / Min, one row per grid
        // point (seed-averaged), led by the zero-noise control row.
        std::string stats = "signal,type,sum_abs_diffs,mean,max,min\n";
        auto row = [&](const std::string& type, double sum, const ProfileSummary& s) {
            stats += series.name + "," + type + "," + format_double(sum) + "," +
                     format_double(s.mean) + "," + format_double(s.max) + "," +
                     format_double(s.min) + "\n";
        };
        row("Original Matrix Profile", 0.0, result.original_summary);
        for (const GridAggregate& a : result.aggregates) {
            row(a.noise_label, a.mean_sum_abs_diffs, a.mean_noisy_summary);
        }
        write_text_file_atomic(out / (base + ".profile_stats.csv"), stats);

        std::string dis = "type,normalized_dissimilarity_mean,normalized_dissimilarity_std\n";
        dis += "MP Length," + std::to_string(result.original.length()) + ",\n";
        dis += "Maximum value," + format_double(result.original_summary.max) + ",\n";
        for (const GridAggregate& a : result.aggregates) {
            dis += a.noise_label + "," + format_double(a.mean_dissimilarity) + "," +
                   format_double(a.stddev_dissimilarity) + "\n";
        }
        write_text_file_atomic(out / (base + ".dissimilarity.csv"), dis);

        // Matched-pair alignment for the first seed of each grid point.
        for (const AlignmentDetail& d : result.first_seed_details) {
            if (d.noisy_distances.empty()) {
                continue;
            }
            std::string token;
            for (const NoiseSpec& spec :
                 options.grid.empty() ? default_noise_grid() : options.grid) {
                if (spec.label() == d.noise_label) {
                    token = spec.file_token();
                    break;
                }
            }
            std::string align = "i,j,original_distance,noisy_distance\n";
            for (auto [i, jx] : d.warp.path) {
                align += std::to_string(i) + "," + std::to_string(jx) + "," +
                         format_double(result.original.distances[i]) + "," +
                         format_double(d.noisy_distances[jx]) + "\n";
            }
            write_text_file_atomic(out / (base + "." + token + ".alignment.csv"), align);
            write_path_csv(out / (base + "." + token + ".path.csv"), d.warp);
        }
    }

    std::cout << base << ": " << result.runs.size() << " report(s) over "
              << result.aggregates.size() << " grid point(s), "
              << options.seeds.size() << " seed(s)\n";
    return kExitOk;
}

int cmd_ingest(const RunConfig& cfg) {
    TimeSeries series = load_input_series(cfg);
    fs::path out(cfg.out_dir);
    fs::create_directories(out);
    std::string base = sanitize_name(series.name);
    write_series_csv(out / (base + ".series.csv"), series);
    std::cout << base << ".series.csv: " << series.size() << " values\n";
    return kExitOk;
}

void add_common_options(CLI::App* cmd, RunConfig& cfg, bool needs_kind) {
    cmd->add_option("--input", cfg.input, "input data file")->required();
    if (needs_kind) {
        cmd->add_option("--kind", cfg.kind, "input kind")
            ->check(CLI::IsMember({"keystrokes", "calf", "traffic", "generic"}));
    }
    cmd->add_option("--out", cfg.out_dir, "output directory (default '.')");
    cmd->add_option("--bigram", cfg.bigram, "keystrokes: target bigram as 'first,second'");
    cmd->add_flag("--top-bigram", cfg.top_bigram,
                  "keystrokes: use the most frequent bigram");
    cmd->add_option("--max-gap-ms", cfg.max_gap_ms,
                    "keystrokes: drop gaps above this (default 1000)");
    cmd->add_option("--interval-ms", cfg.interval_ms,
                    "calf: resampling bucket width (default 60000)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix profile robustness toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read defaults from an INI/TOML file");

    RunConfig cfg;

    CLI::App* mp = app.add_subcommand("mp", "compute the matrix profile of a series");
    add_common_options(mp, cfg, true);
    mp->add_option("-m,--window", cfg.window, "subsequence length m")->required();
    mp->add_option("--exclusion", cfg.exclusion,
                   "exclusion-zone half width (default ceil(m/4))");
    mp->add_option("--jobs", cfg.jobs, "worker threads (default 1)");
    mp->add_option("--format", cfg.format, "json|csv|both (default both)")
        ->check(CLI::IsMember({"json", "csv", "both"}));

    CLI::App* noise = app.add_subcommand("noise", "corrupt a series with one noise setting");
    add_common_options(noise, cfg, true);
    noise->add_option("--noise", cfg.noise_kind, "dup|irrelevant")
        ->required()
        ->check(CLI::IsMember({"dup", "irrelevant"}));
    noise->add_option("--k", cfg.dup_k, "duplicate multiplier (default 2)");
    noise->add_option("--p", cfg.irrelevant_p, "irrelevant fraction (default 0.05)");
    noise->add_option("--fraction", cfg.anomaly_fraction,
                      "duplicated anomaly fraction (default 0.05)");
    noise->add_option("--seed,--seeds", cfg.seeds, "seed(s); MP_ROBUST_SEED as fallback");
    noise->add_option("--duplicate-placement", cfg.placement, "adjacent|random")
        ->check(CLI::IsMember({"adjacent", "random"}));

    CLI::App* robustness =
        app.add_subcommand("robustness", "run the noise grid and report dissimilarities");
    add_common_options(robustness, cfg, true);
    robustness->add_option("-m,--window", cfg.window, "subsequence length m")->required();
    robustness->add_option("--exclusion", cfg.exclusion,
                           "exclusion-zone half width (default ceil(m/4))");
    robustness->add_option("--noise", cfg.noise_kind,
                           "restrict the grid to one family: dup|irrelevant")
        ->check(CLI::IsMember({"dup", "irrelevant"}));
    robustness->add_option("--seed,--seeds", cfg.seeds,
                           "seed list (default 1..10; MP_ROBUST_SEED as fallback)");
    robustness->add_option("--radius", cfg.radius, "FastDTW radius (default 30)");
    robustness->add_option("--jobs", cfg.jobs, "worker threads (default 1)");
    robustness->add_option("--duplicate-placement", cfg.placement, "adjacent|random")
        ->check(CLI::IsMember({"adjacent", "random"}));
    robustness->add_option("--format", cfg.format, "json|csv|both (default both)")
        ->check(CLI::IsMember({"json", "csv", "both"}));

    CLI::App* ingest =
        app.add_subcommand("ingest", "preprocess a raw dataset into a value series");
    add_common_options(ingest, cfg, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (mp->parsed()) {
            return cmd_mp(cfg);
        }
        if (noise->parsed()) {
            return cmd_noise(cfg);
        }
        if (robustness->parsed()) {
            return cmd_robustness(cfg);
        }
        if (ingest->parsed()) {
            return cmd_ingest(cfg);
        }
        std::cerr << "no subcommand selected\n";
        return kExitConfig;
    } catch (const degenerate_support_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const normalization_undefined_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMetricUndefined;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
