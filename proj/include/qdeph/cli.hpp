// cli.hpp — scenario configuration, figure presets, and CSV emission.
//
// Configs are flat key=value text ('#' comments, one pair per line). Every
// run writes CSV (LF, header row, shortest round-trip numbers) plus a .meta
// sidecar echoing all resolved parameters; the sidecar is itself a valid
// config that reproduces the run.
#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdeph::cli {

inline constexpr const char* kArtifactVersion = "0.1.0";

// Config/usage problems; maps to exit code 2.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line = 0, const std::string& field = "")
        : std::runtime_error(what), line(line), field(field) {}
    int line;
    std::string field;
};

struct ScenarioConfig {
    std::string computation; // gamma_curve | fisher_sweep | best_time_scan |
                             // threshold | oracle_compare | fig1..fig5
    double s = 4.0;
    double coupling_combo = 0.12; // alpha_s w_bar^(s+1) Gamma((s+1)/2) / 2
    double theta = 0.0;
    std::vector<double> theta_list;        // overrides theta for multi-T curves
    std::vector<std::int64_t> n_list{1000};
    double t_max = 100.0;
    double t_min = 0.0; // 0 = auto (t_max * 1e-4)
    int points_per_decade = 400;
    double w_s_over_wbar = 1.0;
    std::uint64_t seed = 12345;
    int seeds = 1000; // ensemble size for oracle_compare
    std::string mode = "both"; // one_by_one | ghz_collective | both
    std::string dimension = "3D";
    std::string temperature_class = "zero";
    std::vector<double> t_list{0.5, 1.0}; // oracle evaluation times
    int n_branch = 0;
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    int max_panels = 4000;
    int threads = 1;
    std::string out_name; // default: computation name

    // Throws std::domain_error naming the violated invariant.
    void validate() const;
    // key=value text, keys sorted; parse(serialize()) reproduces the config.
    std::string serialize() const;
};

ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::filesystem::path& path);

// Caption-level parameter sets; throws parse_error for unknown names.
ScenarioConfig preset_config(const std::string& name);

struct RunOutputs {
    std::vector<std::filesystem::path> files;
    std::string report; // one-line summary printed to stdout
};

RunOutputs run_scenario(const ScenarioConfig& cfg, const std::filesystem::path& out_dir);

} // namespace qdeph::cli
