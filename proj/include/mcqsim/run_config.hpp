#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mcqsim/constants.hpp"
#include "mcqsim/geometry.hpp"

namespace mcqsim {

enum class Model { Numerical, Exact, Gaussian };
enum class Measure { BM, CHSH, BPRV };
enum class LinearizeInput { Exact, Gaussian, Exponential };

struct TimeGridConfig {
    std::optional<double> t_max_fs;
    std::optional<double> t_max_tau_e; // neither set -> 4 tau_E
    int n_steps = 400;
};

struct EnsembleConfig {
    int n_runs = 1;
    std::vector<double> radius_ratios; // R_A/R_B values; empty -> base scene ratio
};

// One config schema for every subcommand; unknown keys are rejected at
// every nesting level so typos never pass silently.
struct RunConfig {
    SceneConfig scene;
    PhysicalConstants constants;
    TimeGridConfig time_grid;
    std::vector<Model> models{Model::Exact, Model::Gaussian};
    std::vector<Measure> measures{Measure::BM, Measure::CHSH, Measure::BPRV};
    std::string output_dir = "out";
    EnsembleConfig ensemble;
    int histogram_bins = 0; // 0 -> ceil(sqrt(n)) capped at 101
    LinearizeInput linearize_input = LinearizeInput::Exact;
    double window_fraction = 0.0625;
    int enumeration_cap_bits = 24;
    int state_vector_cap_bits = 22;

    bool has_model(Model m) const;
    bool has_measure(Measure m) const;
};

RunConfig parse_run_config(const nlohmann::json& j);
RunConfig load_run_config(const std::filesystem::path& path);

// Canonical echo of every effective value; a manifest carrying this JSON
// regenerates the run bit-identically.
nlohmann::json run_config_to_json(const RunConfig& cfg);

std::string model_name(Model m);
std::string measure_name(Measure m);

} // namespace mcqsim
