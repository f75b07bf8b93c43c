#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcqsim/run_config.hpp"

namespace mcqsim {

// Everything a command writes: data files plus a manifest.json whose
// config echo regenerates the data files bit-identically.
struct OutputBundle {
    std::filesystem::path directory;
    std::vector<std::string> files; // relative names, manifest.json excluded
    nlohmann::json manifest;
};

OutputBundle cmd_simulate(const RunConfig& cfg);
OutputBundle cmd_ensemble(const RunConfig& cfg);
OutputBundle cmd_scatter(const RunConfig& cfg);
OutputBundle cmd_histogram(const RunConfig& cfg);
OutputBundle cmd_linearize(const RunConfig& cfg);

} // namespace mcqsim
