#include "mcqsim/run_config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "mcqsim/errors.hpp"

namespace mcqsim {

namespace {

using nlohmann::json;

// Wraps a JSON object and tracks key consumption; leftovers are typos.
class StrictObject {
  public:
    StrictObject(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ConfigError(path_ + " must be a JSON object");
    }

    const json* get(const std::string& key) {
        consumed_.insert(key);
        auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!consumed_.count(it.key()))
                throw ConfigError("unknown config field '" + path_ + "." + it.key() + "'");
    }

    const std::string& path() const { return path_; }

  private:
    const json& j_;
    std::string path_;
    std::set<std::string> consumed_;
};

double require_number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ConfigError(where + " must be a number");
    return j.get<double>();
}

int require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ConfigError(where + " must be an integer");
    return j.get<int>();
}

void parse_scene(const json& j, SceneConfig& scene) {
    StrictObject o(j, "scene");
    if (const json* v = o.get("a_nm")) scene.a = require_number(*v, "scene.a_nm");
    if (const json* v = o.get("r_a_nm")) scene.r_a = require_number(*v, "scene.r_a_nm");
    if (const json* v = o.get("r_b_nm")) scene.r_b = require_number(*v, "scene.r_b_nm");
    if (const json* v = o.get("m_per_sphere"))
        scene.m_per_sphere = require_int(*v, "scene.m_per_sphere");
    if (const json* v = o.get("d_nm")) {
        if (v->is_string()) {
            if (v->get<std::string>() != "infinite")
                throw ConfigError("scene.d_nm must be a number or \"infinite\"");
            scene.d = kInfiniteSeparation;
        } else {
            scene.d = require_number(*v, "scene.d_nm");
        }
    }
    if (const json* v = o.get("seed")) {
        if (!v->is_number_unsigned() && !v->is_number_integer())
            throw ConfigError("scene.seed must be an integer");
        scene.seed = v->get<std::uint64_t>();
    }
    o.finish();
}

void parse_constants(const json& j, PhysicalConstants& c) {
    StrictObject o(j, "constants");
    if (const json* v = o.get("hbar_ev_fs")) c.hbar = require_number(*v, "constants.hbar_ev_fs");
    if (const json* v = o.get("coulomb_ke2_ev_nm"))
        c.coulomb_ke2 = require_number(*v, "constants.coulomb_ke2_ev_nm");
    o.finish();
    if (!c.valid()) throw ConfigError("constants must be positive");
}

void parse_time_grid(const json& j, TimeGridConfig& grid) {
    StrictObject o(j, "time_grid");
    if (const json* v = o.get("t_max_fs")) grid.t_max_fs = require_number(*v, "time_grid.t_max_fs");
    if (const json* v = o.get("t_max_tau_e"))
        grid.t_max_tau_e = require_number(*v, "time_grid.t_max_tau_e");
    if (const json* v = o.get("n_steps")) grid.n_steps = require_int(*v, "time_grid.n_steps");
    o.finish();
    if (grid.t_max_fs && grid.t_max_tau_e)
        throw ConfigError("time_grid: set only one of t_max_fs / t_max_tau_e");
    if (grid.n_steps < 2) throw ConfigError("time_grid.n_steps must be >= 2");
    if (grid.t_max_fs && !(*grid.t_max_fs > 0.0))
        throw ConfigError("time_grid.t_max_fs must be > 0");
    if (grid.t_max_tau_e && !(*grid.t_max_tau_e > 0.0))
        throw ConfigError("time_grid.t_max_tau_e must be > 0");
}

Model parse_model_name(const std::string& s) {
    if (s == "numerical") return Model::Numerical;
    if (s == "exact") return Model::Exact;
    if (s == "gaussian") return Model::Gaussian;
    throw ConfigError("unknown model '" + s + "' (expected numerical|exact|gaussian)");
}

Measure parse_measure_name(const std::string& s) {
    if (s == "bm") return Measure::BM;
    if (s == "chsh") return Measure::CHSH;
    if (s == "bprv") return Measure::BPRV;
    throw ConfigError("unknown measure '" + s + "' (expected bm|chsh|bprv)");
}

void parse_ensemble(const json& j, EnsembleConfig& e) {
    StrictObject o(j, "ensemble");
    if (const json* v = o.get("n_runs")) e.n_runs = require_int(*v, "ensemble.n_runs");
    if (const json* v = o.get("radius_ratios")) {
        if (!v->is_array()) throw ConfigError("ensemble.radius_ratios must be an array");
        e.radius_ratios.clear();
        for (const json& r : *v) {
            double ratio = require_number(r, "ensemble.radius_ratios[]");
            if (!(ratio > 0.0)) throw ConfigError("ensemble.radius_ratios must be > 0");
            e.radius_ratios.push_back(ratio);
        }
    }
    o.finish();
    if (e.n_runs < 1) throw ConfigError("ensemble.n_runs must be >= 1");
}

} // namespace

bool RunConfig::has_model(Model m) const {
    return std::find(models.begin(), models.end(), m) != models.end();
}

bool RunConfig::has_measure(Measure m) const {
    return std::find(measures.begin(), measures.end(), m) != measures.end();
}

RunConfig parse_run_config(const json& j) {
    RunConfig cfg;
    StrictObject o(j, "config");
    if (const json* v = o.get("scene")) parse_scene(*v, cfg.scene);
    if (const json* v = o.get("constants")) parse_constants(*v, cfg.constants);
    if (const json* v = o.get("time_grid")) parse_time_grid(*v, cfg.time_grid);
    if (const json* v = o.get("models")) {
        if (!v->is_array() || v->empty())
            throw ConfigError("models must be a nonempty array");
        cfg.models.clear();
        for (const json& m : *v) {
            if (!m.is_string()) throw ConfigError("models entries must be strings");
            Model parsed = parse_model_name(m.get<std::string>());
            if (std::find(cfg.models.begin(), cfg.models.end(), parsed) != cfg.models.end())
                throw ConfigError("duplicate model '" + m.get<std::string>() + "'");
            cfg.models.push_back(parsed);
        }
    }
    if (const json* v = o.get("measures")) {
        if (!v->is_array() || v->empty())
            throw ConfigError("measures must be a nonempty array");
        cfg.measures.clear();
        for (const json& m : *v) {
            if (!m.is_string()) throw ConfigError("measures entries must be strings");
            Measure parsed = parse_measure_name(m.get<std::string>());
            if (std::find(cfg.measures.begin(), cfg.measures.end(), parsed) != cfg.measures.end())
                throw ConfigError("duplicate measure '" + m.get<std::string>() + "'");
            cfg.measures.push_back(parsed);
        }
    }
    if (const json* v = o.get("output_dir")) {
        if (!v->is_string()) throw ConfigError("output_dir must be a string");
        cfg.output_dir = v->get<std::string>();
    }
    if (const json* v = o.get("ensemble")) parse_ensemble(*v, cfg.ensemble);
    if (const json* v = o.get("histogram")) {
        StrictObject h(*v, "histogram");
        if (const json* b = h.get("bins")) cfg.histogram_bins = require_int(*b, "histogram.bins");
        h.finish();
        if (cfg.histogram_bins < 0) throw ConfigError("histogram.bins must be >= 0");
    }
    if (const json* v = o.get("linearize")) {
        StrictObject l(*v, "linearize");
        if (const json* in = l.get("input")) {
            if (!in->is_string()) throw ConfigError("linearize.input must be a string");
            std::string s = in->get<std::string>();
            if (s == "exact") cfg.linearize_input = LinearizeInput::Exact;
            else if (s == "gaussian") cfg.linearize_input = LinearizeInput::Gaussian;
            else if (s == "exponential") cfg.linearize_input = LinearizeInput::Exponential;
            else throw ConfigError("linearize.input must be exact|gaussian|exponential");
        }
        if (const json* wf = l.get("window_fraction")) {
            cfg.window_fraction = require_number(*wf, "linearize.window_fraction");
            if (!(cfg.window_fraction > 0.0))
                throw ConfigError("linearize.window_fraction must be > 0");
        }
        l.finish();
    }
    if (const json* v = o.get("caps")) {
        StrictObject c(*v, "caps");
        if (const json* e = c.get("enumeration_bits"))
            cfg.enumeration_cap_bits = require_int(*e, "caps.enumeration_bits");
        if (const json* s = c.get("state_vector_bits"))
            cfg.state_vector_cap_bits = require_int(*s, "caps.state_vector_bits");
        c.finish();
        if (cfg.enumeration_cap_bits < 0 || cfg.state_vector_cap_bits < 0)
            throw ConfigError("caps must be >= 0");
    }
    o.finish();
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error: " + std::string(e.what()));
    }
    return parse_run_config(j);
}

nlohmann::json run_config_to_json(const RunConfig& cfg) {
    json scene{{"a_nm", cfg.scene.a},
               {"r_a_nm", cfg.scene.r_a},
               {"r_b_nm", cfg.scene.r_b},
               {"m_per_sphere", cfg.scene.m_per_sphere},
               {"seed", cfg.scene.seed}};
    if (std::isinf(cfg.scene.d)) scene["d_nm"] = "infinite";
    else scene["d_nm"] = cfg.scene.d;

    json grid{{"n_steps", cfg.time_grid.n_steps}};
    if (cfg.time_grid.t_max_fs) grid["t_max_fs"] = *cfg.time_grid.t_max_fs;
    if (cfg.time_grid.t_max_tau_e) grid["t_max_tau_e"] = *cfg.time_grid.t_max_tau_e;

    json models = json::array();
    for (Model m : cfg.models) models.push_back(model_name(m));
    json measures = json::array();
    for (Measure m : cfg.measures) measures.push_back(measure_name(m));

    std::string lin = cfg.linearize_input == LinearizeInput::Exact ? "exact"
                      : cfg.linearize_input == LinearizeInput::Gaussian ? "gaussian"
                                                                        : "exponential";
    return json{{"scene", scene},
                {"constants",
                 {{"hbar_ev_fs", cfg.constants.hbar},
                  {"coulomb_ke2_ev_nm", cfg.constants.coulomb_ke2}}},
                {"time_grid", grid},
                {"models", models},
                {"measures", measures},
                {"output_dir", cfg.output_dir},
                {"ensemble",
                 {{"n_runs", cfg.ensemble.n_runs}, {"radius_ratios", cfg.ensemble.radius_ratios}}},
                {"histogram", {{"bins", cfg.histogram_bins}}},
                {"linearize", {{"input", lin}, {"window_fraction", cfg.window_fraction}}},
                {"caps",
                 {{"enumeration_bits", cfg.enumeration_cap_bits},
                  {"state_vector_bits", cfg.state_vector_cap_bits}}}};
}

std::string model_name(Model m) {
    switch (m) {
    case Model::Numerical: return "numerical";
    case Model::Exact: return "exact";
    case Model::Gaussian:
    default: return "gaussian";
    }
}

std::string measure_name(Measure m) {
    switch (m) {
    case Measure::BM: return "bm";
    case Measure::CHSH: return "chsh";
    case Measure::BPRV:
    default: return "bprv";
    }
}

} // namespace mcqsim
