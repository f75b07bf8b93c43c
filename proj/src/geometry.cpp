#include "mcqsim/geometry.hpp"

#include <cmath>
#include <sstream>

#include "mcqsim/errors.hpp"
#include "mcqsim/format.hpp"

namespace mcqsim {

Vec3 sample_unit_vector(SplitMix64& rng) {
    for (;;) {
        Vec3 v{rng.normal(), rng.normal(), rng.normal()};
        double n = v.norm();
        if (n > 0.0 && std::isfinite(n)) return {v.x / n, v.y / n, v.z / n};
    }
}

namespace {

void validate(const SceneConfig& cfg, const PhysicalConstants& constants) {
    if (!(cfg.a > 0.0)) throw ConfigError("scene.a must be > 0");
    if (cfg.m_per_sphere < 0) throw ConfigError("scene.m_per_sphere must be >= 0");
    if (!(cfg.r_a > cfg.a)) throw ConfigError("scene.r_a must exceed the dot separation a");
    if (!(cfg.r_b > cfg.a)) throw ConfigError("scene.r_b must exceed the dot separation a");
    if (!std::isinf(cfg.d) && !(cfg.d > 0.0)) throw ConfigError("scene.d must be > 0 or infinite");
    if (!constants.valid()) throw ConfigError("physical constants must be positive");
}

// Smallest distance between the two dots of `m` and the dots of `placed`.
double min_dot_distance(const DqdSpec& m, const DqdSpec& placed) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            best = std::min(best, distance(dot_position(m, i), dot_position(placed, j)));
    return best;
}

} // namespace

Scene build_scene(const SceneConfig& cfg, const PhysicalConstants& constants) {
    validate(cfg, constants);

    Scene scene;
    scene.m_per_sphere = cfg.m_per_sphere;
    scene.d = cfg.d;
    scene.constants = constants;
    scene.seed = cfg.seed;

    scene.target_a = DqdSpec{Vec3{0.0, 0.0, 0.0}, Vec3{1.0, 0.0, 0.0}, cfg.a};
    // With symbolic infinite separation B still needs coordinates for its
    // local sphere; 1000*(r_a + r_b + a) keeps them small enough that
    // on-sphere placement survives double rounding.
    double bx = std::isinf(cfg.d) ? 1000.0 * (cfg.r_a + cfg.r_b + cfg.a) : cfg.d;
    scene.target_b = DqdSpec{Vec3{bx, 0.0, 0.0}, Vec3{1.0, 0.0, 0.0}, cfg.a};

    SplitMix64 rng(cfg.seed);
    const double guard = 0.05 * cfg.a;
    const int n_total = 2 * cfg.m_per_sphere;
    scene.env.reserve(static_cast<std::size_t>(n_total));

    for (int k = 0; k < n_total; ++k) {
        const bool on_a = k < cfg.m_per_sphere;
        const Vec3 host = on_a ? scene.target_a.center : scene.target_b.center;
        const double radius = on_a ? cfg.r_a : cfg.r_b;

        for (int attempt = 0;; ++attempt) {
            if (attempt > 10000)
                throw GeometryError("proximity guard could not place environment molecule " +
                                    std::to_string(k + 1));
            DqdSpec mol{host + radius * sample_unit_vector(rng), sample_unit_vector(rng), cfg.a};
            double nearest = std::min(min_dot_distance(mol, scene.target_a),
                                      min_dot_distance(mol, scene.target_b));
            for (const DqdSpec& other : scene.env)
                nearest = std::min(nearest, min_dot_distance(mol, other));
            if (nearest >= guard) {
                scene.env.push_back(mol);
                break;
            }
            ++scene.redraw_count;
        }
    }
    return scene;
}

namespace {

std::string vec_text(const Vec3& v) {
    return fmt17(v.x) + " " + fmt17(v.y) + " " + fmt17(v.z);
}

Vec3 parse_vec(std::istringstream& in, const std::string& what) {
    Vec3 v;
    if (!(in >> v.x >> v.y >> v.z)) throw ConfigError("scene text: bad vector for " + what);
    return v;
}

} // namespace

std::string scene_to_text(const Scene& scene) {
    std::ostringstream out;
    out << "mcqsim-scene v1\n";
    out << "a " << fmt17(scene.target_a.a) << "\n";
    out << "d " << (scene.infinite_separation() ? std::string("infinite") : fmt17(scene.d)) << "\n";
    out << "m_per_sphere " << scene.m_per_sphere << "\n";
    out << "seed " << scene.seed << "\n";
    out << "hbar " << fmt17(scene.constants.hbar) << "\n";
    out << "coulomb_ke2 " << fmt17(scene.constants.coulomb_ke2) << "\n";
    out << "target A center " << vec_text(scene.target_a.center) << " orientation "
        << vec_text(scene.target_a.orientation) << "\n";
    out << "target B center " << vec_text(scene.target_b.center) << " orientation "
        << vec_text(scene.target_b.orientation) << "\n";
    for (int k = 0; k < scene.n_env(); ++k) {
        const DqdSpec& m = scene.env[static_cast<std::size_t>(k)];
        out << "env " << (k + 1) << " " << (scene.group_of(k) == 0 ? "A" : "B") << " center "
            << vec_text(m.center) << " orientation " << vec_text(m.orientation) << "\n";
    }
    return out.str();
}

Scene scene_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "mcqsim-scene v1")
        throw ConfigError("scene text: missing 'mcqsim-scene v1' header");

    Scene scene;
    double a = 0.0;
    auto expect_key = [&](std::istringstream& ls, const std::string& key) {
        std::string k;
        if (!(ls >> k) || k != key) throw ConfigError("scene text: expected '" + key + "'");
    };

    { // a
        std::getline(in, line);
        std::istringstream ls(line);
        expect_key(ls, "a");
        if (!(ls >> a)) throw ConfigError("scene text: bad a");
    }
    { // d
        std::getline(in, line);
        std::istringstream ls(line);
        expect_key(ls, "d");
        std::string tok;
        ls >> tok;
        scene.d = (tok == "infinite") ? kInfiniteSeparation : std::stod(tok);
    }
    {
        std::getline(in, line);
        std::istringstream ls(line);
        expect_key(ls, "m_per_sphere");
        ls >> scene.m_per_sphere;
    }
    {
        std::getline(in, line);
        std::istringstream ls(line);
        expect_key(ls, "seed");
        ls >> scene.seed;
    }
    {
        std::getline(in, line);
        std::istringstream ls(line);
        expect_key(ls, "hbar");
        ls >> scene.constants.hbar;
    }
    {
        std::getline(in, line);
        std::istringstream ls(line);
        expect_key(ls, "coulomb_ke2");
        ls >> scene.constants.coulomb_ke2;
    }
    for (int t = 0; t < 2; ++t) {
        std::getline(in, line);
        std::istringstream ls(line);
        std::string kw, name, ckw, okw;
        ls >> kw >> name >> ckw;
        if (kw != "target" || ckw != "center") throw ConfigError("scene text: bad target record");
        DqdSpec& tgt = (name == "A") ? scene.target_a : scene.target_b;
        tgt.a = a;
        tgt.center = parse_vec(ls, "target center");
        ls >> okw;
        if (okw != "orientation") throw ConfigError("scene text: bad target record");
        tgt.orientation = parse_vec(ls, "target orientation");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw, group, ckw, okw;
        int idx = 0;
        ls >> kw >> idx >> group >> ckw;
        if (kw != "env" || ckw != "center") throw ConfigError("scene text: bad env record");
        DqdSpec m;
        m.a = a;
        m.center = parse_vec(ls, "env center");
        ls >> okw;
        if (okw != "orientation") throw ConfigError("scene text: bad env record");
        m.orientation = parse_vec(ls, "env orientation");
        scene.env.push_back(m);
    }
    if (scene.n_env() != 2 * scene.m_per_sphere)
        throw ConfigError("scene text: env record count does not match m_per_sphere");
    return scene;
}

} // namespace mcqsim
