#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "mcqsim/constants.hpp"
#include "mcqsim/rng.hpp"
#include "mcqsim/vec3.hpp"

namespace mcqsim {

// Two-dot molecule: point dots at center -/+ (a/2)*orientation. Dot 1 is
// the +orientation dot; state |1> puts the mobile electron there.
struct DqdSpec {
    Vec3 center;
    Vec3 orientation; // unit vector
    double a = 1.0;   // dot separation, nm
};

// Dot m in {0,1} sits at center + (m - 1/2)*a*orientation.
inline Vec3 dot_position(const DqdSpec& dqd, int m) {
    return dqd.center + (static_cast<double>(m) - 0.5) * dqd.a * dqd.orientation;
}

// Symbolic A-B separation: cross-group interactions are exactly zero.
inline constexpr double kInfiniteSeparation = std::numeric_limits<double>::infinity();

struct SceneConfig {
    double a = 1.0;   // dot separation, nm
    double r_a = 4.0; // environment sphere radius around A, nm
    double r_b = 2.0; // environment sphere radius around B, nm
    int m_per_sphere = 5;
    double d = kInfiniteSeparation; // A-B center distance, nm
    std::uint64_t seed = 0;
};

// The full layout: targets A and B plus N = 2M environment molecules,
// indices [0, M) on A's sphere and [M, 2M) on B's sphere.
struct Scene {
    DqdSpec target_a;
    DqdSpec target_b;
    std::vector<DqdSpec> env;
    int m_per_sphere = 0;
    double d = kInfiniteSeparation;
    PhysicalConstants constants;
    std::uint64_t seed = 0;
    int redraw_count = 0; // proximity-guard re-draws during construction

    int n_env() const { return static_cast<int>(env.size()); }
    bool infinite_separation() const { return std::isinf(d); }
    // 0 = A's sphere, 1 = B's sphere.
    int group_of(int k) const { return k < m_per_sphere ? 0 : 1; }
};

// Uniform direction on the unit sphere: normalized triple of standard
// normals, re-drawn on the (measure-zero) zero vector.
Vec3 sample_unit_vector(SplitMix64& rng);

// Deterministic construction from (config, constants): targets first, then
// per env molecule in index order draw center, then orientation, re-drawing
// the molecule while any of its dots comes within 0.05*a of an already
// placed dot. Replays bit-identically for equal seeds.
Scene build_scene(const SceneConfig& cfg, const PhysicalConstants& constants = default_constants());

// Human-readable replay format; round-trips every double exactly.
std::string scene_to_text(const Scene& scene);
Scene scene_from_text(const std::string& text);

} // namespace mcqsim
