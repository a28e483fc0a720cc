#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>

namespace swarmseek {

using Vec2 = Eigen::Vector2d;

inline bool is_finite(const Vec2& v) {
    return std::isfinite(v.x()) && std::isfinite(v.y());
}

/// Square search region, axis-aligned, spanning [origin, origin + side] on
/// both axes.
struct SearchSpace {
    double side = 100.0;
    Vec2 origin{0.0, 0.0};

    Vec2 center() const { return origin + Vec2(side / 2.0, side / 2.0); }
    bool contains(const Vec2& p) const {
        return p.x() >= origin.x() && p.x() <= origin.x() + side &&
               p.y() >= origin.y() && p.y() <= origin.y() + side;
    }
};

/// Per-axis clamp onto the square. Idempotent; interior points pass through.
Vec2 clamp_to_space(const Vec2& p, const SearchSpace& space);

/// Maps u in [0,1) onto the square's perimeter by arc length. Corner order:
/// bottom edge from the origin, then right, top, left. Throws on u outside
/// [0,1).
Vec2 perimeter_point(const SearchSpace& space, double u);

struct SourceMotion {
    enum class Kind { Static, RestrictedRandom } kind = Kind::Static;
    // RestrictedRandom only: the source wanders inside this circle.
    double radius = 4.0;
    double speed = 0.0;       // m/s
    Vec2 center{0.0, 0.0};
    // Runtime wander state, advanced by move_source. heading is redrawn
    // every 1 s of source time; time_to_redraw <= 0 forces a draw on the
    // next move.
    double heading = 0.0;
    double time_to_redraw = 0.0;
};

/// Signal source: power Ss decaying as Ss * exp(-alpha * d^2).
struct SourceModel {
    Vec2 position{50.0, 50.0};
    double power = 100.0;      // Ss
    double alpha = 0.001;      // 1/m^2
    SourceMotion motion{};
};

enum class Variant { Pso, Spso, Arpso, Apso };

const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);

/// Hyperparameters for all variants; fields not used by a variant are inert.
struct AlgorithmParams {
    Variant variant = Variant::Apso;
    double w1 = 0.675;         // acceleration damping
    double w2 = -0.285;        // velocity damping
    double omega = 0.721;      // SPSO inertia
    double c1 = 1.193;
    double c2 = 1.193;
    double c3 = 0.0;           // obstacle-attraction gain, kept at 0
    double T = 1.0;            // step scale
    double omega_min = 0.4;    // ARPSO adaptive-inertia bounds
    double omega_max = 0.9;
    double v_max = 0.0;        // per-axis velocity clamp; <= 0 disables
};

/// Defaults for each variant (the tuned values the baselines ship with).
AlgorithmParams default_params(Variant v);

struct UavState {
    Vec2 position{0.0, 0.0};
    Vec2 velocity{0.0, 0.0};       // waypoint displacement per iteration
    Vec2 acceleration{0.0, 0.0};   // used by the third-order variant only
    Vec2 best_position{0.0, 0.0};
    double best_value = -std::numeric_limits<double>::infinity();
    double cumulative_distance = 0.0;
};

}  // namespace swarmseek
