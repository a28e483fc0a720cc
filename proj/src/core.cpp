#include "swarmseek/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string_view>

namespace swarmseek {

Vec2 clamp_to_space(const Vec2& p, const SearchSpace& space) {
    const Vec2 lo = space.origin;
    const Vec2 hi = space.origin + Vec2(space.side, space.side);
    return Vec2(std::clamp(p.x(), lo.x(), hi.x()), std::clamp(p.y(), lo.y(), hi.y()));
}

Vec2 perimeter_point(const SearchSpace& space, double u) {
    if (!(u >= 0.0 && u < 1.0))
        throw std::invalid_argument("perimeter_point: u must lie in [0, 1)");
    const double s = space.side;
    const double d = u * 4.0 * s;  // arc length along the boundary
    const Vec2 o = space.origin;
    if (d < s) return o + Vec2(d, 0.0);                      // bottom, left to right
    if (d < 2.0 * s) return o + Vec2(s, d - s);              // right, upward
    if (d < 3.0 * s) return o + Vec2(s - (d - 2.0 * s), s);  // top, right to left
    return o + Vec2(0.0, s - (d - 3.0 * s));                 // left, downward
}

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Pso: return "pso";
        case Variant::Spso: return "spso";
        case Variant::Arpso: return "arpso";
        case Variant::Apso: return "apso";
    }
    return "?";
}

std::optional<Variant> variant_from_name(std::string_view name) {
    if (name == "pso") return Variant::Pso;
    if (name == "spso") return Variant::Spso;
    if (name == "arpso") return Variant::Arpso;
    if (name == "apso") return Variant::Apso;
    return std::nullopt;
}

AlgorithmParams default_params(Variant v) {
    AlgorithmParams p;
    p.variant = v;
    return p;  // the tuned SPSO pair (omega, c1=c2) and the APSO (w1, w2) are the field defaults
}

}  // namespace swarmseek
