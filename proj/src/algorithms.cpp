#include "swarmseek/algorithms.hpp"

#include <algorithm>

namespace swarmseek {

namespace {

double clamp_vel(double v, double v_max) {
    if (v_max > 0.0) return std::clamp(v, -v_max, v_max);
    return v;
}

}  // namespace

RandomGains draw_gains(RngEngine& rng, const AlgorithmParams& p, bool with_r3) {
    RandomGains g;
    g.r1 = uniform_in(rng, 0.0, p.c1);
    g.r2 = uniform_in(rng, 0.0, p.c2);
    if (with_r3) g.r3 = uniform_in(rng, 0.0, p.c3);
    return g;
}

double arpso_inertia(double f_i, double f_worst, double f_best, double omega_min,
                     double omega_max) {
    if (f_best == f_worst) return omega_max;
    const double t = (f_i - f_worst) / (f_best - f_worst);
    return omega_min + (omega_max - omega_min) * t;
}

UavState step_pso(const UavState& s, const Vec2& x_ib, const Vec2& x_gb,
                  const AlgorithmParams& p, const RandomGains& gx, const RandomGains& gy) {
    UavState out = s;
    const RandomGains* g[2] = {&gx, &gy};
    for (int ax = 0; ax < 2; ++ax) {
        const double x = s.position[ax];
        double v = s.velocity[ax] + g[ax]->r1 * (x_ib[ax] - x) + g[ax]->r2 * (x_gb[ax] - x);
        v = clamp_vel(v, p.v_max);
        out.velocity[ax] = v;
        out.position[ax] = x + v * p.T;
    }
    return out;
}

UavState step_pso(const UavState& s, const Vec2& x_ib, const Vec2& x_gb,
                  const AlgorithmParams& p, RngEngine& rng) {
    const RandomGains gx = draw_gains(rng, p);
    const RandomGains gy = draw_gains(rng, p);
    return step_pso(s, x_ib, x_gb, p, gx, gy);
}

UavState step_spso(const UavState& s, const Vec2& x_ib, const Vec2& x_lb,
                   const AlgorithmParams& p, const RandomGains& gx, const RandomGains& gy) {
    UavState out = s;
    const RandomGains* g[2] = {&gx, &gy};
    for (int ax = 0; ax < 2; ++ax) {
        const double x = s.position[ax];
        double v = p.omega * s.velocity[ax] + g[ax]->r1 * (x_ib[ax] - x) +
                   g[ax]->r2 * (x_lb[ax] - x);
        v = clamp_vel(v, p.v_max);
        out.velocity[ax] = v;
        out.position[ax] = x + v * p.T;
    }
    return out;
}

UavState step_spso(const UavState& s, const Vec2& x_ib, const Vec2& x_lb,
                   const AlgorithmParams& p, RngEngine& rng) {
    const RandomGains gx = draw_gains(rng, p);
    const RandomGains gy = draw_gains(rng, p);
    return step_spso(s, x_ib, x_lb, p, gx, gy);
}

UavState step_arpso(const UavState& s, const Vec2& x_ib, const Vec2& x_gb,
                    const ArpsoInertiaState& inertia, const AlgorithmParams& p,
                    const RandomGains& gx, const RandomGains& gy, const Vec2& x_a) {
    UavState out = s;
    const RandomGains* g[2] = {&gx, &gy};
    for (int ax = 0; ax < 2; ++ax) {
        const double x = s.position[ax];
        double v = inertia.omega_i * s.velocity[ax] + g[ax]->r1 * (x_ib[ax] - x) +
                   g[ax]->r2 * (x_gb[ax] - x) + g[ax]->r3 * (x_a[ax] - x);
        v = clamp_vel(v, p.v_max);
        out.velocity[ax] = v;
        out.position[ax] = x + v * p.T;
    }
    return out;
}

UavState step_arpso(const UavState& s, const Vec2& x_ib, const Vec2& x_gb,
                    const ArpsoInertiaState& inertia, const AlgorithmParams& p, RngEngine& rng,
                    const Vec2& x_a) {
    const RandomGains gx = draw_gains(rng, p, true);
    const RandomGains gy = draw_gains(rng, p, true);
    return step_arpso(s, x_ib, x_gb, inertia, p, gx, gy, x_a);
}

UavState step_apso(const UavState& s, const Vec2& x_ib, const Vec2& x_gb,
                   const AlgorithmParams& p, const RandomGains& gx, const RandomGains& gy) {
    UavState out = s;
    const RandomGains* g[2] = {&gx, &gy};
    for (int ax = 0; ax < 2; ++ax) {
        const double x = s.position[ax];
        const double a = p.w1 * s.acceleration[ax] + g[ax]->r1 * (x_ib[ax] - x) +
                         g[ax]->r2 * (x_gb[ax] - x);
        double v = p.w2 * s.velocity[ax] + a * p.T;
        v = clamp_vel(v, p.v_max);
        out.acceleration[ax] = a;
        out.velocity[ax] = v;
        out.position[ax] = x + v * p.T;
    }
    return out;
}

UavState step_apso(const UavState& s, const Vec2& x_ib, const Vec2& x_gb,
                   const AlgorithmParams& p, RngEngine& rng) {
    const RandomGains gx = draw_gains(rng, p);
    const RandomGains gy = draw_gains(rng, p);
    return step_apso(s, x_ib, x_gb, p, gx, gy);
}

UavState update_personal_best(UavState s, double measured) {
    if (measured > s.best_value) {
        s.best_value = measured;
        s.best_position = s.position;
    }
    return s;
}

}  // namespace swarmseek
