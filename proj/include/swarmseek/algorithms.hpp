#pragma once

#include "swarmseek/core.hpp"
#include "swarmseek/rng.hpp"

namespace swarmseek {

/// One axis' worth of random gains. r1 ~ U[0,c1], r2 ~ U[0,c2], r3 ~ U[0,c3].
/// Each axis of an update draws its own independent set.
struct RandomGains {
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;
};

/// Draws r1, r2 (and r3 when with_r3) in that order.
RandomGains draw_gains(RngEngine& rng, const AlgorithmParams& p, bool with_r3 = false);

/// Per-agent adaptive inertia for the ARPSO update.
struct ArpsoInertiaState {
    double omega_i = 0.9;
    double omega_min = 0.4;
    double omega_max = 0.9;
};

/// Fitness-rank inertia: omega_min at the swarm-wide worst recorded best,
/// omega_max at the swarm-wide best, linear in between; omega_max when the
/// swarm has no spread (f_best == f_worst).
double arpso_inertia(double f_i, double f_worst, double f_best, double omega_min,
                     double omega_max);

// One waypoint update per variant. The *_with_gains forms take the gains for
// the X and Y axes explicitly and are fully deterministic; the RngEngine
// forms draw them (X axis first). All update rules act per axis.

/// v <- v + r1(x_ib - x) + r2(x_gb - x);  x <- x + vT. Acceleration untouched.
UavState step_pso(const UavState& s, const Vec2& x_ib, const Vec2& x_gb,
                  const AlgorithmParams& p, const RandomGains& gx, const RandomGains& gy);
UavState step_pso(const UavState& s, const Vec2& x_ib, const Vec2& x_gb,
                  const AlgorithmParams& p, RngEngine& rng);

/// v <- omega v + r1(x_ib - x) + r2(x_lb - x);  x <- x + vT. x_lb is the
/// topology-local best.
UavState step_spso(const UavState& s, const Vec2& x_ib, const Vec2& x_lb,
                   const AlgorithmParams& p, const RandomGains& gx, const RandomGains& gy);
UavState step_spso(const UavState& s, const Vec2& x_ib, const Vec2& x_lb,
                   const AlgorithmParams& p, RngEngine& rng);

/// v <- omega_i v + r1(x_ib - x) + r2(x_gb - x) + r3(x_a - x);  x <- x + vT.
/// The attractive-position term is compiled in but inert at c3 = 0.
UavState step_arpso(const UavState& s, const Vec2& x_ib, const Vec2& x_gb,
                    const ArpsoInertiaState& inertia, const AlgorithmParams& p,
                    const RandomGains& gx, const RandomGains& gy,
                    const Vec2& x_a = Vec2(0.0, 0.0));
UavState step_arpso(const UavState& s, const Vec2& x_ib, const Vec2& x_gb,
                    const ArpsoInertiaState& inertia, const AlgorithmParams& p, RngEngine& rng,
                    const Vec2& x_a = Vec2(0.0, 0.0));

/// Third-order update, strictly a -> v -> x with the new values cascading:
/// a <- w1 a + r1(x_ib - x) + r2(x_gb - x);  v <- w2 v + aT;  x <- x + vT.
UavState step_apso(const UavState& s, const Vec2& x_ib, const Vec2& x_gb,
                   const AlgorithmParams& p, const RandomGains& gx, const RandomGains& gy);
UavState step_apso(const UavState& s, const Vec2& x_ib, const Vec2& x_gb,
                   const AlgorithmParams& p, RngEngine& rng);

/// Replaces the personal best only on strict improvement; ties keep the
/// older record. `measured` must come from the agent's current position.
UavState update_personal_best(UavState s, double measured);

}  // namespace swarmseek
