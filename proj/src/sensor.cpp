#include "swarmseek/sensor.hpp"

namespace swarmseek {

double measure(const SourceModel& source, const Vec2& agent_pos, const SensorConfig& cfg,
               RngEngine& rng) {
    const double d2 = (agent_pos - source.position).squaredNorm();
    const double clean = source.power * std::exp(-source.alpha * d2);
    if (cfg.noise_fraction <= 0.0) return clean;
    return clean + gaussian(rng, 0.0, cfg.noise_fraction * clean);
}

}  // namespace swarmseek
