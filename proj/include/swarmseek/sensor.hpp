#pragma once

#include "swarmseek/core.hpp"
#include "swarmseek/rng.hpp"

namespace swarmseek {

struct SensorConfig {
    /// Noise std-dev as a fraction of the noiseless reading; 0 disables noise.
    double noise_fraction = 0.0;
};

/// Signal power seen by an agent at agent_pos: power * exp(-alpha d^2) plus
/// zero-mean Gaussian noise with std-dev noise_fraction times the noiseless
/// reading (the noiseless value is the std-dev base). Never clamped; extreme
/// draws may go negative and are recorded as-is. noise_fraction == 0 consumes
/// no randomness.
double measure(const SourceModel& source, const Vec2& agent_pos, const SensorConfig& cfg,
               RngEngine& rng);

}  // namespace swarmseek
