#pragma once

#include "swarmseek/core.hpp"
#include "swarmseek/rng.hpp"

#include <span>
#include <vector>

namespace swarmseek {

enum class TopologyKind { FullyConnected, Ring, Adaptive };

const char* topology_name(TopologyKind k);
std::optional<TopologyKind> topology_from_name(std::string_view name);

/// Who may exchange best-position information with whom.
struct TopologyGraph {
    TopologyKind kind = TopologyKind::FullyConnected;
    int n = 5;  // swarm size, >= 2
    int k = 2;  // Adaptive only: neighbors drawn per agent per call, 1 <= k <= n-1
};

/// One agent's recorded best, as shared over the network.
struct BestRecord {
    Vec2 position{0.0, 0.0};
    double value = 0.0;
};

/// Neighbor set of `agent`, never containing `agent` itself.
/// FullyConnected: all others. Ring: the two adjacent indices mod n (one, for
/// n == 2). Adaptive: k distinct uniformly drawn others, re-drawn on every
/// call. Returned indices are sorted. Throws on an out-of-range agent.
std::vector<int> neighbors(const TopologyGraph& g, int agent, RngEngine& rng);

/// Best position among {agent} plus its neighbors, by recorded value; ties
/// go to the lowest agent index. `bests` holds one record per agent.
Vec2 local_best(const TopologyGraph& g, int agent, std::span<const BestRecord> bests,
                RngEngine& rng);

/// Swarm-wide argmax of recorded best values; ties go to the lowest index.
int global_best_index(std::span<const BestRecord> bests);

}  // namespace swarmseek
