#include "swarmseek/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace swarmseek {

const char* topology_name(TopologyKind k) {
    switch (k) {
        case TopologyKind::FullyConnected: return "fc";
        case TopologyKind::Ring: return "ring";
        case TopologyKind::Adaptive: return "adaptive";
    }
    return "?";
}

std::optional<TopologyKind> topology_from_name(std::string_view name) {
    if (name == "fc") return TopologyKind::FullyConnected;
    if (name == "ring") return TopologyKind::Ring;
    if (name == "adaptive") return TopologyKind::Adaptive;
    return std::nullopt;
}

std::vector<int> neighbors(const TopologyGraph& g, int agent, RngEngine& rng) {
    if (agent < 0 || agent >= g.n) throw std::out_of_range("neighbors: agent index out of range");
    std::vector<int> out;
    switch (g.kind) {
        case TopologyKind::FullyConnected:
            out.reserve(static_cast<std::size_t>(g.n) - 1);
            for (int j = 0; j < g.n; ++j)
                if (j != agent) out.push_back(j);
            break;
        case TopologyKind::Ring: {
            const int prev = (agent + g.n - 1) % g.n;
            const int next = (agent + 1) % g.n;
            out.push_back(prev);
            if (next != prev) out.push_back(next);  // n == 2 collapses to one neighbor
            std::sort(out.begin(), out.end());
            break;
        }
        case TopologyKind::Adaptive: {
            // Partial Fisher-Yates over the n-1 candidate indices.
            std::vector<int> pool;
            pool.reserve(static_cast<std::size_t>(g.n) - 1);
            for (int j = 0; j < g.n; ++j)
                if (j != agent) pool.push_back(j);
            const int k = std::min<int>(g.k, static_cast<int>(pool.size()));
            for (int i = 0; i < k; ++i) {
                const std::size_t j = i + uniform_index(rng, pool.size() - i);
                std::swap(pool[i], pool[j]);
            }
            out.assign(pool.begin(), pool.begin() + k);
            std::sort(out.begin(), out.end());
            break;
        }
    }
    return out;
}

Vec2 local_best(const TopologyGraph& g, int agent, std::span<const BestRecord> bests,
                RngEngine& rng) {
    int best = agent;
    for (int j : neighbors(g, agent, rng)) {
        // Strict > with candidates visited in index order after the agent
        // itself: the lowest index wins ties, including against the agent.
        const bool better = bests[j].value > bests[best].value ||
                            (bests[j].value == bests[best].value && j < best);
        if (better) best = j;
    }
    return bests[best].position;
}

int global_best_index(std::span<const BestRecord> bests) {
    int best = 0;
    for (int j = 1; j < static_cast<int>(bests.size()); ++j)
        if (bests[j].value > bests[best].value) best = j;
    return best;
}

}  // namespace swarmseek
