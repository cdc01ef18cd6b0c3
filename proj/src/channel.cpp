#include "mgrid/channel.hpp"

#include <stdexcept>

namespace mgrid {

int transmit(int state, double p_err, RandomStream& rng) {
    if (p_err < 0 || p_err > 1) throw std::domain_error("transmit: p_err out of [0,1]");
    if (!rng.bernoulli(p_err)) return state;
    // Corrupted: pick one of the two other states of {-1, 0, +1}.
    static constexpr int others[3][2] = {{0, 1}, {-1, 1}, {-1, 0}}; // indexed by state+1
    const int pick = rng.bernoulli(0.5) ? 1 : 0;
    return others[state + 1][pick];
}

std::vector<int> gather_neighbor_states(int i, const Topology& topo,
                                        const std::vector<int>& prev_states,
                                        double p_err, RandomStream& rng) {
    const auto& nb = topo.neighbors(i);
    std::vector<int> received;
    received.reserve(nb.size());
    for (int j : nb)
        received.push_back(transmit(prev_states[static_cast<std::size_t>(j)], p_err, rng));
    return received;
}

} // namespace mgrid
