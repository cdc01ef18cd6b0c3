#pragma once

#include "mgrid/rng.hpp"
#include "mgrid/topology.hpp"

#include <vector>

namespace mgrid {

// One directed link use. With probability 1 - p_err the sent state arrives
// intact; otherwise one of the two other states, each with probability
// p_err / 2. Consumes one uniform draw on success, two on error.
int transmit(int state, double p_err, RandomStream& rng);

// Receives S_j for every j in N_i, neighbors in ascending order, one
// independent channel per direction.
std::vector<int> gather_neighbor_states(int i, const Topology& topo,
                                        const std::vector<int>& prev_states,
                                        double p_err, RandomStream& rng);

} // namespace mgrid
