#pragma once

#include "mgrid/rng.hpp"

#include <utility>
#include <vector>

namespace mgrid {

// Immutable undirected graph over agent indices 0..N-1. Neighbor lists are
// sorted ascending; symmetric, no self-loops, no duplicate edges.
class Topology {
public:
    int size() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int i) const { return adj_[static_cast<std::size_t>(i)]; }
    int degree(int i) const { return static_cast<int>(adj_[static_cast<std::size_t>(i)].size()); }
    long edge_count() const;
    bool is_connected() const;

    // Each edge once, with i < j, lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    // Agent i adjacent to i-1 and i+1 with wraparound; N = 2 degenerates to
    // the two-node path (one edge).
    static Topology ring(int N);

    // Standard Watts-Strogatz: k/2-neighbor ring lattice, each lattice edge's
    // far endpoint rewired with probability beta (self-loops and duplicates
    // rejected). Disconnected results are resampled, up to 100 attempts.
    static Topology watts_strogatz(int N, int k, double beta, RandomStream& rng);

    // Adjacency lists are taken as given; callers are responsible for
    // symmetry when building by hand (tests do).
    explicit Topology(std::vector<std::vector<int>> adj) : adj_(std::move(adj)) {}

private:
    std::vector<std::vector<int>> adj_;
};

} // namespace mgrid
