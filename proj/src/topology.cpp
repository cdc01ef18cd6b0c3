#include "mgrid/topology.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace mgrid {

long Topology::edge_count() const {
    long deg_sum = 0;
    for (const auto& nb : adj_) deg_sum += static_cast<long>(nb.size());
    return deg_sum / 2;
}

std::vector<std::pair<int, int>> Topology::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < size(); ++i)
        for (int j : neighbors(i))
            if (i < j) e.emplace_back(i, j);
    return e;
}

bool Topology::is_connected() const {
    const int n = size();
    if (n == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : neighbors(u)) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++count;
                q.push(v);
            }
        }
    }
    return count == n;
}

static Topology from_sets(const std::vector<std::set<int>>& sets) {
    std::vector<std::vector<int>> adj(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i)
        adj[i].assign(sets[i].begin(), sets[i].end()); // set iteration is sorted
    return Topology(std::move(adj));
}

Topology Topology::ring(int N) {
    if (N < 2) throw std::domain_error("ring: need N >= 2");
    std::vector<std::set<int>> sets(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        const int prev = (i + N - 1) % N;
        const int next = (i + 1) % N;
        sets[static_cast<std::size_t>(i)].insert(prev);
        sets[static_cast<std::size_t>(i)].insert(next);
    }
    return from_sets(sets);
}

Topology Topology::watts_strogatz(int N, int k, double beta, RandomStream& rng) {
    if (k <= 0 || k % 2 != 0) throw std::domain_error("watts_strogatz: k must be positive even");
    if (k >= N) throw std::domain_error("watts_strogatz: need k < N");
    if (beta < 0 || beta > 1) throw std::domain_error("watts_strogatz: beta out of [0,1]");

    constexpr int kMaxAttempts = 100;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<std::set<int>> sets(static_cast<std::size_t>(N));
        auto add = [&](int a, int b) {
            sets[static_cast<std::size_t>(a)].insert(b);
            sets[static_cast<std::size_t>(b)].insert(a);
        };
        auto remove = [&](int a, int b) {
            sets[static_cast<std::size_t>(a)].erase(b);
            sets[static_cast<std::size_t>(b)].erase(a);
        };
        for (int i = 0; i < N; ++i)
            for (int j = 1; j <= k / 2; ++j) add(i, (i + j) % N);

        // Rewire the far endpoint of each lattice edge with probability beta.
        for (int i = 0; i < N; ++i) {
            for (int j = 1; j <= k / 2; ++j) {
                const int old_target = (i + j) % N;
                if (!rng.bernoulli(beta)) continue;
                if (!sets[static_cast<std::size_t>(i)].count(old_target)) continue; // already rewired away
                if (static_cast<int>(sets[static_cast<std::size_t>(i)].size()) >= N - 1) continue;
                int t;
                do {
                    t = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(N)));
                } while (t == i || sets[static_cast<std::size_t>(i)].count(t));
                remove(i, old_target);
                add(i, t);
            }
        }

        Topology topo = from_sets(sets);
        if (topo.is_connected()) return topo;
    }
    throw std::runtime_error("watts_strogatz: no connected graph within retry budget");
}

} // namespace mgrid
