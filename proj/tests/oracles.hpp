#pragma once

// Small brute-force reference implementations, kept independent of the library
// code paths they are used to check.

#include <cstddef>
#include <vector>

namespace oracles {

// Exact maximum independent set by plain branching on a highest-degree vertex.
inline std::size_t mis_rec(const std::vector<std::vector<bool>>& adj,
                           std::vector<char>& alive, std::size_t alive_count) {
    std::size_t n = adj.size();
    // find highest-degree alive vertex
    std::size_t pick = n, best_deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        std::size_t deg = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (alive[j] && adj[i][j]) ++deg;
        if (pick == n || deg > best_deg) {
            pick = i;
            best_deg = deg;
        }
    }
    if (pick == n) return 0;
    if (best_deg == 0) return alive_count;  // edgeless remainder

    // exclude pick
    alive[pick] = 0;
    std::size_t best = mis_rec(adj, alive, alive_count - 1);
    // include pick: drop pick and its neighbors
    std::vector<std::size_t> dropped;
    for (std::size_t j = 0; j < adj.size(); ++j) {
        if (alive[j] && adj[pick][j]) {
            alive[j] = 0;
            dropped.push_back(j);
        }
    }
    std::size_t with_pick = 1 + mis_rec(adj, alive, alive_count - 1 - dropped.size());
    if (with_pick > best) best = with_pick;
    for (auto j : dropped) alive[j] = 1;
    alive[pick] = 1;
    return best;
}

inline std::size_t max_independent_set(const std::vector<std::vector<bool>>& adj) {
    std::vector<char> alive(adj.size(), 1);
    return mis_rec(adj, alive, adj.size());
}

}  // namespace oracles
