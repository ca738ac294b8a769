#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "gsat/table.hpp"

namespace testutil {

using gsat::KType;
using gsat::Lab;
using gsat::TypeTable;

// Discrete type on k positions with the given edges (0-based).
inline KType discrete(int k, std::vector<std::pair<int, int>> edges) {
    return gsat::ktype_from_labels(k, [&](int i, int j) {
        for (auto& [a, b] : edges)
            if ((a == i && b == j) || (a == j && b == i)) return Lab::E;
        return Lab::N;
    });
}

// Type with explicit merged position groups and edges between group
// representatives (first member of each group).
inline KType merged(int k, std::vector<std::vector<int>> groups,
                    std::vector<std::pair<int, int>> edges) {
    std::vector<int> rep(k);
    std::iota(rep.begin(), rep.end(), 0);
    for (auto& g : groups)
        for (int v : g) rep[v] = g[0];
    return gsat::ktype_from_labels(k, [&](int i, int j) {
        int a = rep[i], b = rep[j];
        if (a == b) return Lab::EQ;
        for (auto& [x, y] : edges)
            if ((rep[x] == a && rep[y] == b) || (rep[x] == b && rep[y] == a)) return Lab::E;
        return Lab::N;
    });
}

inline TypeTable table_of(int k, std::vector<KType> ts) {
    return TypeTable(k, std::move(ts));
}

// Independent shape oracle: canonical form of a labeled graph on n vertices
// under all vertex permutations, edges as a bitmask in row-major pair order.
inline uint32_t graph_canon(int n, uint32_t mask) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint32_t best = ~0u;
    do {
        uint32_t m = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (mask >> gsat::pair_index(i, j, n) & 1) {
                    int a = perm[i], b = perm[j];
                    if (a > b) std::swap(a, b);
                    m |= 1u << gsat::pair_index(a, b, n);
                }
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All labeled graphs on n vertices matching any of the iso classes given by
// representative masks.
inline std::set<uint32_t> labeled_matches(int n, std::vector<uint32_t> reps) {
    std::set<uint32_t> canons;
    for (uint32_t r : reps) canons.insert(graph_canon(n, r));
    std::set<uint32_t> out;
    for (uint32_t m = 0; m < (1u << gsat::pair_count(n)); ++m)
        if (canons.count(graph_canon(n, m))) out.insert(m);
    return out;
}

// Brute-force Boolean satisfiability of a predicate over nvars variables.
inline bool brute_sat(int nvars, const std::function<bool(uint32_t)>& accepts) {
    for (uint32_t a = 0; a < (1u << nvars); ++a)
        if (accepts(a)) return true;
    return false;
}

// Deterministic xorshift generator for randomized suites.
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    uint32_t below(uint32_t n) { return uint32_t(next() % n); }
};

} // namespace testutil
