#pragma once

#include "gsat/instance.hpp"

namespace gsat {

struct OracleOptions {
    int cap = 8;                  // variable cap for the backtracking search
    bool enumerate_mode = false;  // full enumeration over k-types (cap 5)
    // pre-merged variable pairs, applied before the search starts
    std::vector<std::pair<std::string, std::string>> initial_merges;
};

// Complete reference solver: backtracking over pair labelings with eager
// equality merging, deterministic order (pairs lexicographic, labels
// EQ, E, N). Enumerate mode walks enumerate_ktypes(n) instead.
SolveResult oracle_solve(const TableEnv& env, const Instance& inst,
                         const OracleOptions& opt = {});

} // namespace gsat
