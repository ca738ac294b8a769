#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gsat/gf2.hpp"

namespace gsat {

struct Lit {
    int var = 0;
    bool pos = true;
};

struct TwoSatInstance {
    int nvars = 0;
    std::vector<std::pair<Lit, Lit>> clauses;
};

// Implication-graph / SCC decision with a deterministic assignment fixed by
// the component completion order; unconstrained variables come out false.
std::optional<std::vector<uint8_t>> twosat_solve(const TwoSatInstance& inst);

// Unit clauses for every coordinate constant on S, and binary clauses over
// coordinate pairs exactly when the clause holds on all of S and neither
// literal alone does. The clause set's Boolean solution set must equal S
// (guaranteed for majority-closed S and verified; not_bijunctive_error
// otherwise). Unit clauses are emitted with both literal slots equal.
TwoSatInstance two_clause_cover(const BoolRelation& S);

} // namespace gsat
