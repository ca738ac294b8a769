#pragma once

#include <optional>
#include <string>

#include "gsat/table.hpp"

namespace gsat {

// Named relations of the reduct lattice, plus the four binary basics.
enum class Builtin {
    H, T, Tprime, P3, Q3, Q4, R3, R4, R5, L, E6,
    EDGE, NONEDGE, NEQ, EQREL,
};

std::optional<Builtin> builtin_by_name(const std::string& name);
const char* builtin_name(Builtin b);
int builtin_arity(Builtin b);

// Extensional table per the verbatim definition; materialized from first
// principles (shape matching for T, parity counting for R/L) and cached.
const TypeTable& builtin_table(Builtin b);

} // namespace gsat
