#pragma once

#include <vector>

#include "gsat/behavior.hpp"

namespace gsat {

// One concrete table realizing a minimal tractable clone type. Clones with
// projection-typed hyperplanes (6, 11, 12, 13) come in 2^3 variants, one per
// projection mix across the three hyperplane families; all other clones have
// a single variant. 45 variants total.
struct CloneVariant {
    int clone_id = 0;       // 1..17
    int variant_index = 0;  // within the clone, deterministic order
    BehaviorTable table;
};

std::vector<CloneVariant> clone_variants(int clone_id);

// All 45 variants, clones ascending, variant index ascending.
const std::vector<CloneVariant>& all_clone_variants();

} // namespace gsat
