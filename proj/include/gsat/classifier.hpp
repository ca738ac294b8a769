#pragma once

#include <optional>

#include "gsat/clones.hpp"

namespace gsat {

// Verdict of the decision procedure: scan clones 1..17 (variants in index
// order) for a table preserving every member of Psi.
struct Classification {
    bool tractable = false;
    int clone_id = 0;       // valid iff tractable
    int variant_index = 0;  // valid iff tractable
    BehaviorTable table;    // the witnessing table, re-checkable
};

Classification classify(const std::vector<TypeTable>& psi,
                        uint64_t budget = kDefaultPreserveBudget);

} // namespace gsat
