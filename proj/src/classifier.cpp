#include "gsat/classifier.hpp"

namespace gsat {

Classification classify(const std::vector<TypeTable>& psi, uint64_t budget) {
    for (const auto& cv : all_clone_variants()) {
        bool ok = true;
        for (const auto& T : psi)
            if (!preserves(cv.table, T, budget).preserved) {
                ok = false;
                break;
            }
        if (ok) return {true, cv.clone_id, cv.variant_index, cv.table};
    }
    return {};
}

} // namespace gsat
