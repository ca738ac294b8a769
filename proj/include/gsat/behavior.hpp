#pragma once

#include <array>
#include <span>

#include "gsat/table.hpp"

namespace gsat {

// A canonical function of arity 1..3 given by its action on pair labels.
// Injective flavor: out(args) = EQ iff all args are EQ. Constant flavor
// (arity 1): out is constantly EQ.
struct BehaviorTable {
    uint8_t arity = 1;
    bool constant = false;
    std::array<Lab, 27> out{};  // indexed base-3, first argument most significant

    static int index(std::span<const Lab> args) {
        int v = 0;
        for (Lab l : args) v = v * 3 + int(l);
        return v;
    }

    Lab apply(std::span<const Lab> args) const { return out[index(args)]; }

    Lab apply1(Lab a) const { return out[int(a)]; }
    Lab apply2(Lab a, Lab b) const { return out[int(a) * 3 + int(b)]; }
    Lab apply3(Lab a, Lab b, Lab c) const { return out[(int(a) * 3 + int(b)) * 3 + int(c)]; }

    bool operator==(const BehaviorTable& o) const {
        if (arity != o.arity || constant != o.constant) return false;
        int n = 1;
        for (int i = 0; i < arity; ++i) n *= 3;
        for (int i = 0; i < n; ++i)
            if (out[i] != o.out[i]) return false;
        return true;
    }
};

// Componentwise application: the pair label of the result at (i,j) is
// b.out(pair_label(t1,i,j), ..., pair_label(tm,i,j)). All inputs must share
// one arity. Output canonical; for the injective flavor the equality pattern
// is the meet of the input partitions.
KType apply_behavior(const BehaviorTable& b, std::span<const KType> ts);

// -f(-x1,...,-xn): swap E and N on every input and on the output.
BehaviorTable dual_table(const BehaviorTable& b);

struct PreserveResult {
    bool preserved = true;
    std::vector<KType> counterexample;  // m input types whose image leaves T
};

inline constexpr uint64_t kDefaultPreserveBudget = 1000000000ull;

// True iff every m-tuple of members of T maps back into T. Scans tuples in
// lexicographic order over T's canonical ordering; early exit on the first
// failure. Throws resource_guard_error when the application count would
// exceed the budget with no counterexample found.
PreserveResult preserves(const BehaviorTable& b, const TypeTable& T,
                         uint64_t budget = kDefaultPreserveBudget);

} // namespace gsat
