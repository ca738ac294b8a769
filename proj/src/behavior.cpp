#include "gsat/behavior.hpp"

namespace gsat {

KType apply_behavior(const BehaviorTable& b, std::span<const KType> ts) {
    if (ts.size() != b.arity)
        throw parse_error("apply_behavior: wrong number of arguments");
    int k = ts[0].k;
    for (auto& t : ts)
        if (t.k != k) throw parse_error("apply_behavior: arity mismatch among inputs");

    if (b.constant) return diagonal_ktype(k);

    // Meet of the input partitions: positions are equal in the output iff
    // they are equal in every input, so the block signature is the tuple of
    // input block ids.
    KType r;
    r.k = uint8_t(k);
    std::array<uint64_t, kMaxArity> sig{};
    for (int i = 0; i < k; ++i) {
        uint64_t s = 0;
        for (auto& t : ts) s = s << 8 | t.block[i];
        sig[i] = s;
    }
    uint8_t next = 0;
    std::array<int, kMaxArity> rep{};
    for (int i = 0; i < k; ++i) {
        int found = -1;
        for (int j = 0; j < i; ++j)
            if (sig[j] == sig[i]) { found = r.block[j]; break; }
        if (found < 0) {
            rep[next] = i;
            r.block[i] = next++;
        } else {
            r.block[i] = uint8_t(found);
        }
    }
    r.m = next;
    std::array<Lab, 3> args{};
    for (int bi = 0; bi < r.m; ++bi)
        for (int bj = bi + 1; bj < r.m; ++bj) {
            int i = rep[bi], j = rep[bj];
            for (size_t a = 0; a < ts.size(); ++a) args[a] = pair_label(ts[a], i, j);
            Lab l = b.apply(std::span<const Lab>(args.data(), ts.size()));
            if (l == Lab::EQ)
                throw internal_inconsistency_error(
                    "apply_behavior: EQ output on a pair distinct in some input");
            if (l == Lab::E) r.adj |= 1u << pair_index(bi, bj, r.m);
        }
    return r;
}

BehaviorTable dual_table(const BehaviorTable& b) {
    BehaviorTable d = b;
    int n = 1;
    for (int i = 0; i < b.arity; ++i) n *= 3;
    for (int i = 0; i < n; ++i) {
        // flip each base-3 digit of the index
        int src = 0, v = i;
        std::array<int, 3> digits{};
        for (int p = b.arity - 1; p >= 0; --p) {
            digits[p] = v % 3;
            v /= 3;
        }
        for (int p = 0; p < b.arity; ++p)
            src = src * 3 + int(lab_flip(Lab(digits[p])));
        d.out[i] = lab_flip(b.out[src]);
    }
    return d;
}

PreserveResult preserves(const BehaviorTable& b, const TypeTable& T, uint64_t budget) {
    const auto& ts = T.types();
    size_t n = ts.size();
    if (n == 0) return {};
    uint64_t used = 0;
    std::array<KType, 3> args{};
    std::array<size_t, 3> ix{};
    int m = b.arity;
    while (true) {
        for (int a = 0; a < m; ++a) args[a] = ts[ix[a]];
        if (++used > budget)
            throw resource_guard_error("preservation budget exceeded with no counterexample");
        KType img = apply_behavior(b, std::span<const KType>(args.data(), m));
        if (!T.contains(img)) {
            PreserveResult r;
            r.preserved = false;
            for (int a = 0; a < m; ++a) r.counterexample.push_back(args[a]);
            return r;
        }
        // advance odometer, last index fastest
        int a = m - 1;
        while (a >= 0 && ++ix[a] == n) ix[a--] = 0;
        if (a < 0) break;
    }
    return {};
}

} // namespace gsat
