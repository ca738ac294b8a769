#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gsat/errors.hpp"

namespace gsat {

// Pair label between two tuple positions: equal, edge, or non-edge.
enum class Lab : uint8_t { EQ = 0, E = 1, N = 2 };

constexpr const char* lab_name(Lab l) {
    switch (l) {
    case Lab::EQ: return "EQ";
    case Lab::E: return "E";
    default: return "N";
    }
}

// Swaps E and N, fixes EQ.
constexpr Lab lab_flip(Lab l) {
    if (l == Lab::E) return Lab::N;
    if (l == Lab::N) return Lab::E;
    return Lab::EQ;
}

inline constexpr int kMaxArity = 8;        // representation limit
inline constexpr int kDefaultArityGuard = 6;

// Row-major index of the unordered block pair (i,j), i < j, among m blocks.
constexpr int pair_index(int i, int j, int m) {
    return i * m - i * (i + 1) / 2 + (j - i - 1);
}

constexpr int pair_count(int m) { return m * (m - 1) / 2; }

// Complete type of a k-tuple over the random graph: an equality partition of
// the positions in restricted-growth form plus an irreflexive symmetric
// adjacency over the blocks. Canonical by construction: equal types have
// identical encodings.
struct KType {
    uint8_t k = 0;                    // arity
    uint8_t m = 0;                    // block count
    std::array<uint8_t, kMaxArity> block{};  // restricted-growth string
    uint32_t adj = 0;                 // bit pair_index(i,j,m) set iff blocks i,j adjacent

    // Packs to a single integer whose numeric order equals the enumeration
    // order within a fixed arity (partition lexicographic, then adjacency).
    uint64_t key() const {
        uint64_t v = uint64_t(k) << 60;
        uint64_t bs = 0;
        for (int i = 0; i < k; ++i) bs = bs << 3 | block[i];
        return v | bs << 30 | adj;
    }

    bool operator==(const KType& o) const { return key() == o.key(); }
    bool operator<(const KType& o) const { return key() < o.key(); }

    bool discrete() const { return m == k; }
    int edge_count() const { return __builtin_popcount(adj); }

    bool adjacent(int bi, int bj) const {
        if (bi == bj) return false;
        if (bi > bj) std::swap(bi, bj);
        return adj >> pair_index(bi, bj, m) & 1;
    }

    std::string to_string() const;
};

// Label of positions (i,j) of t; symmetric, requires i != j, both < arity.
Lab pair_label(const KType& t, int i, int j);

// Builds the canonical KType with the given position labels. labels is a
// callable (i,j) -> Lab for 0 <= i < j < k; the EQ pattern must be transitive.
template <typename F>
KType ktype_from_labels(int k, F&& labels) {
    KType t;
    t.k = uint8_t(k);
    std::array<uint8_t, kMaxArity> blk{};
    uint8_t next = 0;
    for (int i = 0; i < k; ++i) {
        int found = -1;
        for (int j = 0; j < i; ++j)
            if (labels(j, i) == Lab::EQ) { found = blk[j]; break; }
        blk[i] = found >= 0 ? uint8_t(found) : next++;
    }
    t.m = next;
    t.block = blk;
    // first position of each block serves as representative
    std::array<int, kMaxArity> rep{};
    rep.fill(-1);
    for (int i = 0; i < k; ++i)
        if (rep[blk[i]] < 0) rep[blk[i]] = i;
    for (int bi = 0; bi < t.m; ++bi)
        for (int bj = bi + 1; bj < t.m; ++bj) {
            Lab l = labels(rep[bi], rep[bj]);
            if (l == Lab::EQ)
                throw internal_inconsistency_error("ktype_from_labels: non-transitive equality pattern");
            if (l == Lab::E) t.adj |= 1u << pair_index(bi, bj, t.m);
        }
    return t;
}

// The induced type on positions idx (repeats allowed); output canonical.
KType restrict_ktype(const KType& t, std::span<const int> idx);

// The single type of arity 1.
KType unit_ktype();

// The all-equal diagonal type of arity k.
KType diagonal_ktype(int k);

// Every canonical KType of arity k, each exactly once, in the fixed order:
// partitions by restricted-growth order, then adjacency masks ascending.
// Guarded at k <= 6 unless allow_large (then k <= 8).
std::vector<KType> enumerate_ktypes(int k, bool allow_large = false);

// Count without materializing: sum over m of S(k,m) * 2^C(m,2).
uint64_t count_ktypes(int k);

} // namespace gsat
