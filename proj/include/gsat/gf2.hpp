#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gsat/errors.hpp"

namespace gsat {

// Dense bit vector for equation supports over many variables.
struct Bitvec {
    std::vector<uint64_t> w;

    Bitvec() = default;
    explicit Bitvec(int n) : w((n + 63) / 64, 0) {}

    bool get(int i) const { return w[i / 64] >> (i % 64) & 1; }
    void set(int i) { w[i / 64] |= 1ull << (i % 64); }
    void operator^=(const Bitvec& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
    }
    bool any() const {
        for (uint64_t x : w)
            if (x) return true;
        return false;
    }
    int lowest() const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return int(i * 64 + __builtin_ctzll(w[i]));
        return -1;
    }
    int popcount() const {
        int c = 0;
        for (uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }
    bool operator==(const Bitvec& o) const { return w == o.w; }
};

// Conjunction of parity checks: support . x = p over GF(2).
struct AffineSystem {
    int nvars = 0;
    struct Equation {
        Bitvec support;
        int parity = 0;
    };
    std::vector<Equation> eqs;
};

// Satisfying assignment with free variables set to 0, or nullopt when
// elimination derives 0 = 1.
std::optional<std::vector<uint8_t>> gauss_solve(const AffineSystem& sys);

// Extensional Boolean relation over width <= 28 coordinates; tuples are
// bitmasks with coordinate 0 in the lowest bit.
struct BoolRelation {
    int width = 0;
    std::vector<uint32_t> tuples;  // sorted, unique

    void insert(uint32_t t);
    bool contains(uint32_t t) const;
};

// A basis of parity checks constant on S, greedily chosen in order of
// increasing support size (then lexicographic), each independent of those
// already chosen; every emitted check is indecomposable. The solution set of
// the system contains S, with equality iff S is an affine coset.
AffineSystem affine_basis(const BoolRelation& S);

// Closure of the tuple set under coordinatewise x^y^z resp. majority vote.
bool closed_under_bool_minority(const BoolRelation& S);
bool closed_under_bool_majority(const BoolRelation& S);

} // namespace gsat
