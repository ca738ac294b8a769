#pragma once

#include <cstdint>
#include <set>

#include "gsat/table.hpp"

namespace gsat {

// Type-level unary operations on the random graph: the global complement,
// switching a block subset against its complement, and the clique /
// independent-set collapses e_E / e_N.
struct UnaryAction {
    enum class Kind { FlipAll, FlipBlocks, Cliqueify, Anticliqueify };
    Kind kind = Kind::FlipAll;
    uint32_t blocks = 0;  // for FlipBlocks: bit i set iff block i in S

    static UnaryAction flip_all() { return {Kind::FlipAll, 0}; }
    static UnaryAction flip_blocks(uint32_t s) { return {Kind::FlipBlocks, s}; }
    static UnaryAction cliqueify() { return {Kind::Cliqueify, 0}; }
    static UnaryAction anticliqueify() { return {Kind::Anticliqueify, 0}; }
};

// Partition unchanged; adjacency toggled or overwritten per the action.
// For FlipBlocks, blocks must be a nonempty proper subset of t's blocks.
KType apply_unary_action(const UnaryAction& a, const KType& t);

enum class ClosureKind { FlipAll, AllBlockFlips, Cliqueify, Anticliqueify, GraphFree };

// Setwise closure of T under the action family. AllBlockFlips quantifies over
// every nonempty proper block subset of every member; GraphFree checks that
// for each partition present, every adjacency choice is present.
bool closed_under(const TypeTable& T, ClosureKind kind);

// The five first-order interdefinability classes of Thomas' theorem.
enum class InterdefClass { Graph, R4, R3, R5, Equality };

const char* interdef_name(InterdefClass c);

// Diagnostic: Equality if every table is graph-free; else R5 if all closed
// under flip-all and all block flips; else R3 (flips only); else R4
// (flip-all only); else Graph.
InterdefClass interdef_class(const std::vector<TypeTable>& psi);

} // namespace gsat
