#pragma once

#include <array>

#include "gsat/table.hpp"

namespace gsat {

// One conjunct of an edge affine definition over table positions:
//   (\/ diseq)  \/  (all xor pairs distinct  /\  xor of their edge bits = p)
//              \/  (all xor pairs equal)
// has_xor = false for pure-disequality clauses (the last two disjuncts absent).
struct EdgeAffineClause {
    std::vector<std::pair<int, int>> diseq;
    std::vector<std::pair<int, int>> xor_pairs;
    int parity = 0;
    bool has_xor = false;
};

bool eval_clause(const EdgeAffineClause& c, const KType& t);

// One conjunct of a graph bijunctive definition: a disequality prefix plus
// none, one, or two E/N literals with the all-equal escape. Literals are
// irreflexive, so the clause is the plain disjunction
//   diseqs \/ X(u1,v1) \/ Y(u2,v2) \/ (u1=v1 /\ u2=v2).
struct BijLit {
    std::pair<int, int> pos{};
    bool is_edge = true;  // E literal if true, N literal otherwise
};

struct BijunctiveClause {
    std::vector<std::pair<int, int>> diseq;
    int npayload = 0;
    std::array<BijLit, 2> payload{};
};

bool eval_clause(const BijunctiveClause& c, const KType& t);

template <typename Clause>
bool eval_clauses(const std::vector<Clause>& cs, const KType& t) {
    for (auto& c : cs)
        if (!eval_clause(c, t)) return false;
    return true;
}

// Recursive construction of an edge affine definition of T, verified against
// T over all k-types; throws not_edge_affine_error on verification failure,
// which doubles as the edge-affinity test.
std::vector<EdgeAffineClause> compile_edge_affine(const TypeTable& T);

// Same skeleton with 2SAT clause covers; not_bijunctive_error on failure.
std::vector<BijunctiveClause> compile_bijunctive(const TypeTable& T);

} // namespace gsat
