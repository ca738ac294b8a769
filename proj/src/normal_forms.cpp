#include "gsat/normal_forms.hpp"

#include <map>

#include "gsat/gf2.hpp"
#include "gsat/specialize.hpp"
#include "gsat/twosat.hpp"

namespace gsat {

bool eval_clause(const EdgeAffineClause& c, const KType& t) {
    for (auto& [i, j] : c.diseq)
        if (i != j && pair_label(t, i, j) != Lab::EQ) return true;
    if (!c.has_xor) return false;
    bool all_distinct = true, all_equal = true;
    int par = 0;
    for (auto& [i, j] : c.xor_pairs) {
        Lab l = i == j ? Lab::EQ : pair_label(t, i, j);
        if (l == Lab::EQ)
            all_distinct = false;
        else
            all_equal = false;
        if (l == Lab::E) par ^= 1;
    }
    if (all_distinct && par == c.parity) return true;
    return all_equal;
}

// A literal on an equal pair is false (E and N are irreflexive), so the
// clause reads: diseqs \/ X(u1,v1) \/ Y(u2,v2) \/ (u1=v1 /\ u2=v2).
bool eval_clause(const BijunctiveClause& c, const KType& t) {
    for (auto& [i, j] : c.diseq)
        if (i != j && pair_label(t, i, j) != Lab::EQ) return true;
    if (c.npayload == 0) return false;
    auto label = [&](const std::pair<int, int>& p) {
        return p.first == p.second ? Lab::EQ : pair_label(t, p.first, p.second);
    };
    Lab l1 = label(c.payload[0].pos);
    Lab l2 = label(c.payload[c.npayload == 2 ? 1 : 0].pos);
    const BijLit& lit2 = c.payload[c.npayload == 2 ? 1 : 0];
    if (l1 != Lab::EQ && l1 == (c.payload[0].is_edge ? Lab::E : Lab::N)) return true;
    if (l2 != Lab::EQ && l2 == (lit2.is_edge ? Lab::E : Lab::N)) return true;
    return l1 == Lab::EQ && l2 == Lab::EQ;
}

namespace {

// Specialize positions i ~ j; returns the reduced table plus the original
// position of each reduced position.
std::pair<TypeTable, std::vector<int>> contract_positions(const TypeTable& T, int i, int j) {
    std::vector<int> ids(T.arity());
    for (int p = 0; p < T.arity(); ++p) ids[p] = p;
    ids[std::max(i, j)] = std::min(i, j);
    std::vector<int> rep;
    for (int p = 0; p < T.arity(); ++p)
        if (p != std::max(i, j)) rep.push_back(p);
    return {specialize_table(T, ids), rep};
}

std::optional<std::pair<int, int>> always_equal_pair(const TypeTable& T) {
    for (int i = 0; i < T.arity(); ++i)
        for (int j = i + 1; j < T.arity(); ++j)
            if (implies_equal(T, i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

std::vector<std::pair<int, int>> coordinate_pairs(int k) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) out.emplace_back(i, j);
    return out;
}

uint64_t table_memo_key(const TypeTable& T) {
    uint64_t h = 1469598103934665603ull ^ uint64_t(T.arity());
    for (auto& t : T.types()) {
        h ^= t.key();
        h *= 1099511628211ull;
    }
    return h;
}

// ---- edge affine ----

struct AffineCompiler {
    std::map<uint64_t, std::vector<EdgeAffineClause>> memo;

    std::vector<EdgeAffineClause> run(const TypeTable& T) {
        uint64_t key = table_memo_key(T);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        auto r = build(T);
        memo.emplace(key, r);
        return r;
    }

    std::vector<EdgeAffineClause> build(const TypeTable& T) {
        int k = T.arity();
        if (T.empty()) return {EdgeAffineClause{}};  // empty clause: false
        if (k == 1) return {};
        if (auto eq = always_equal_pair(T)) {
            auto [i, j] = *eq;
            auto [sub, rep] = contract_positions(T, i, j);
            std::vector<EdgeAffineClause> out = lift(run(sub), rep);
            for (int p : {0, 1}) {
                EdgeAffineClause c;
                c.has_xor = true;
                c.xor_pairs.emplace_back(i, j);
                c.parity = p;
                out.push_back(std::move(c));
            }
            return out;
        }
        std::vector<EdgeAffineClause> out;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                auto [sub, rep] = contract_positions(T, i, j);
                for (auto c : lift(run(sub), rep)) {
                    c.diseq.emplace_back(i, j);
                    out.push_back(std::move(c));
                }
            }
        TypeTable inj = injectivize(T);
        if (inj.empty())
            throw not_edge_affine_error("no injective tuples though no pair is forced equal");
        BoolRelation S;
        S.width = pair_count(k);
        for (auto& t : inj.types()) S.insert(bool_of_type(t));
        auto pairs = coordinate_pairs(k);
        for (auto& eq : affine_basis(S).eqs) {
            EdgeAffineClause c;
            c.has_xor = true;
            c.parity = eq.parity;
            for (int b = 0; b < S.width; ++b)
                if (eq.support.get(b)) c.xor_pairs.push_back(pairs[b]);
            out.push_back(std::move(c));
        }
        return out;
    }

    static std::vector<EdgeAffineClause> lift(std::vector<EdgeAffineClause> cs,
                                              const std::vector<int>& rep) {
        for (auto& c : cs) {
            for (auto& p : c.diseq) p = {rep[p.first], rep[p.second]};
            for (auto& p : c.xor_pairs) p = {rep[p.first], rep[p.second]};
        }
        return cs;
    }
};

// ---- graph bijunctive ----

struct BijunctiveCompiler {
    std::map<uint64_t, std::vector<BijunctiveClause>> memo;

    std::vector<BijunctiveClause> run(const TypeTable& T) {
        uint64_t key = table_memo_key(T);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        auto r = build(T);
        memo.emplace(key, r);
        return r;
    }

    static BijunctiveClause unit(int i, int j, bool is_edge) {
        BijunctiveClause c;
        c.npayload = 1;
        c.payload[0] = {{i, j}, is_edge};
        return c;
    }

    std::vector<BijunctiveClause> build(const TypeTable& T) {
        int k = T.arity();
        if (T.empty()) return {BijunctiveClause{}};  // empty clause: false
        if (k == 1) return {};
        if (auto eq = always_equal_pair(T)) {
            auto [i, j] = *eq;
            auto [sub, rep] = contract_positions(T, i, j);
            std::vector<BijunctiveClause> out = lift(run(sub), rep);
            // x_i = x_j as !E /\ !N
            out.push_back(unit(i, j, true));
            out.push_back(unit(i, j, false));
            return out;
        }
        std::vector<BijunctiveClause> out;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                auto [sub, rep] = contract_positions(T, i, j);
                for (auto c : lift(run(sub), rep)) {
                    c.diseq.emplace_back(i, j);
                    out.push_back(std::move(c));
                }
            }
        TypeTable inj = injectivize(T);
        if (inj.empty())
            throw not_bijunctive_error("no injective tuples though no pair is forced equal");
        BoolRelation S;
        S.width = pair_count(k);
        for (auto& t : inj.types()) S.insert(bool_of_type(t));
        auto pairs = coordinate_pairs(k);
        for (auto& [a, b] : two_clause_cover(S).clauses) {
            BijunctiveClause c;
            if (a.var == b.var && a.pos == b.pos) {
                c.npayload = 1;
                c.payload[0] = {pairs[a.var], a.pos};
            } else {
                c.npayload = 2;
                c.payload[0] = {pairs[a.var], a.pos};
                c.payload[1] = {pairs[b.var], b.pos};
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    static std::vector<BijunctiveClause> lift(std::vector<BijunctiveClause> cs,
                                              const std::vector<int>& rep) {
        for (auto& c : cs) {
            for (auto& p : c.diseq) p = {rep[p.first], rep[p.second]};
            for (int i = 0; i < c.npayload; ++i)
                c.payload[i].pos = {rep[c.payload[i].pos.first], rep[c.payload[i].pos.second]};
        }
        return cs;
    }
};

template <typename Clause>
void verify_clauses(const TypeTable& T, const std::vector<Clause>& cs, const char* what) {
    for (auto& t : enumerate_ktypes(T.arity(), true)) {
        bool in = eval_clauses(cs, t);
        if (in != T.contains(t)) {
            if constexpr (std::is_same_v<Clause, EdgeAffineClause>)
                throw not_edge_affine_error(what);
            else
                throw not_bijunctive_error(what);
        }
    }
}

} // namespace

std::vector<EdgeAffineClause> compile_edge_affine(const TypeTable& T) {
    AffineCompiler c;
    std::vector<EdgeAffineClause> out;
    try {
        out = c.run(T);
    } catch (const not_bijunctive_error&) {
        throw not_edge_affine_error("relation is not edge affine");
    }
    verify_clauses(T, out, "relation is not edge affine: verification failed");
    return out;
}

std::vector<BijunctiveClause> compile_bijunctive(const TypeTable& T) {
    BijunctiveCompiler c;
    auto out = c.run(T);
    verify_clauses(T, out, "relation is not graph bijunctive: verification failed");
    return out;
}

} // namespace gsat
