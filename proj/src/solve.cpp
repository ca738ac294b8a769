#include "gsat/solve.hpp"

#include <algorithm>
#include <map>

#include "gsat/gf2.hpp"
#include "gsat/normal_forms.hpp"
#include "gsat/oracle.hpp"
#include "gsat/specialize.hpp"
#include "gsat/twosat.hpp"

namespace gsat {

namespace {

constexpr uint8_t kAllLabels = 0b111;
constexpr uint8_t lab_bit(Lab l) { return uint8_t(1u << int(l)); }

struct Ctx {
    const TableEnv& env;
    const Instance& inst;
    SolveHooks hooks;
    std::map<std::string, int> index;
    struct Con {
        const TypeTable* table;
        std::vector<int> args;
    };
    std::vector<Con> cons;
    std::vector<int> uf;

    Ctx(const TableEnv& env_, const Instance& inst_, const SolveHooks& hooks_)
        : env(env_), inst(inst_), hooks(hooks_) {
        check_instance(env, inst);
        int n = int(inst.variables.size());
        uf.resize(n);
        for (int i = 0; i < n; ++i) {
            uf[i] = i;
            index[inst.variables[i]] = i;
        }
        for (auto& c : inst.constraints) {
            Con ic;
            ic.table = &env.at(c.rel);
            for (auto& a : c.args) ic.args.push_back(index.at(a));
            cons.push_back(std::move(ic));
        }
    }

    int find(int v) {
        while (uf[v] != v) {
            uf[v] = uf[uf[v]];
            v = uf[v];
        }
        return v;
    }

    // representative = lexicographically least variable name
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (inst.variables[b] < inst.variables[a]) std::swap(a, b);
        uf[b] = a;
        if (hooks.merge_log)
            hooks.merge_log->emplace_back(inst.variables[a], inst.variables[b]);
        return true;
    }

    std::vector<int> alive() {
        std::vector<int> out;
        for (size_t v = 0; v < uf.size(); ++v)
            if (find(int(v)) == int(v)) out.push_back(int(v));
        return out;
    }

    struct Spec {
        TypeTable table;
        std::vector<int> vars;  // distinct class representatives
    };

    Spec specialize(const Con& c) {
        std::vector<int> ids(c.args.size());
        for (size_t i = 0; i < c.args.size(); ++i) ids[i] = find(c.args[i]);
        Spec s;
        s.vars = distinct_first_occurrence(ids);
        s.table = specialize_table(*c.table, ids);
        return s;
    }

    // assemble the model from per-representative-pair labels
    template <typename LabelFn>
    Model build_model(LabelFn&& label) {
        Model m;
        std::vector<int> reps = alive();
        std::map<int, int> class_of_rep;
        for (int r : reps) {
            class_of_rep[r] = int(m.classes.size());
            m.classes.emplace_back();
        }
        for (size_t v = 0; v < uf.size(); ++v)
            m.classes[class_of_rep[find(int(v))]].push_back(inst.variables[v]);
        for (size_t i = 0; i < reps.size(); ++i)
            for (size_t j = i + 1; j < reps.size(); ++j)
                if (label(reps[i], reps[j]) == Lab::E)
                    m.edges.emplace_back(int(i), int(j));
        return m;
    }
};

SolveResult unsat(const char* method) {
    SolveResult r;
    r.method = method;
    return r;
}

SolveResult checked_sat(const TableEnv& env, const Instance& inst, Model m,
                        const char* method) {
    SolveResult r;
    r.sat = true;
    r.model = std::move(m);
    r.method = method;
    if (!validate_model(env, inst, *r.model))
        throw internal_inconsistency_error(std::string(method) +
                                           " produced a model that fails validation");
    return r;
}

} // namespace

SolveResult solve_trivial(const TableEnv& env, const Instance& inst) {
    check_instance(env, inst);
    for (auto& c : inst.constraints)
        if (env.at(c.rel).empty()) return unsat("trivial");
    Model m;
    if (!inst.variables.empty()) m.classes.push_back(inst.variables);
    return checked_sat(env, inst, std::move(m), "trivial");
}

namespace {

const BehaviorTable& join_table(SemiOrder order) {
    static const BehaviorTable t2 = clone_variants(2)[0].table;
    static const BehaviorTable t3 = clone_variants(3)[0].table;
    static const BehaviorTable t4 = clone_variants(4)[0].table;
    static const BehaviorTable t5 = clone_variants(5)[0].table;
    switch (order) {
    case SemiOrder::ChainTopE: return t2;
    case SemiOrder::ChainTopN: return t3;
    case SemiOrder::FlatTopE: return t4;
    case SemiOrder::FlatTopN: return t5;
    }
    return t2;
}

Lab join_of_domain(const BehaviorTable& join, uint8_t dom) {
    Lab acc = Lab::EQ;
    bool first = true;
    for (Lab l : {Lab::EQ, Lab::E, Lab::N}) {
        if (!(dom & lab_bit(l))) continue;
        acc = first ? l : join.apply2(acc, l);
        first = false;
    }
    return acc;
}

} // namespace

SolveResult solve_semilattice(const TableEnv& env, const Instance& inst, SemiOrder order,
                              const SolveHooks& hooks) {
    Ctx ctx(env, inst, hooks);
    const BehaviorTable& join = join_table(order);

    std::map<std::pair<int, int>, uint8_t> dom;
    auto get = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        auto it = dom.find({a, b});
        return it == dom.end() ? kAllLabels : it->second;
    };
    auto set = [&](int a, int b, uint8_t v) {
        if (a > b) std::swap(a, b);
        dom[{a, b}] = v;
    };

    std::vector<std::pair<int, int>> merge_queue;
    // merges shrink domains of surrounding pairs, possibly cascading
    auto flush_merges = [&]() -> bool {  // false = UNSAT
        while (!merge_queue.empty()) {
            auto [x, y] = merge_queue.back();
            merge_queue.pop_back();
            int a = ctx.find(x), b = ctx.find(y);
            if (a == b) continue;
            ctx.unite(a, b);
            int rep = ctx.find(a), other = rep == a ? b : a;
            for (int c : ctx.alive()) {
                if (c == rep) continue;
                uint8_t d = get(rep, c) & get(other, c);
                if (d == 0) return false;
                set(rep, c, d);
                if (d == lab_bit(Lab::EQ)) merge_queue.push_back({rep, c});
            }
        }
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& con : ctx.cons) {
            auto spec = ctx.specialize(con);
            if (spec.table.empty()) return unsat("semilattice");
            int m = int(spec.vars.size());
            if (m < 2) continue;
            // types consistent with all current pair domains
            std::vector<const KType*> consistent;
            for (auto& t : spec.table.types()) {
                bool ok = true;
                for (int p = 0; p < m && ok; ++p)
                    for (int q = p + 1; q < m && ok; ++q)
                        if (!(get(spec.vars[p], spec.vars[q]) &
                              lab_bit(pair_label(t, p, q))))
                            ok = false;
                if (ok) consistent.push_back(&t);
            }
            if (consistent.empty()) return unsat("semilattice");
            for (int p = 0; p < m; ++p)
                for (int q = p + 1; q < m; ++q) {
                    uint8_t supported = 0;
                    for (auto* t : consistent) supported |= lab_bit(pair_label(*t, p, q));
                    uint8_t cur = get(spec.vars[p], spec.vars[q]);
                    uint8_t next = cur & supported;
                    if (next == cur) continue;
                    if (next == 0) return unsat("semilattice");
                    set(spec.vars[p], spec.vars[q], next);
                    changed = true;
                    if (next == lab_bit(Lab::EQ))
                        merge_queue.push_back({spec.vars[p], spec.vars[q]});
                }
        }
        if (!flush_merges()) return unsat("semilattice");
    }

    Model m = ctx.build_model([&](int a, int b) {
        Lab l = join_of_domain(join, get(a, b));
        if (l == Lab::EQ)
            throw internal_inconsistency_error("semilattice: EQ top on an unmerged pair");
        return l;
    });
    return checked_sat(env, inst, std::move(m), "semilattice");
}

SolveResult solve_equality(const TableEnv& env, const Instance& inst, EqMode mode,
                           const SolveHooks& hooks) {
    Ctx ctx(env, inst, hooks);
    bool merged = true;
    while (merged) {
        merged = false;
        for (auto& con : ctx.cons) {
            auto spec = ctx.specialize(con);
            if (spec.table.empty()) return unsat("equality");
            // partitions whose block graph is complete resp. empty
            std::vector<const KType*> compatible;
            for (auto& t : spec.table.types()) {
                uint32_t full = (1u << pair_count(t.m)) - 1;
                if (t.adj == (mode == EqMode::Clique ? full : 0u))
                    compatible.push_back(&t);
            }
            if (compatible.empty()) return unsat("equality");
            int m = int(spec.vars.size());
            for (int p = 0; p < m && !merged; ++p)
                for (int q = p + 1; q < m && !merged; ++q) {
                    bool all_eq = true;
                    for (auto* t : compatible)
                        if (pair_label(*t, p, q) != Lab::EQ) {
                            all_eq = false;
                            break;
                        }
                    if (all_eq) {
                        ctx.unite(spec.vars[p], spec.vars[q]);
                        merged = true;
                    }
                }
            if (merged) break;  // re-specialize everything
        }
    }
    Model m = ctx.build_model(
        [&](int, int) { return mode == EqMode::Clique ? Lab::E : Lab::N; });
    return checked_sat(env, inst, std::move(m), "equality");
}

namespace {

// dense index for unordered pairs of alive representatives
struct PairSpace {
    std::vector<int> reps;
    std::map<int, int> pos;

    explicit PairSpace(std::vector<int> reps_) : reps(std::move(reps_)) {
        for (size_t i = 0; i < reps.size(); ++i) pos[reps[i]] = int(i);
    }
    int count() const { return pair_count(int(reps.size())); }
    int id(int a, int b) const {
        int i = pos.at(a), j = pos.at(b);
        if (i > j) std::swap(i, j);
        return pair_index(i, j, int(reps.size()));
    }
    std::pair<int, int> vars_of(int id) const {
        int n = int(reps.size());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (pair_index(i, j, n) == id) return {reps[i], reps[j]};
        throw internal_inconsistency_error("pair id out of range");
    }
};

} // namespace

SolveResult solve_fig2(const TableEnv& env, const Instance& inst, BoolMode mode,
                       const SolveHooks& hooks) {
    const char* name = "fig2";
    Ctx ctx(env, inst, hooks);

    // contraction loop
    bool again = true;
    while (again) {
        again = false;
        for (auto& con : ctx.cons) {
            auto spec = ctx.specialize(con);
            if (spec.table.empty()) return unsat(name);
            int m = int(spec.vars.size());
            for (int p = 0; p < m && !again; ++p)
                for (int q = p + 1; q < m && !again; ++q)
                    if (implies_equal(spec.table, p, q)) {
                        ctx.unite(spec.vars[p], spec.vars[q]);
                        again = true;
                    }
            if (again) break;
        }
    }

    PairSpace pairs(ctx.alive());
    AffineSystem sys;
    sys.nvars = pairs.count();
    TwoSatInstance twosat;
    twosat.nvars = pairs.count();

    for (auto& con : ctx.cons) {
        auto spec = ctx.specialize(con);
        if (spec.table.empty()) return unsat(name);
        int m = int(spec.vars.size());
        if (m < 2) continue;
        TypeTable inj = injectivize(spec.table);
        if (inj.empty()) return unsat(name);  // inj(Phi) has an empty constraint
        BoolRelation S;
        S.width = pair_count(m);
        for (auto& t : inj.types()) S.insert(bool_of_type(t));
        auto coord_pair = [&](int c) {
            for (int p = 0; p < m; ++p)
                for (int q = p + 1; q < m; ++q)
                    if (pair_index(p, q, m) == c)
                        return pairs.id(spec.vars[p], spec.vars[q]);
            throw internal_inconsistency_error("coordinate out of range");
        };
        if (mode == BoolMode::Minority) {
            if (!closed_under_bool_minority(S))
                throw internal_inconsistency_error(
                    "fig2: extracted Boolean relation is not minority-closed");
            for (auto& eq : affine_basis(S).eqs) {
                AffineSystem::Equation g;
                g.support = Bitvec(sys.nvars);
                for (int c = 0; c < S.width; ++c)
                    if (eq.support.get(c)) g.support.set(coord_pair(c));
                g.parity = eq.parity;
                sys.eqs.push_back(std::move(g));
            }
        } else {
            if (!closed_under_bool_majority(S))
                throw internal_inconsistency_error(
                    "fig2: extracted Boolean relation is not majority-closed");
            TwoSatInstance cover;
            try {
                cover = two_clause_cover(S);
            } catch (const not_bijunctive_error& e) {
                throw internal_inconsistency_error(e.what());
            }
            for (auto& [a, b] : cover.clauses)
                twosat.clauses.push_back(
                    {{coord_pair(a.var), a.pos}, {coord_pair(b.var), b.pos}});
        }
    }

    std::vector<uint8_t> assignment;
    if (mode == BoolMode::Minority) {
        auto sol = gauss_solve(sys);
        if (!sol) return unsat(name);
        assignment = std::move(*sol);
    } else {
        auto sol = twosat_solve(twosat);
        if (!sol) return unsat(name);
        assignment = std::move(*sol);
    }

    Model m = ctx.build_model([&](int a, int b) {
        return assignment[pairs.id(a, b)] ? Lab::E : Lab::N;
    });
    return checked_sat(env, inst, std::move(m), name);
}

namespace {

// Shared fig3 skeleton: per-round specialization and clause recompilation,
// pair-graph components, component solving, merge-and-restart.
template <bool TwoSat>
SolveResult fig3_impl(const TableEnv& env, const Instance& inst, const SolveHooks& hooks) {
    const char* name = TwoSat ? "fig3-2sat" : "fig3";
    Ctx ctx(env, inst, hooks);

    using Clause = std::conditional_t<TwoSat, BijunctiveClause, EdgeAffineClause>;
    std::map<uint64_t, std::vector<Clause>> compile_cache;
    auto compiled = [&](const TypeTable& T) -> const std::vector<Clause>& {
        uint64_t h = 1469598103934665603ull ^ uint64_t(T.arity());
        for (auto& t : T.types()) {
            h ^= t.key();
            h *= 1099511628211ull;
        }
        auto it = compile_cache.find(h);
        if (it != compile_cache.end()) return it->second;
        std::vector<Clause> cs;
        try {
            if constexpr (TwoSat)
                cs = compile_bijunctive(T);
            else
                cs = compile_edge_affine(T);
        } catch (const std::runtime_error& e) {
            throw internal_inconsistency_error(std::string(name) + ": " + e.what());
        }
        return compile_cache.emplace(h, std::move(cs)).first->second;
    };

    for (int round = 0; round <= int(inst.variables.size()) + 1; ++round) {
        // (a) specialize, reject empty tables
        std::vector<Ctx::Spec> specs;
        for (auto& con : ctx.cons) {
            specs.push_back(ctx.specialize(con));
            if (specs.back().table.empty()) return unsat(name);
        }

        PairSpace pairs(ctx.alive());
        int np = pairs.count();

        // instantiated live constraints over pair variables
        struct LiveAffine {
            std::vector<int> support;
            int parity;
        };
        struct LiveClause {
            std::vector<int> vars;  // 1 or 2 pair ids
            std::array<bool, 2> pos;
        };
        std::vector<LiveAffine> affine_live;
        std::vector<LiveClause> twosat_live;

        bool forced_merge = false;
        // (b) + (c): recompile and instantiate
        for (auto& spec : specs) {
            if (int(spec.vars.size()) < 2) continue;
            for (const Clause& c : compiled(spec.table)) {
                // disequality disjuncts on distinct variables discharge the
                // clause: the final assignment keeps surviving variables distinct
                bool discharged = false;
                for (auto& [i, j] : c.diseq) {
                    int a = ctx.find(spec.vars[i]), b = ctx.find(spec.vars[j]);
                    if (a != b) { discharged = true; break; }
                }
                if (discharged) continue;
                if constexpr (TwoSat) {
                    if (c.npayload == 0)
                        throw internal_inconsistency_error("fig3-2sat: dead clause survived");
                    std::array<int, 2> a{};
                    std::array<int, 2> b{};
                    bool degenerate = false;
                    for (int i = 0; i < c.npayload; ++i) {
                        a[i] = ctx.find(spec.vars[c.payload[i].pos.first]);
                        b[i] = ctx.find(spec.vars[c.payload[i].pos.second]);
                        if (a[i] == b[i]) degenerate = true;
                    }
                    if (degenerate)
                        // positions map to distinct representatives right after
                        // specialization, so payload pairs cannot collapse
                        throw internal_inconsistency_error(
                            "fig3-2sat: degenerate payload pair");
                    LiveClause lc;
                    for (int i = 0; i < c.npayload; ++i) {
                        lc.vars.push_back(pairs.id(a[i], b[i]));
                        lc.pos[i] = c.payload[i].is_edge;
                    }
                    twosat_live.push_back(std::move(lc));
                } else {
                    if (!c.has_xor)
                        throw internal_inconsistency_error("fig3: dead clause survived");
                    std::vector<std::pair<int, int>> live;
                    bool degenerate = false;
                    for (auto& [i, j] : c.xor_pairs) {
                        int a = ctx.find(spec.vars[i]), b = ctx.find(spec.vars[j]);
                        if (a == b)
                            degenerate = true;
                        else
                            live.emplace_back(a, b);
                    }
                    if (degenerate) {
                        for (auto& [a, b] : live) {
                            ctx.unite(a, b);
                            forced_merge = true;
                        }
                        continue;
                    }
                    LiveAffine la;
                    la.parity = c.parity;
                    for (auto& [a, b] : live) la.support.push_back(pairs.id(a, b));
                    affine_live.push_back(std::move(la));
                }
            }
            if (forced_merge) break;
        }
        if (forced_merge) continue;

        // (d) pair graph: union pair ids co-occurring in one live clause
        std::vector<int> puf(np);
        for (int i = 0; i < np; ++i) puf[i] = i;
        auto pfind = [&](int v) {
            while (puf[v] != v) {
                puf[v] = puf[puf[v]];
                v = puf[v];
            }
            return v;
        };
        auto punite = [&](int a, int b) {
            a = pfind(a);
            b = pfind(b);
            if (a == b) return;
            if (a > b) std::swap(a, b);
            puf[b] = a;
        };
        for (auto& la : affine_live)
            for (size_t i = 1; i < la.support.size(); ++i)
                punite(la.support[0], la.support[i]);
        for (auto& lc : twosat_live)
            if (lc.vars.size() == 2) punite(lc.vars[0], lc.vars[1]);

        // (e) per-component systems, components in ascending root order
        std::map<int, std::vector<int>> comp_pairs;
        for (int p = 0; p < np; ++p) comp_pairs[pfind(p)].push_back(p);

        std::vector<uint8_t> assignment(np, 0);
        int bad_comp = -1;
        for (auto& [root, members] : comp_pairs) {
            std::map<int, int> dense;
            for (size_t i = 0; i < members.size(); ++i) dense[members[i]] = int(i);
            std::optional<std::vector<uint8_t>> sol;
            if constexpr (TwoSat) {
                TwoSatInstance sub;
                sub.nvars = int(members.size());
                for (auto& lc : twosat_live) {
                    if (pfind(lc.vars[0]) != root) continue;
                    Lit l1{dense.at(lc.vars[0]), lc.pos[0]};
                    Lit l2 = lc.vars.size() == 2 ? Lit{dense.at(lc.vars[1]), lc.pos[1]} : l1;
                    sub.clauses.push_back({l1, l2});
                }
                sol = twosat_solve(sub);
            } else {
                AffineSystem sub;
                sub.nvars = int(members.size());
                for (auto& la : affine_live) {
                    if (la.support.empty() || pfind(la.support[0]) != root) continue;
                    AffineSystem::Equation eq;
                    eq.support = Bitvec(sub.nvars);
                    for (int p : la.support) eq.support.set(dense.at(p));
                    eq.parity = la.parity;
                    sub.eqs.push_back(std::move(eq));
                }
                sol = gauss_solve(sub);
            }
            if (!sol) {
                bad_comp = root;
                break;
            }
            for (size_t i = 0; i < members.size(); ++i) assignment[members[i]] = (*sol)[i];
        }

        if (bad_comp >= 0) {
            // (f) merge every pair in the failed component and restart
            for (int p : comp_pairs[bad_comp]) {
                auto [a, b] = pairs.vars_of(p);
                ctx.unite(a, b);
            }
            continue;
        }

        // (g) emit the model
        Model m = ctx.build_model([&](int a, int b) {
            return assignment[pairs.id(a, b)] ? Lab::E : Lab::N;
        });
        return checked_sat(env, inst, std::move(m), name);
    }
    throw internal_inconsistency_error(std::string(name) + ": merge loop did not terminate");
}

} // namespace

SolveResult solve_fig3(const TableEnv& env, const Instance& inst, const SolveHooks& hooks) {
    return fig3_impl<false>(env, inst, hooks);
}

SolveResult solve_fig3_2sat(const TableEnv& env, const Instance& inst,
                            const SolveHooks& hooks) {
    return fig3_impl<true>(env, inst, hooks);
}

namespace {

SemiOrder order_of_clone(int clone) {
    switch (clone) {
    case 2: return SemiOrder::ChainTopE;
    case 3: return SemiOrder::ChainTopN;
    case 4: return SemiOrder::FlatTopE;
    default: return SemiOrder::FlatTopN;
    }
}

bool clone_preserves_all(int clone_id, const TableEnv& env, const Instance& inst,
                         int* out_clone = nullptr) {
    // applicability scan for explicit method overrides, over used relations
    for (auto& cv : clone_variants(clone_id)) {
        bool ok = true;
        for (auto& c : inst.constraints)
            if (!preserves(cv.table, env.at(c.rel)).preserved) {
                ok = false;
                break;
            }
        if (ok) {
            if (out_clone) *out_clone = clone_id;
            return true;
        }
    }
    return false;
}

} // namespace

SolveResult dispatch_solve(const TableEnv& env, const Instance& inst,
                           const Classification& cls, Method method, int oracle_cap,
                           const SolveHooks& hooks) {
    switch (method) {
    case Method::Auto:
        break;
    case Method::Oracle:
        return oracle_solve(env, inst, OracleOptions{.cap = oracle_cap, .enumerate_mode = false, .initial_merges = {}});
    case Method::Trivial:
        if (!clone_preserves_all(1, env, inst))
            throw parse_error("method 'trivial' not applicable: no constant polymorphism");
        return solve_trivial(env, inst);
    case Method::Semilattice: {
        int clone = cls.tractable && cls.clone_id >= 2 && cls.clone_id <= 5 ? cls.clone_id : 0;
        for (int c = 2; c <= 5 && clone == 0; ++c)
            if (clone_preserves_all(c, env, inst)) clone = c;
        if (clone == 0)
            throw parse_error("method 'semilattice' not applicable: no max/min polymorphism");
        return solve_semilattice(env, inst, order_of_clone(clone), hooks);
    }
    case Method::Equality: {
        int clone = cls.tractable && (cls.clone_id == 16 || cls.clone_id == 17) ? cls.clone_id : 0;
        for (int c = 16; c <= 17 && clone == 0; ++c)
            if (clone_preserves_all(c, env, inst)) clone = c;
        if (clone == 0)
            throw parse_error("method 'equality' not applicable: no E/N-constant polymorphism");
        return solve_equality(env, inst,
                              clone == 16 ? EqMode::Clique : EqMode::Independent, hooks);
    }
    case Method::Fig2: {
        bool majority = cls.tractable && cls.clone_id >= 6 && cls.clone_id <= 10;
        return solve_fig2(env, inst, majority ? BoolMode::Majority : BoolMode::Minority,
                          hooks);
    }
    case Method::Fig3:
        if (cls.tractable && cls.clone_id == 6) return solve_fig3_2sat(env, inst, hooks);
        return solve_fig3(env, inst, hooks);
    }

    if (!cls.tractable) {
        SolveResult r = oracle_solve(env, inst, OracleOptions{.cap = oracle_cap, .enumerate_mode = false, .initial_merges = {}});
        r.warning = "np-complete language; exponential search";
        return r;
    }
    switch (cls.clone_id) {
    case 1: return solve_trivial(env, inst);
    case 2:
    case 3:
    case 4:
    case 5: return solve_semilattice(env, inst, order_of_clone(cls.clone_id), hooks);
    case 6: return solve_fig3_2sat(env, inst, hooks);
    case 7:
    case 8:
    case 9:
    case 10: return solve_fig2(env, inst, BoolMode::Majority, hooks);
    case 11: return solve_fig3(env, inst, hooks);
    case 12:
    case 13:
    case 14:
    case 15: return solve_fig2(env, inst, BoolMode::Minority, hooks);
    case 16: return solve_equality(env, inst, EqMode::Clique, hooks);
    default: return solve_equality(env, inst, EqMode::Independent, hooks);
    }
}

} // namespace gsat
