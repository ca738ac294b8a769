// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gsat/builtins.hpp"
#include "gsat/classifier.hpp"
#include "gsat/gf2.hpp"
#include "gsat/normal_forms.hpp"
#include "gsat/oracle.hpp"
#include "gsat/parser.hpp"
#include "gsat/reductions.hpp"
#include "gsat/solve.hpp"
#include "gsat/specialize.hpp"
#include "gsat/twosat.hpp"
#include "gsat/unary_actions.hpp"
#include "test_util.hpp"

using namespace gsat;
using testutil::Rng;

namespace {

int failures = 0;
std::vector<std::string> messages;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        failures++;
        messages.push_back(what);
    }
}

struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<void()> body;
};

Formula one_edge_formula(bool with_triangle) {
    auto lit = [](int a, int b, bool pos) {
        Formula f = Formula::atom_e(a, b);
        return pos ? f : Formula::lnot(std::move(f));
    };
    std::vector<Formula> parts;
    parts.push_back(Formula::land({lit(0, 1, true), lit(1, 2, false), lit(0, 2, false)}));
    parts.push_back(Formula::land({lit(0, 1, false), lit(1, 2, true), lit(0, 2, false)}));
    parts.push_back(Formula::land({lit(0, 1, false), lit(1, 2, false), lit(0, 2, true)}));
    if (with_triangle)
        parts.push_back(Formula::land({lit(0, 1, true), lit(1, 2, true), lit(0, 2, true)}));
    return Formula::lor(std::move(parts));
}

// ---------- criterion 1 ----------
void criterion1() {
    expect(!classify({compile_table(one_edge_formula(false), 3)}).tractable,
           "exactly-one-edge language must be NP-complete");
    expect(classify({compile_table(one_edge_formula(true), 3)}).tractable,
           "one-edge-or-triangle language must be tractable");
    expect(!classify({builtin_table(Builtin::H)}).tractable, "{H} must be NP-complete");
    expect(!classify({builtin_table(Builtin::T)}).tractable, "{T} must be NP-complete");
    expect(!classify({builtin_table(Builtin::P3)}).tractable, "{P3} must be NP-complete");
}

void criterion1_slow() {
    expect(!classify({builtin_table(Builtin::E6)}).tractable, "{E6} must be NP-complete");
}

// ---------- criterion 2 ----------
void criterion2() {
    Classification r3 = classify({builtin_table(Builtin::R3)});
    expect(r3.tractable && r3.clone_id == 11, "{R3} must be tractable with clone 11");
    expect(preserves(r3.table, builtin_table(Builtin::R3)).preserved,
           "{R3} witness must re-check");

    std::vector<TypeTable> basics{builtin_table(Builtin::EDGE),
                                  builtin_table(Builtin::NONEDGE),
                                  builtin_table(Builtin::NEQ)};
    Classification cb = classify(basics);
    expect(cb.tractable && cb.clone_id == 2,
           "{EDGE,NONEDGE,NEQ} must be tractable with clone 2");
    for (auto& T : basics)
        expect(preserves(cb.table, T).preserved, "{EDGE,NONEDGE,NEQ} witness must re-check");
}

// ---------- criterion 3 ----------
void criterion3() {
    Rng rng(20260808);
    auto types2 = enumerate_ktypes(2);
    auto types3 = enumerate_ktypes(3);

    auto sample_table = [&]() {
        uint32_t mode = rng.below(8);
        if (mode == 0) {
            // binary relation
            TypeTable T(2);
            uint32_t density = 1 + rng.below(7);
            for (auto& t : types2)
                if (rng.below(8) < density) T.insert(t);
            return T;
        }
        if (mode == 1) {
            // parity table: all-distinct types of one edge parity
            int parity = int(rng.below(2));
            TypeTable T(3);
            for (auto& t : types3)
                if (t.discrete() && t.edge_count() % 2 == parity) T.insert(t);
            return T;
        }
        if (mode <= 3) {
            // random subset of the all-distinct types
            TypeTable T(3);
            uint32_t density = 1 + rng.below(7);
            for (auto& t : types3)
                if (t.discrete() && rng.below(8) < density) T.insert(t);
            return T;
        }
        TypeTable T(3);
        uint32_t density = 1 + rng.below(7);
        for (auto& t : types3)
            if (rng.below(8) < density) T.insert(t);
        return T;
    };

    int psi_count = 0, instance_count = 0;
    std::set<int> clones_hit;
    std::vector<std::string> pool{"a", "b", "c", "d", "e", "f"};
    while (psi_count < 500) {
        std::vector<TypeTable> psi{sample_table()};
        if (rng.below(3) == 0) psi.push_back(sample_table());
        Classification cls = classify(psi);
        if (!cls.tractable) continue;
        psi_count++;
        clones_hit.insert(cls.clone_id);

        TableEnv env;
        for (size_t i = 0; i < psi.size(); ++i) env["R" + std::to_string(i)] = psi[i];
        for (int round = 0; round < 10; ++round) {
            int n = 2 + int(rng.below(5));
            Instance inst;
            inst.variables.assign(pool.begin(), pool.begin() + n);
            int ncons = 1 + int(rng.below(3));
            for (int c = 0; c < ncons; ++c) {
                int rel = int(rng.below(uint32_t(psi.size())));
                Instance::Constraint con;
                con.rel = "R" + std::to_string(rel);
                for (int a = 0; a < psi[rel].arity(); ++a)
                    con.args.push_back(inst.variables[rng.below(uint32_t(n))]);
                inst.constraints.push_back(std::move(con));
            }
            instance_count++;
            SolveResult fast = dispatch_solve(env, inst, cls);
            SolveResult slow = oracle_solve(env, inst);
            if (fast.sat != slow.sat) {
                expect(false, "differential mismatch (clone " +
                                  std::to_string(cls.clone_id) + ")");
                return;
            }
            if (fast.sat)
                expect(validate_model(env, inst, *fast.model),
                       "dispatch SAT model must validate");
        }
    }
    expect(psi_count >= 500 && instance_count >= 5000, "differential volume");
    std::string hit;
    for (int c : clones_hit) hit += std::to_string(c) + " ";
    std::printf("       (differential: %d languages, %d instances, clones hit: %s)\n",
                psi_count, instance_count, hit.c_str());
}

// ---------- criterion 4 ----------
void criterion4() {
    auto types3 = enumerate_ktypes(3);
    auto preserved_by_all = [&](const TypeTable& T, int id) {
        for (auto& v : clone_variants(id))
            if (!preserves(v.table, T).preserved) return false;
        return true;
    };
    int affine = 0, bijunctive = 0;
    for (uint32_t bits = 0; bits < (1u << 15); ++bits) {
        TypeTable T(3);
        for (int i = 0; i < 15; ++i)
            if (bits >> i & 1) T.insert(types3[i]);
        if (preserved_by_all(T, 11)) {
            try {
                auto cs = compile_edge_affine(T);
                for (auto& t : types3)
                    if (eval_clauses(cs, t) != T.contains(t)) {
                        expect(false, "affine clause set disagrees with its table");
                        return;
                    }
                affine++;
            } catch (const std::exception& e) {
                expect(false, std::string("edge-affine compile failed: ") + e.what());
                return;
            }
        }
        if (preserved_by_all(T, 6)) {
            try {
                auto cs = compile_bijunctive(T);
                for (auto& t : types3)
                    if (eval_clauses(cs, t) != T.contains(t)) {
                        expect(false, "bijunctive clause set disagrees with its table");
                        return;
                    }
                bijunctive++;
            } catch (const std::exception& e) {
                expect(false, std::string("bijunctive compile failed: ") + e.what());
                return;
            }
        }
    }
    expect(affine > 0 && bijunctive > 0, "normal-form families must be nonempty");
    std::printf("       (normal forms: %d affine, %d bijunctive tables verified)\n", affine,
                bijunctive);
}

// ---------- criterion 5 ----------
void criterion5() {
    const TypeTable& r3 = builtin_table(Builtin::R3);
    const TypeTable& r4 = builtin_table(Builtin::R4);
    const TypeTable& r5 = builtin_table(Builtin::R5);
    const TypeTable& t = builtin_table(Builtin::T);
    const TypeTable& p3 = builtin_table(Builtin::P3);

    expect(closed_under(r3, ClosureKind::AllBlockFlips), "R3 closed under block flips");
    expect(!closed_under(r3, ClosureKind::FlipAll), "R3 open under flip-all");
    expect(closed_under(r4, ClosureKind::FlipAll), "R4 closed under flip-all");
    expect(!closed_under(r4, ClosureKind::AllBlockFlips), "R4 open under block flips");
    expect(closed_under(r5, ClosureKind::FlipAll), "R5 closed under flip-all");
    expect(closed_under(r5, ClosureKind::AllBlockFlips), "R5 closed under block flips");
    expect(closed_under(t, ClosureKind::FlipAll), "T closed under flip-all");
    expect(closed_under(t, ClosureKind::AllBlockFlips), "T closed under block flips");
    expect(closed_under(p3, ClosureKind::FlipAll), "P3 closed under flip-all");
    expect(!closed_under(p3, ClosureKind::AllBlockFlips), "P3 open under block flips");

    expect(interdef_class({r3}) == InterdefClass::R3, "interdef {R3} = R3");
    expect(interdef_class({r4}) == InterdefClass::R4, "interdef {R4} = R4");
    expect(interdef_class({r5}) == InterdefClass::R5, "interdef {R5} = R5");
    expect(interdef_class({t}) == InterdefClass::R5, "interdef {T} = R5");
    expect(interdef_class({p3}) == InterdefClass::R4, "interdef {P3} = R4");
}

// ---------- criterion 6 ----------
void criterion6() {
    const std::map<int, int> pairing{{2, 3}, {4, 5}, {7, 8}, {9, 10}, {12, 13}, {14, 15},
                                     {16, 17}};
    for (auto& [a, b] : pairing) {
        auto va = clone_variants(a), vb = clone_variants(b);
        expect(va.size() == vb.size(), "dual clones have matching variant counts");
        for (size_t i = 0; i < va.size(); ++i) {
            expect(dual_table(va[i].table) == vb[i].table, "dual pairing exact");
            expect(dual_table(vb[i].table) == va[i].table, "dual pairing exact (reverse)");
        }
    }
    expect(dual_table(clone_variants(1)[0].table) == clone_variants(1)[0].table,
           "clone 1 self-dual");
    for (int self : {6, 11}) {
        auto vs = clone_variants(self);
        for (auto& v : vs) {
            BehaviorTable d = dual_table(v.table);
            bool found = false;
            for (auto& w : vs) found = found || w.table == d;
            expect(found, "clone " + std::to_string(self) + " variant set closed under dual");
        }
    }
    for (auto& cv : all_clone_variants())
        expect(dual_table(dual_table(cv.table)) == cv.table, "duality is an involution");

    // classification duality on random languages: verdicts agree and the dual
    // of the witness preserves the flipped language
    Rng rng(616);
    auto types3 = enumerate_ktypes(3);
    int done = 0;
    while (done < 100) {
        TypeTable T(3);
        uint32_t density = 1 + rng.below(7);
        for (auto& t : types3)
            if (rng.below(8) < density) T.insert(t);
        TypeTable flipped(3);
        for (auto& t : T.types()) {
            KType f = t;
            f.adj = ~t.adj & ((1u << pair_count(t.m)) - 1);
            flipped.insert(f);
        }
        Classification ca = classify({T}), cb = classify({flipped});
        expect(ca.tractable == cb.tractable, "flip-all preserves the verdict");
        if (ca.tractable)
            expect(preserves(dual_table(ca.table), flipped).preserved,
                   "dual witness preserves the flipped language");
        done++;
    }
}

// ---------- criterion 7 ----------
void criterion7() {
    Rng rng(707);
    // gauss vs exhaustive
    for (int trial = 0; trial < 1000; ++trial) {
        int nvars = 1 + int(rng.below(15));
        AffineSystem sys;
        sys.nvars = nvars;
        int neqs = int(rng.below(uint32_t(nvars + 5)));
        for (int e = 0; e < neqs; ++e) {
            AffineSystem::Equation eq;
            eq.support = Bitvec(nvars);
            uint32_t mask = uint32_t(rng.next()) & ((1u << nvars) - 1);
            for (int i = 0; i < nvars; ++i)
                if (mask >> i & 1) eq.support.set(i);
            eq.parity = int(rng.below(2));
            sys.eqs.push_back(std::move(eq));
        }
        auto sat = [&](uint32_t a) {
            for (auto& eq : sys.eqs) {
                int p = 0;
                for (int i = 0; i < nvars; ++i)
                    if (eq.support.get(i) && (a >> i & 1)) p ^= 1;
                if (p != eq.parity) return false;
            }
            return true;
        };
        auto got = gauss_solve(sys);
        bool brute = testutil::brute_sat(nvars, sat);
        expect(got.has_value() == brute, "gauss_solve agrees with exhaustive search");
        if (got) {
            uint32_t a = 0;
            for (int i = 0; i < nvars; ++i)
                if ((*got)[i]) a |= 1u << i;
            expect(sat(a), "gauss_solve assignment satisfies the system");
        }
    }
    // twosat vs exhaustive
    for (int trial = 0; trial < 1000; ++trial) {
        int nvars = 1 + int(rng.below(12));
        TwoSatInstance inst;
        inst.nvars = nvars;
        int ncl = int(rng.below(uint32_t(3 * nvars + 1)));
        for (int c = 0; c < ncl; ++c)
            inst.clauses.push_back({{int(rng.below(uint32_t(nvars))), rng.below(2) == 0},
                                    {int(rng.below(uint32_t(nvars))), rng.below(2) == 0}});
        auto sat = [&](uint32_t a) {
            for (auto& [l1, l2] : inst.clauses) {
                bool v1 = ((a >> l1.var & 1) != 0) == l1.pos;
                bool v2 = ((a >> l2.var & 1) != 0) == l2.pos;
                if (!v1 && !v2) return false;
            }
            return true;
        };
        auto got = twosat_solve(inst);
        bool brute = testutil::brute_sat(nvars, sat);
        expect(got.has_value() == brute, "twosat_solve agrees with exhaustive search");
        if (got) {
            uint32_t a = 0;
            for (int i = 0; i < nvars; ++i)
                if ((*got)[i]) a |= 1u << i;
            expect(sat(a), "twosat_solve assignment satisfies the clauses");
        }
    }

    // reconstruction: exhaustive at width <= 4
    auto check_affine_exact = [&](const BoolRelation& S) {
        AffineSystem sys = affine_basis(S);
        size_t sols = 0;
        for (uint32_t a = 0; a < (1u << S.width); ++a) {
            bool ok = true;
            for (auto& eq : sys.eqs) {
                int p = 0;
                for (int i = 0; i < S.width; ++i)
                    if (eq.support.get(i) && (a >> i & 1)) p ^= 1;
                if (p != eq.parity) { ok = false; break; }
            }
            if (ok) {
                sols++;
                if (!S.contains(a)) return false;
            }
        }
        return sols == S.tuples.size();
    };
    auto check_cover_exact = [&](const BoolRelation& S) {
        try {
            two_clause_cover(S);  // verifies internally
            return true;
        } catch (const not_bijunctive_error&) {
            return false;
        }
    };
    for (int w = 1; w <= 4; ++w)
        for (uint32_t bits = 1; bits < (1u << (1 << w)); ++bits) {
            BoolRelation S;
            S.width = w;
            for (uint32_t t = 0; t < (1u << w); ++t)
                if (bits >> t & 1) S.insert(t);
            if (closed_under_bool_minority(S))
                expect(check_affine_exact(S), "affine basis reconstructs exactly (w<=4)");
            if (closed_under_bool_majority(S))
                expect(check_cover_exact(S), "2-clause cover reconstructs exactly (w<=4)");
        }
    // random closed sets at widths 5 and 6
    for (int w : {5, 6}) {
        for (int trial = 0; trial < 300; ++trial) {
            uint32_t full = (1u << w) - 1;
            // affine coset from a random basis
            BoolRelation A;
            A.width = w;
            uint32_t base = uint32_t(rng.next()) & full;
            std::vector<uint32_t> gens;
            for (uint32_t g = rng.below(4); g > 0; --g)
                gens.push_back(uint32_t(rng.next()) & full);
            std::set<uint32_t> coset{base};
            for (uint32_t g : gens) {
                std::set<uint32_t> next = coset;
                for (uint32_t x : coset) next.insert(x ^ g);
                coset = next;
            }
            for (uint32_t x : coset) A.insert(x);
            expect(closed_under_bool_minority(A), "coset is minority-closed");
            expect(check_affine_exact(A), "affine basis reconstructs exactly (w>4)");

            // majority closure of a random seed set
            std::set<uint32_t> m;
            for (int i = 0; i < 4; ++i) m.insert(uint32_t(rng.next()) & full);
            bool grew = true;
            while (grew) {
                grew = false;
                std::vector<uint32_t> cur(m.begin(), m.end());
                for (uint32_t a : cur)
                    for (uint32_t b : cur)
                        for (uint32_t c : cur)
                            if (m.insert((a & b) | (a & c) | (b & c)).second) grew = true;
            }
            BoolRelation M;
            M.width = w;
            for (uint32_t x : m) M.insert(x);
            expect(closed_under_bool_majority(M), "closure is majority-closed");
            expect(check_cover_exact(M), "2-clause cover reconstructs exactly (w>4)");
        }
    }
}

// ---------- criterion 8 ----------
void criterion8() {
    std::vector<std::string> pool{"p", "q", "r", "s"};
    std::vector<std::vector<std::string>> clauses;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                clauses.push_back({pool[i], pool[j], pool[k]});

    auto bool_val = [&](const BoolFormulaInput& f, uint32_t a, const std::string& v) {
        for (size_t i = 0; i < f.variables.size(); ++i)
            if (f.variables[i] == v) return (a >> i & 1) != 0;
        return false;
    };
    auto one_in_three_sat = [&](const BoolFormulaInput& f) {
        return testutil::brute_sat(int(f.variables.size()), [&](uint32_t a) {
            for (auto& c : f.clauses)
                if (bool_val(f, a, c[0]) + bool_val(f, a, c[1]) + bool_val(f, a, c[2]) != 1)
                    return false;
            return true;
        });
    };
    auto run_one = [&](std::vector<std::vector<std::string>> cs) {
        BoolFormulaInput f;
        f.kind = BoolFormulaInput::Kind::OneInThree;
        f.variables = pool;
        f.clauses = std::move(cs);
        GeneratedProblem g = gen_one_in_three(f);
        auto renv = parse_spec(g.spec_text);
        TableEnv env;
        for (auto& d : renv.defs) env[d.name] = table_of(d);
        SolveResult r = oracle_solve(env, g.instance);
        expect(r.sat == one_in_three_sat(f), "1-in-3 round trip");
        if (r.sat) expect(validate_model(env, g.instance, *r.model), "1-in-3 model validates");
    };
    run_one({});
    for (size_t i = 0; i < clauses.size(); ++i) {
        run_one({clauses[i]});
        for (size_t j = i; j < clauses.size(); ++j) run_one({clauses[i], clauses[j]});
    }

    // the 4-clause pigeonhole formula is UNSAT on both sides
    {
        BoolFormulaInput f;
        f.kind = BoolFormulaInput::Kind::OneInThree;
        f.variables = pool;
        f.clauses = clauses;  // all four 3-subsets
        expect(!one_in_three_sat(f), "4-clause formula is Boolean-UNSAT");
        GeneratedProblem g = gen_one_in_three(f);
        auto renv = parse_spec(g.spec_text);
        TableEnv env;
        for (auto& d : renv.defs) env[d.name] = table_of(d);
        expect(!oracle_solve(env, g.instance).sat, "4-clause instance is oracle-UNSAT");
    }

    // all single-clause NAE formulas over a 4-variable pool
    for (auto& c : clauses) {
        BoolFormulaInput f;
        f.kind = BoolFormulaInput::Kind::Nae;
        f.variables = c;  // declare exactly the clause variables
        f.clauses = {c};
        bool bool_sat = testutil::brute_sat(3, [&](uint32_t a) {
            int t = (a & 1) + (a >> 1 & 1) + (a >> 2 & 1);
            return t != 0 && t != 3;
        });
        GeneratedProblem g = gen_nae(f);
        auto renv = parse_spec(g.spec_text);
        TableEnv env;
        for (auto& d : renv.defs) env[d.name] = table_of(d);
        OracleOptions opt;
        opt.cap = 9;
        SolveResult r = oracle_solve(env, g.instance, opt);
        expect(r.sat == bool_sat, "single-clause NAE round trip");
        if (r.sat) expect(validate_model(env, g.instance, *r.model), "NAE model validates");
    }
}

// ---------- criterion 9 ----------
void criterion9() {
    const uint64_t expected[] = {0, 1, 3, 15, 127, 1895};
    for (int k = 1; k <= 5; ++k) {
        expect(enumerate_ktypes(k).size() == expected[k],
               "enumerate_ktypes(" + std::to_string(k) + ") count");
        expect(count_ktypes(k) == expected[k], "count_ktypes identity");
    }
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {"1  reference verdicts (one-edge, one-edge-or-triangle, H, T, P3)", 5.0, criterion1},
        {"1s reference verdict for E6 (slow, early-exit scans)", 600.0, criterion1_slow},
        {"2  derived verdicts with preservation re-check", 1.0, criterion2},
        {"3  differential suite vs the oracle", 600.0, criterion3},
        {"4  exhaustive normal-form round trip (2^15 tables)", 300.0, criterion4},
        {"5  invariance facts", 1.0, criterion5},
        {"6  duality suite", 60.0, criterion6},
        {"7  Boolean kernels", 300.0, criterion7},
        {"8  reduction round trips", 300.0, criterion8},
        {"9  type-count identities", 1.0, criterion9},
    };
    bool all_ok = true;
    for (auto& c : criteria) {
        int before = failures;
        auto start = std::chrono::steady_clock::now();
        c.body();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        bool ok = failures == before;
        bool in_budget = secs <= c.budget_seconds;
        if (!in_budget) {
            ok = false;
            messages.push_back(std::string(c.name) + ": exceeded time budget");
        }
        std::printf("[%s] criterion %s (%.2fs, budget %.0fs)\n", ok ? "PASS" : "FAIL",
                    c.name, secs, c.budget_seconds);
        all_ok = all_ok && ok;
    }
    for (auto& m : messages) std::printf("       failure: %s\n", m.c_str());
    return all_ok ? 0 : 1;
}
