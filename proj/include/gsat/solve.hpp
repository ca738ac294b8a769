#pragma once

#include "gsat/classifier.hpp"
#include "gsat/instance.hpp"

namespace gsat {

// Pair-domain orders served by the semilattice solver, one per clone 2..5.
enum class SemiOrder { ChainTopE, ChainTopN, FlatTopE, FlatTopN };

enum class EqMode { Clique, Independent };
enum class BoolMode { Minority, Majority };

enum class Method { Auto, Fig2, Fig3, Semilattice, Equality, Trivial, Oracle };

struct SolveHooks {
    // records every variable-pair merge a solver performs, as variable names
    std::vector<std::pair<std::string, std::string>>* merge_log = nullptr;
};

SolveResult solve_trivial(const TableEnv& env, const Instance& inst);

SolveResult solve_semilattice(const TableEnv& env, const Instance& inst, SemiOrder order,
                              const SolveHooks& hooks = {});

SolveResult solve_equality(const TableEnv& env, const Instance& inst, EqMode mode,
                           const SolveHooks& hooks = {});

// Contraction loop, injectivization, then one global Boolean problem over
// all unordered pairs of surviving variables.
SolveResult solve_fig2(const TableEnv& env, const Instance& inst, BoolMode mode,
                       const SolveHooks& hooks = {});

// Component-wise affine solving over the pair graph with merge-and-restart.
SolveResult solve_fig3(const TableEnv& env, const Instance& inst,
                       const SolveHooks& hooks = {});

// The 2SAT analog of fig3 for clone 6.
SolveResult solve_fig3_2sat(const TableEnv& env, const Instance& inst,
                            const SolveHooks& hooks = {});

// Routes per classification: 1 trivial; 2..5 semilattice; 6 fig3-2sat;
// 7..10 fig2 majority; 11 fig3; 12..15 fig2 minority; 16/17 equality;
// NP-complete goes to the oracle with a warning and the cap.
SolveResult dispatch_solve(const TableEnv& env, const Instance& inst,
                           const Classification& cls, Method method = Method::Auto,
                           int oracle_cap = 8, const SolveHooks& hooks = {});

} // namespace gsat
