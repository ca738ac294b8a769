#pragma once

#include "gsat/instance.hpp"

namespace gsat {

// Positive Boolean formula inputs for the three hardness reductions.
struct BoolFormulaInput {
    enum class Kind { OneInThree, Nae, Sum2 };
    Kind kind = Kind::OneInThree;
    std::vector<std::string> variables;
    // width-3 clauses for one-in-three / nae, width-4 equations x1+x2+x3+x4=2
    std::vector<std::vector<std::string>> clauses;
};

struct GeneratedProblem {
    std::string spec_text;  // DSL using builtins only
    Instance instance;
};

// Two instance variables u_x, v_x per Boolean variable, one H constraint per
// clause. Satisfiable over the random graph iff the input is 1-in-3
// satisfiable.
GeneratedProblem gen_one_in_three(const BoolFormulaInput& f);

// Per clause: three w variables, one P3 and three Q4 constraints.
GeneratedProblem gen_nae(const BoolFormulaInput& f);

// Three y variables per Boolean variable, four z variables per equation,
// one T and four L constraints per equation.
GeneratedProblem gen_sum2(const BoolFormulaInput& f);

} // namespace gsat
