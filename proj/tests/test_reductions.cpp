#include <doctest.h>

#include "gsat/builtins.hpp"
#include "gsat/classifier.hpp"
#include "gsat/oracle.hpp"
#include "gsat/parser.hpp"
#include "gsat/reductions.hpp"
#include "test_util.hpp"

using namespace gsat;

namespace {

BoolFormulaInput input(BoolFormulaInput::Kind kind, std::vector<std::string> vars,
                       std::vector<std::vector<std::string>> clauses) {
    BoolFormulaInput f;
    f.kind = kind;
    f.variables = std::move(vars);
    f.clauses = std::move(clauses);
    return f;
}

TableEnv env_of(const GeneratedProblem& g) {
    auto renv = parse_spec(g.spec_text);
    TableEnv env;
    for (auto& d : renv.defs) env[d.name] = table_of(d);
    return env;
}

bool one_in_three_sat(const BoolFormulaInput& f) {
    return testutil::brute_sat(int(f.variables.size()), [&](uint32_t a) {
        auto val = [&](const std::string& v) {
            for (size_t i = 0; i < f.variables.size(); ++i)
                if (f.variables[i] == v) return (a >> i & 1) != 0;
            return false;
        };
        for (auto& c : f.clauses) {
            int t = val(c[0]) + val(c[1]) + val(c[2]);
            if (t != 1) return false;
        }
        return true;
    });
}

bool nae_sat(const BoolFormulaInput& f) {
    return testutil::brute_sat(int(f.variables.size()), [&](uint32_t a) {
        auto val = [&](const std::string& v) {
            for (size_t i = 0; i < f.variables.size(); ++i)
                if (f.variables[i] == v) return (a >> i & 1) != 0;
            return false;
        };
        for (auto& c : f.clauses) {
            int t = val(c[0]) + val(c[1]) + val(c[2]);
            if (t == 0 || t == 3) return false;
        }
        return true;
    });
}

} // namespace

TEST_CASE("gen_one_in_three shapes and verdicts") {
    auto g1 = gen_one_in_three(
        input(BoolFormulaInput::Kind::OneInThree, {"x", "y", "z"}, {{"x", "y", "z"}}));
    CHECK(g1.instance.variables.size() == 6);
    CHECK(g1.instance.constraints.size() == 1);
    TableEnv env = env_of(g1);
    CHECK(oracle_solve(env, g1.instance).sat);

    // the four-clause pigeonhole instance is unsatisfiable
    auto f4 = input(BoolFormulaInput::Kind::OneInThree, {"x", "y", "z", "w"},
                    {{"x", "y", "z"}, {"x", "y", "w"}, {"x", "z", "w"}, {"y", "z", "w"}});
    REQUIRE_FALSE(one_in_three_sat(f4));
    auto g4 = gen_one_in_three(f4);
    CHECK(g4.instance.variables.size() == 8);
    CHECK_FALSE(oracle_solve(env_of(g4), g4.instance).sat);

    // empty clause list is trivially satisfiable
    auto g0 = gen_one_in_three(input(BoolFormulaInput::Kind::OneInThree, {"x"}, {}));
    CHECK(oracle_solve(env_of(g0), g0.instance).sat);

    CHECK_THROWS_AS(gen_one_in_three(input(BoolFormulaInput::Kind::OneInThree, {"x", "y"},
                                           {{"x", "x", "y"}})),
                    parse_error);
    CHECK_THROWS_AS(gen_one_in_three(input(BoolFormulaInput::Kind::OneInThree, {"x", "y"},
                                           {{"x", "y", "q"}})),
                    parse_error);
    CHECK_THROWS_AS(gen_one_in_three(input(BoolFormulaInput::Kind::Nae, {"x"}, {})),
                    parse_error);
}

TEST_CASE("one-in-three round trip over all small formulas") {
    // every positive 1-in-3 formula with <= 2 clauses over <= 4 variables
    std::vector<std::string> pool{"p", "q", "r", "s"};
    std::vector<std::vector<std::string>> all_clauses;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                all_clauses.push_back({pool[i], pool[j], pool[k]});
    for (size_t i = 0; i < all_clauses.size(); ++i)
        for (size_t j = i; j < all_clauses.size(); ++j) {
            auto f = input(BoolFormulaInput::Kind::OneInThree, pool,
                           {all_clauses[i], all_clauses[j]});
            auto g = gen_one_in_three(f);
            CHECK(oracle_solve(env_of(g), g.instance).sat == one_in_three_sat(f));
        }
}

TEST_CASE("gen_nae shapes and single-clause round trip") {
    auto f = input(BoolFormulaInput::Kind::Nae, {"x", "y", "z"}, {{"x", "y", "z"}});
    auto g = gen_nae(f);
    CHECK(g.instance.variables.size() == 9);
    CHECK(g.instance.constraints.size() == 4);
    REQUIRE(nae_sat(f));
    OracleOptions opt;
    opt.cap = 9;
    CHECK(oracle_solve(env_of(g), g.instance, opt).sat);
}

TEST_CASE("gen_sum2 shape and witness validation") {
    auto f = input(BoolFormulaInput::Kind::Sum2, {"a", "b", "c", "d"},
                   {{"a", "b", "c", "d"}});
    auto g = gen_sum2(f);
    CHECK(g.instance.variables.size() == 16);
    CHECK(g.instance.constraints.size() == 5);

    // witness per the reduction's construction from the solution a=b=1, c=d=0:
    // the y-triples of true variables form cliques and the two z-vertices
    // indexed by subsets containing both true variables are adjacent
    TableEnv env = env_of(g);
    Model m;
    std::map<std::string, int> cls;
    for (auto& v : g.instance.variables) {
        cls[v] = int(m.classes.size());
        m.classes.push_back({v});
    }
    auto link = [&](const std::string& u, const std::string& v) {
        int a = cls.at(u), b = cls.at(v);
        m.edges.emplace_back(std::min(a, b), std::max(a, b));
    };
    for (auto& t : {"a", "b"}) {
        link(std::string("y1_") + t, std::string("y2_") + t);
        link(std::string("y1_") + t, std::string("y3_") + t);
        link(std::string("y2_") + t, std::string("y3_") + t);
    }
    link("z_e0_a_b_c", "z_e0_a_b_d");
    std::sort(m.edges.begin(), m.edges.end());
    CHECK(validate_model(env, g.instance, m));

    // zero equations
    auto g0 = gen_sum2(input(BoolFormulaInput::Kind::Sum2, {"a"}, {}));
    CHECK(g0.instance.constraints.empty());
    CHECK_THROWS_AS(gen_sum2(input(BoolFormulaInput::Kind::Sum2, {"a", "b", "c"},
                                   {{"a", "b", "c", "e"}})),
                    parse_error);
}

TEST_CASE("generated languages always classify NP-complete") {
    auto g1 = gen_one_in_three(
        input(BoolFormulaInput::Kind::OneInThree, {"x", "y", "z"}, {{"x", "y", "z"}}));
    auto g2 = gen_nae(input(BoolFormulaInput::Kind::Nae, {"x", "y", "z"}, {{"x", "y", "z"}}));
    auto g3 = gen_sum2(input(BoolFormulaInput::Kind::Sum2, {"a", "b", "c", "d"},
                             {{"a", "b", "c", "d"}}));
    for (auto* g : {&g1, &g2, &g3}) {
        auto renv = parse_spec(g->spec_text);
        std::vector<TypeTable> psi = compile_env(renv);
        CHECK_FALSE(classify(psi).tractable);
    }
}
