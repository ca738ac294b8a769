#include "gsat/reductions.hpp"

#include <set>

namespace gsat {

namespace {

void check_input(const BoolFormulaInput& f, BoolFormulaInput::Kind kind, size_t width) {
    if (f.kind != kind) throw parse_error("reduction kind mismatch");
    std::set<std::string> declared(f.variables.begin(), f.variables.end());
    if (declared.size() != f.variables.size())
        throw parse_error("duplicate Boolean variable");
    for (auto& c : f.clauses) {
        if (c.size() != width)
            throw parse_error("clause width must be " + std::to_string(width));
        std::set<std::string> seen;
        for (auto& v : c) {
            if (!declared.count(v)) throw parse_error("undeclared variable '" + v + "'");
            if (!seen.insert(v).second)
                throw parse_error("repeated variable '" + v + "' in a clause");
        }
    }
}

} // namespace

GeneratedProblem gen_one_in_three(const BoolFormulaInput& f) {
    check_input(f, BoolFormulaInput::Kind::OneInThree, 3);
    GeneratedProblem g;
    g.spec_text = "rel H := H;\n";
    for (auto& x : f.variables) {
        g.instance.variables.push_back("u_" + x);
        g.instance.variables.push_back("v_" + x);
    }
    for (auto& c : f.clauses) {
        const auto &x = c[0], &y = c[1], &z = c[2];
        g.instance.constraints.push_back(
            {"H", {"u_" + x, "v_" + x, "u_" + y, "v_" + y, "u_" + z, "v_" + z}});
    }
    return g;
}

GeneratedProblem gen_nae(const BoolFormulaInput& f) {
    check_input(f, BoolFormulaInput::Kind::Nae, 3);
    GeneratedProblem g;
    g.spec_text = "rel P3 := P3;\nrel Q4 := Q4;\n";
    for (auto& x : f.variables) {
        g.instance.variables.push_back("u_" + x);
        g.instance.variables.push_back("v_" + x);
    }
    for (size_t i = 0; i < f.clauses.size(); ++i) {
        const auto &x = f.clauses[i][0], &y = f.clauses[i][1], &z = f.clauses[i][2];
        std::string ci = "c" + std::to_string(i);
        std::string wxy = "w_" + ci + "_" + x + "_" + y;
        std::string wyz = "w_" + ci + "_" + y + "_" + z;
        std::string wzx = "w_" + ci + "_" + z + "_" + x;
        g.instance.variables.push_back(wxy);
        g.instance.variables.push_back(wyz);
        g.instance.variables.push_back(wzx);
        g.instance.constraints.push_back({"P3", {wxy, wyz, wzx}});
        g.instance.constraints.push_back({"Q4", {"u_" + x, "v_" + x, wzx, wxy}});
        g.instance.constraints.push_back({"Q4", {"u_" + y, "v_" + y, wxy, wyz}});
        g.instance.constraints.push_back({"Q4", {"u_" + z, "v_" + z, wyz, wzx}});
    }
    return g;
}

GeneratedProblem gen_sum2(const BoolFormulaInput& f) {
    check_input(f, BoolFormulaInput::Kind::Sum2, 4);
    GeneratedProblem g;
    g.spec_text = "rel T := T;\nrel L := L;\n";
    for (auto& a : f.variables)
        for (int j = 1; j <= 3; ++j)
            g.instance.variables.push_back("y" + std::to_string(j) + "_" + a);
    for (size_t i = 0; i < f.clauses.size(); ++i) {
        const auto& e = f.clauses[i];
        std::string ei = "e" + std::to_string(i);
        auto z3 = [&](int p, int q, int r) {
            return "z_" + ei + "_" + e[p] + "_" + e[q] + "_" + e[r];
        };
        std::string zabc = z3(0, 1, 2), zabd = z3(0, 1, 3), zacd = z3(0, 2, 3),
                    zbcd = z3(1, 2, 3);
        for (auto& z : {zabc, zabd, zacd, zbcd}) g.instance.variables.push_back(z);
        auto ys = [&](const std::string& a) {
            return std::array<std::string, 3>{"y1_" + a, "y2_" + a, "y3_" + a};
        };
        g.instance.constraints.push_back({"T", {zabc, zabd, zacd, zbcd}});
        auto ya = ys(e[0]), yb = ys(e[1]), yc = ys(e[2]), yd = ys(e[3]);
        g.instance.constraints.push_back({"L", {zabc, zabd, zacd, ya[0], ya[1], ya[2]}});
        g.instance.constraints.push_back({"L", {zabc, zabd, zbcd, yb[0], yb[1], yb[2]}});
        g.instance.constraints.push_back({"L", {zabc, zacd, zbcd, yc[0], yc[1], yc[2]}});
        g.instance.constraints.push_back({"L", {zabd, zacd, zbcd, yd[0], yd[1], yd[2]}});
    }
    return g;
}

} // namespace gsat
