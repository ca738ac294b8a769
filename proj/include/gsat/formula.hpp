#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gsat/table.hpp"

namespace gsat {

// Quantifier-free graph formula over positional variables 0..k-1.
// Atoms: E(a,b) and a=b; connectives !, &, |.
struct Formula {
    enum class Kind { AtomE, AtomEq, Not, And, Or };
    Kind kind = Kind::AtomE;
    int a = -1, b = -1;          // atom positions
    std::vector<Formula> kids;

    static Formula atom_e(int a, int b) { return {Kind::AtomE, a, b, {}}; }
    static Formula atom_eq(int a, int b) { return {Kind::AtomEq, a, b, {}}; }
    static Formula lnot(Formula f) { return {Kind::Not, -1, -1, {std::move(f)}}; }
    static Formula land(std::vector<Formula> fs) { return {Kind::And, -1, -1, std::move(fs)}; }
    static Formula lor(std::vector<Formula> fs) { return {Kind::Or, -1, -1, std::move(fs)}; }
};

// Truth of f on any tuple of type t. E is antireflexive: E(x,x) is false,
// never an error.
bool eval_formula(const Formula& f, const KType& t);

// { t in enumerate_ktypes(k) : eval_formula(f, t) }
TypeTable compile_table(const Formula& f, int k, bool allow_large = false);

} // namespace gsat
