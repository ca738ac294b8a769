#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsat/builtins.hpp"
#include "gsat/formula.hpp"

namespace gsat {

// One `rel` definition: either a quantifier-free formula over named
// variables, or a reference to a builtin relation.
struct RelDef {
    std::string name;
    int arity = 0;
    std::optional<Builtin> builtin;
    Formula formula;                 // valid iff !builtin
    std::vector<std::string> vars;   // positional names (empty for builtins)
};

struct RelationEnv {
    std::vector<RelDef> defs;              // declaration order
    std::map<std::string, int> by_name;

    const RelDef* find(const std::string& name) const {
        auto it = by_name.find(name);
        return it == by_name.end() ? nullptr : &defs[it->second];
    }
};

// Parses the DSL. Sugar is expanded during parsing:
//   N(x,y)  =>  !E(x,y) & !(x=y)
//   x != y  =>  !(x=y)
// Comments run from '#' to end of line. Errors carry line/column.
RelationEnv parse_spec(const std::string& text);

// Tables for every definition, in declaration order.
std::vector<TypeTable> compile_env(const RelationEnv& env, bool allow_large = false);

// Table for one definition.
TypeTable table_of(const RelDef& def, bool allow_large = false);

} // namespace gsat
