#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsat/table.hpp"

namespace gsat {

// A conjunction of constraints over named variables.
struct Instance {
    std::vector<std::string> variables;
    struct Constraint {
        std::string rel;
        std::vector<std::string> args;  // repeats allowed
    };
    std::vector<Constraint> constraints;
};

// Finite-graph witness: a partition of the instance variables plus a
// symmetric irreflexive adjacency over the classes.
struct Model {
    std::vector<std::vector<std::string>> classes;
    std::vector<std::pair<int, int>> edges;  // class index pairs, i < j

    bool adjacent(int i, int j) const {
        if (i > j) std::swap(i, j);
        for (auto& e : edges)
            if (e.first == i && e.second == j) return true;
        return false;
    }
};

struct SolveResult {
    bool sat = false;
    std::optional<Model> model;
    std::string method;
    std::optional<std::string> warning;
};

using TableEnv = std::map<std::string, TypeTable>;

// Arity and name checks; throws parse_error on mismatch.
void check_instance(const TableEnv& env, const Instance& inst);

// The KType induced by the model on an argument tuple.
KType induced_ktype(const Model& m, const std::map<std::string, int>& class_of,
                    const std::vector<std::string>& args);

// True iff every constraint's induced type lies in its relation's table.
bool validate_model(const TableEnv& env, const Instance& inst, const Model& m);

} // namespace gsat
