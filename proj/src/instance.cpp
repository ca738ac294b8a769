#include "gsat/instance.hpp"

#include <algorithm>

namespace gsat {

void check_instance(const TableEnv& env, const Instance& inst) {
    std::map<std::string, int> declared;
    for (auto& v : inst.variables) {
        if (declared.count(v)) throw parse_error("duplicate variable '" + v + "'");
        declared[v] = 1;
    }
    for (auto& c : inst.constraints) {
        auto it = env.find(c.rel);
        if (it == env.end()) throw parse_error("unknown relation '" + c.rel + "'");
        if (int(c.args.size()) != it->second.arity())
            throw parse_error("arity mismatch for relation '" + c.rel + "'");
        for (auto& a : c.args)
            if (!declared.count(a))
                throw parse_error("undeclared variable '" + a + "' in constraint");
    }
}

KType induced_ktype(const Model& m, const std::map<std::string, int>& class_of,
                    const std::vector<std::string>& args) {
    std::vector<int> cls(args.size());
    for (size_t i = 0; i < args.size(); ++i) cls[i] = class_of.at(args[i]);
    return ktype_from_labels(int(args.size()), [&](int i, int j) {
        if (cls[i] == cls[j]) return Lab::EQ;
        return m.adjacent(cls[i], cls[j]) ? Lab::E : Lab::N;
    });
}

bool validate_model(const TableEnv& env, const Instance& inst, const Model& m) {
    std::map<std::string, int> class_of;
    for (size_t c = 0; c < m.classes.size(); ++c)
        for (auto& v : m.classes[c]) {
            if (class_of.count(v)) return false;
            class_of[v] = int(c);
        }
    for (auto& v : inst.variables)
        if (!class_of.count(v)) return false;
    for (auto& c : inst.constraints) {
        auto it = env.find(c.rel);
        if (it == env.end()) return false;
        if (!it->second.contains(induced_ktype(m, class_of, c.args))) return false;
    }
    return true;
}

} // namespace gsat
