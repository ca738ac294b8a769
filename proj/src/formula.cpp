#include "gsat/formula.hpp"

namespace gsat {

bool eval_formula(const Formula& f, const KType& t) {
    switch (f.kind) {
    case Formula::Kind::AtomE:
        if (f.a == f.b) return false;
        return pair_label(t, f.a, f.b) == Lab::E;
    case Formula::Kind::AtomEq:
        if (f.a == f.b) return true;
        return pair_label(t, f.a, f.b) == Lab::EQ;
    case Formula::Kind::Not:
        return !eval_formula(f.kids[0], t);
    case Formula::Kind::And:
        for (auto& g : f.kids)
            if (!eval_formula(g, t)) return false;
        return true;
    case Formula::Kind::Or:
        for (auto& g : f.kids)
            if (eval_formula(g, t)) return true;
        return false;
    }
    return false;
}

TypeTable compile_table(const Formula& f, int k, bool allow_large) {
    TypeTable out(k);
    for (auto& t : enumerate_ktypes(k, allow_large))
        if (eval_formula(f, t)) out.insert(t);
    return out;
}

} // namespace gsat
