#include "gsat/oracle.hpp"

#include <algorithm>
#include <array>

namespace gsat {

namespace {

constexpr uint8_t kUnset = 0xff;

struct IndexedConstraint {
    const TypeTable* table;
    std::vector<int> args;  // variable indices
};

struct SearchState {
    int n;
    std::vector<int> cls;      // class representative (min index) per variable
    std::vector<uint8_t> lab;  // n*n matrix over representatives; kUnset where open

    explicit SearchState(int n_) : n(n_), cls(n_), lab(size_t(n_) * n_, kUnset) {
        for (int i = 0; i < n; ++i) cls[i] = i;
    }

    uint8_t& at(int a, int b) { return lab[size_t(std::min(a, b)) * n + std::max(a, b)]; }
    uint8_t get(int a, int b) const {
        return lab[size_t(std::min(a, b)) * n + std::max(a, b)];
    }

    // merge classes of a and b; false on label conflict
    bool merge(int a, int b) {
        a = cls[a];
        b = cls[b];
        if (a == b) return true;
        if (a > b) std::swap(a, b);
        if (get(a, b) != kUnset && Lab(get(a, b)) != Lab::EQ) return false;
        for (int c = 0; c < n; ++c)
            if (cls[c] == c && c != a && c != b) {
                uint8_t la = get(a, c), lb = get(b, c);
                if (la == kUnset)
                    at(a, c) = lb;
                else if (lb != kUnset && la != lb)
                    return false;
            }
        for (int v = 0; v < n; ++v)
            if (cls[v] == b) cls[v] = a;
        return true;
    }

    // Lab of a variable pair under the partial state; kUnset if open
    uint8_t label_of(int u, int v) const {
        int a = cls[u], b = cls[v];
        if (a == b) return uint8_t(Lab::EQ);
        return get(a, b);
    }
};

bool constraints_feasible(const std::vector<IndexedConstraint>& cons, const SearchState& st) {
    for (auto& c : cons) {
        bool any = false;
        for (auto& t : c.table->types()) {
            bool ok = true;
            int k = int(c.args.size());
            for (int p = 0; p < k && ok; ++p)
                for (int q = p + 1; q < k && ok; ++q) {
                    uint8_t have = st.label_of(c.args[p], c.args[q]);
                    if (have != kUnset && Lab(have) != pair_label(t, p, q)) ok = false;
                }
            if (ok) { any = true; break; }
        }
        if (!any) return false;
    }
    return true;
}

bool search(const std::vector<IndexedConstraint>& cons, const SearchState& st,
            SearchState& out) {
    int n = st.n;
    int pi = -1, pj = -1;
    for (int i = 0; i < n && pi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
            if (st.label_of(i, j) == kUnset) {
                pi = i;
                pj = j;
                break;
            }
    if (pi < 0) {
        out = st;
        return true;
    }
    for (Lab choice : {Lab::EQ, Lab::E, Lab::N}) {
        SearchState next = st;
        if (choice == Lab::EQ) {
            if (!next.merge(pi, pj)) continue;
        } else {
            next.at(next.cls[pi], next.cls[pj]) = uint8_t(choice);
        }
        if (!constraints_feasible(cons, next)) continue;
        if (search(cons, next, out)) return true;
    }
    return false;
}

Model model_from_state(const Instance& inst, const SearchState& st) {
    Model m;
    std::vector<int> class_index(st.n, -1);
    for (int v = 0; v < st.n; ++v) {
        int r = st.cls[v];
        if (class_index[r] < 0) {
            class_index[r] = int(m.classes.size());
            m.classes.emplace_back();
        }
        m.classes[class_index[r]].push_back(inst.variables[v]);
    }
    for (int a = 0; a < st.n; ++a)
        for (int b = a + 1; b < st.n; ++b)
            if (st.cls[a] == a && st.cls[b] == b && st.get(a, b) == uint8_t(Lab::E)) {
                int ca = class_index[a], cb = class_index[b];
                m.edges.emplace_back(std::min(ca, cb), std::max(ca, cb));
            }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

SolveResult enumerate_solve(const TableEnv& env, const Instance& inst,
                            const std::vector<IndexedConstraint>& cons) {
    int n = int(inst.variables.size());
    if (n > 5)
        throw resource_guard_error("oracle enumerate mode is capped at 5 variables");
    if (n == 0) {
        SolveResult r;
        r.sat = true;
        r.model = Model{};
        r.method = "oracle-enumerate";
        return r;
    }
    for (auto& t : enumerate_ktypes(n)) {
        bool ok = true;
        for (auto& c : cons) {
            if (!c.table->contains(restrict_ktype(t, c.args))) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        Model m;
        m.classes.resize(t.m);
        for (int v = 0; v < n; ++v) m.classes[t.block[v]].push_back(inst.variables[v]);
        for (int a = 0; a < t.m; ++a)
            for (int b = a + 1; b < t.m; ++b)
                if (t.adjacent(a, b)) m.edges.emplace_back(a, b);
        SolveResult r;
        r.sat = true;
        r.model = std::move(m);
        r.method = "oracle-enumerate";
        if (!validate_model(env, inst, *r.model))
            throw internal_inconsistency_error("oracle-enumerate produced an invalid model");
        return r;
    }
    SolveResult r;
    r.method = "oracle-enumerate";
    return r;
}

} // namespace

SolveResult oracle_solve(const TableEnv& env, const Instance& inst, const OracleOptions& opt) {
    check_instance(env, inst);
    int n = int(inst.variables.size());
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) index[inst.variables[i]] = i;

    std::vector<IndexedConstraint> cons;
    for (auto& c : inst.constraints) {
        IndexedConstraint ic;
        ic.table = &env.at(c.rel);
        for (auto& a : c.args) ic.args.push_back(index.at(a));
        if (ic.table->empty()) {
            SolveResult r;
            r.method = opt.enumerate_mode ? "oracle-enumerate" : "oracle";
            return r;
        }
        cons.push_back(std::move(ic));
    }

    if (opt.enumerate_mode) {
        if (!opt.initial_merges.empty())
            throw parse_error("enumerate mode does not support initial merges");
        return enumerate_solve(env, inst, cons);
    }

    if (n > opt.cap)
        throw resource_guard_error("oracle cap exceeded: " + std::to_string(n) +
                                   " variables > cap " + std::to_string(opt.cap));

    SolveResult r;
    r.method = "oracle";
    if (n == 0) {
        r.sat = true;
        r.model = Model{};
        return r;
    }

    SearchState st(n);
    for (auto& [a, b] : opt.initial_merges)
        if (!st.merge(index.at(a), index.at(b)))
            return r;  // conflicting forced merges: UNSAT
    if (!constraints_feasible(cons, st)) return r;

    SearchState found(n);
    if (!search(cons, st, found)) return r;

    r.sat = true;
    r.model = model_from_state(inst, found);
    if (!validate_model(env, inst, *r.model))
        throw internal_inconsistency_error("oracle produced an invalid model");
    return r;
}

} // namespace gsat
