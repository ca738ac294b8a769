#include "gsat/twosat.hpp"

#include <algorithm>

namespace gsat {

namespace {

// node 2v = negative literal of v, 2v+1 = positive
int node_of(Lit l) { return 2 * l.var + (l.pos ? 1 : 0); }
int negate_node(int n) { return n ^ 1; }

} // namespace

std::optional<std::vector<uint8_t>> twosat_solve(const TwoSatInstance& inst) {
    int n = 2 * inst.nvars;
    std::vector<std::vector<int>> adj(n);
    for (auto& [a, b] : inst.clauses) {
        adj[negate_node(node_of(a))].push_back(node_of(b));
        adj[negate_node(node_of(b))].push_back(node_of(a));
    }

    // iterative Tarjan; components numbered in completion order
    std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stk;
    std::vector<uint8_t> on_stack(n, 0);
    int counter = 0, ncomp = 0;
    struct Frame {
        int v;
        size_t edge;
    };
    std::vector<Frame> frames;
    for (int root = 0; root < n; ++root) {
        if (num[root] >= 0) continue;
        frames.push_back({root, 0});
        num[root] = low[root] = counter++;
        stk.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            auto& [v, edge] = frames.back();
            if (edge < adj[v].size()) {
                int w = adj[v][edge++];
                if (num[w] < 0) {
                    num[w] = low[w] = counter++;
                    stk.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                if (low[v] == num[v]) {
                    while (true) {
                        int w = stk.back();
                        stk.pop_back();
                        on_stack[w] = 0;
                        comp[w] = ncomp;
                        if (w == v) break;
                    }
                    ncomp++;
                }
                int vv = v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[vv]);
            }
        }
    }

    std::vector<uint8_t> x(inst.nvars, 0);
    for (int v = 0; v < inst.nvars; ++v) {
        if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
        x[v] = comp[2 * v + 1] < comp[2 * v] ? 1 : 0;
    }
    return x;
}

TwoSatInstance two_clause_cover(const BoolRelation& S) {
    if (S.tuples.empty())
        throw parse_error("two_clause_cover: relation must be nonempty");
    int w = S.width;
    TwoSatInstance inst;
    inst.nvars = w;

    auto lit_holds = [&](uint32_t t, int var, bool pos) {
        return ((t >> var & 1) != 0) == pos;
    };
    auto holds_everywhere = [&](int var, bool pos) {
        for (uint32_t t : S.tuples)
            if (!lit_holds(t, var, pos)) return false;
        return true;
    };

    for (int c = 0; c < w; ++c) {
        if (holds_everywhere(c, false))
            inst.clauses.push_back({{c, false}, {c, false}});
        else if (holds_everywhere(c, true))
            inst.clauses.push_back({{c, true}, {c, true}});
    }
    for (int c1 = 0; c1 < w; ++c1)
        for (int c2 = c1 + 1; c2 < w; ++c2)
            for (int s = 0; s < 4; ++s) {
                bool p1 = s & 1, p2 = s >> 1 & 1;
                // skip clauses a single literal of which already covers S
                if (holds_everywhere(c1, p1) || holds_everywhere(c2, p2)) continue;
                bool ok = true;
                for (uint32_t t : S.tuples)
                    if (!lit_holds(t, c1, p1) && !lit_holds(t, c2, p2)) {
                        ok = false;
                        break;
                    }
                if (ok) inst.clauses.push_back({{c1, p1}, {c2, p2}});
            }

    // the cover must cut out S exactly
    if (w > 22)
        throw resource_guard_error("two_clause_cover: width too large to verify");
    size_t matched = 0;
    for (uint32_t t = 0; t < (1u << w); ++t) {
        bool sat = true;
        for (auto& [a, b] : inst.clauses)
            if (!lit_holds(t, a.var, a.pos) && !lit_holds(t, b.var, b.pos)) {
                sat = false;
                break;
            }
        if (sat != S.contains(t))
            throw not_bijunctive_error("two_clause_cover: relation is not 2-decomposable");
        if (sat) ++matched;
    }
    if (matched != S.tuples.size())
        throw not_bijunctive_error("two_clause_cover: verification mismatch");
    return inst;
}

} // namespace gsat
