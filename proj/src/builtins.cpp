#include "gsat/builtins.hpp"

#include <array>
#include <map>
#include <mutex>

namespace gsat {

namespace {

struct Info {
    Builtin b;
    const char* name;
    int arity;
};

constexpr std::array<Info, 15> kInfos{{
    {Builtin::H, "H", 6},
    {Builtin::T, "T", 4},
    {Builtin::Tprime, "Tprime", 4},
    {Builtin::P3, "P3", 3},
    {Builtin::Q3, "Q3", 3},
    {Builtin::Q4, "Q4", 4},
    {Builtin::R3, "R3", 3},
    {Builtin::R4, "R4", 4},
    {Builtin::R5, "R5", 5},
    {Builtin::L, "L", 6},
    {Builtin::E6, "E6", 6},
    {Builtin::EDGE, "EDGE", 2},
    {Builtin::NONEDGE, "NONEDGE", 2},
    {Builtin::NEQ, "NEQ", 2},
    {Builtin::EQREL, "EQ", 2},
}};

// Edge count among a subset of positions of a discrete type.
int edges_within(const KType& t, std::initializer_list<int> pos) {
    int c = 0;
    for (auto i = pos.begin(); i != pos.end(); ++i)
        for (auto j = i + 1; j != pos.end(); ++j)
            if (pair_label(t, *i, *j) == Lab::E) ++c;
    return c;
}

// Shape tests on discrete 4-types.
bool is_single_edge(const KType& t) { return t.edge_count() == 1; }

bool is_two_edge_path(const KType& t) {
    if (t.edge_count() != 2) return false;
    // the two edges must share a vertex
    std::array<int, 4> deg{};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (t.adjacent(i, j)) { deg[i]++; deg[j]++; }
    for (int d : deg)
        if (d == 2) return true;
    return false;
}

bool is_three_edge_path(const KType& t) {
    if (t.edge_count() != 3) return false;
    std::array<int, 4> deg{};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (t.adjacent(i, j)) { deg[i]++; deg[j]++; }
    int ones = 0, twos = 0;
    for (int d : deg) {
        if (d == 1) ones++;
        if (d == 2) twos++;
    }
    return ones == 2 && twos == 2;
}

bool in_t_shapes(const KType& t) {
    return is_single_edge(t) || is_two_edge_path(t) || is_three_edge_path(t);
}

KType complement4(const KType& t) {
    KType c = t;
    c.adj = ~t.adj & ((1u << pair_count(t.m)) - 1);
    return c;
}

bool member(Builtin b, const KType& t) {
    switch (b) {
    case Builtin::EDGE:
        return pair_label(t, 0, 1) == Lab::E;
    case Builtin::NONEDGE:
        return pair_label(t, 0, 1) == Lab::N;
    case Builtin::NEQ:
        return pair_label(t, 0, 1) != Lab::EQ;
    case Builtin::EQREL:
        return pair_label(t, 0, 1) == Lab::EQ;
    case Builtin::P3:
        return t.discrete() && t.edge_count() >= 1 && t.edge_count() <= 2;
    case Builtin::Q3:
        return t.discrete() && (t.edge_count() == 0 || t.edge_count() == 3);
    case Builtin::Q4:
        return t.discrete() && (t.edge_count() == 0 || t.edge_count() == 6);
    case Builtin::R3:
    case Builtin::R4:
    case Builtin::R5:
        return t.discrete() && t.edge_count() % 2 == 1;
    case Builtin::T:
        return t.discrete() && (in_t_shapes(t) || in_t_shapes(complement4(t)));
    case Builtin::Tprime:
        return t.discrete() && !member(Builtin::T, t);
    case Builtin::L:
        return t.discrete() &&
               edges_within(t, {0, 1, 2}) % 2 == edges_within(t, {3, 4, 5}) % 2;
    case Builtin::H: {
        if (!t.discrete()) return false;
        // cross pairs between the three (x_i,y_i) groups are all N
        for (int g1 = 0; g1 < 3; ++g1)
            for (int g2 = g1 + 1; g2 < 3; ++g2)
                for (int u = 2 * g1; u <= 2 * g1 + 1; ++u)
                    for (int v = 2 * g2; v <= 2 * g2 + 1; ++v)
                        if (pair_label(t, u, v) != Lab::N) return false;
        // exactly one within-group edge
        int e = 0;
        for (int g = 0; g < 3; ++g)
            if (pair_label(t, 2 * g, 2 * g + 1) == Lab::E) ++e;
        return e == 1;
    }
    case Builtin::E6: {
        Lab x = pair_label(t, 0, 1), y = pair_label(t, 2, 3), z = pair_label(t, 4, 5);
        int eqs = (x == Lab::EQ) + (y == Lab::EQ) + (z == Lab::EQ);
        return eqs == 1;
    }
    }
    return false;
}

} // namespace

std::optional<Builtin> builtin_by_name(const std::string& name) {
    for (auto& i : kInfos)
        if (name == i.name) return i.b;
    return std::nullopt;
}

const char* builtin_name(Builtin b) {
    for (auto& i : kInfos)
        if (i.b == b) return i.name;
    return "?";
}

int builtin_arity(Builtin b) {
    for (auto& i : kInfos)
        if (i.b == b) return i.arity;
    return 0;
}

const TypeTable& builtin_table(Builtin b) {
    static std::map<Builtin, TypeTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(b);
    if (it != cache.end()) return it->second;
    int k = builtin_arity(b);
    TypeTable table(k);
    for (auto& t : enumerate_ktypes(k))
        if (member(b, t)) table.insert(t);
    return cache.emplace(b, std::move(table)).first->second;
}

} // namespace gsat
