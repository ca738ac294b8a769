#include "gsat/unary_actions.hpp"

#include <map>

namespace gsat {

KType apply_unary_action(const UnaryAction& a, const KType& t) {
    uint32_t full = (1u << pair_count(t.m)) - 1;
    KType r = t;
    switch (a.kind) {
    case UnaryAction::Kind::FlipAll:
        r.adj = t.adj ^ full;
        break;
    case UnaryAction::Kind::FlipBlocks: {
        uint32_t s = a.blocks;
        uint32_t all = (1u << t.m) - 1;
        if (s == 0 || (s & ~all) || s == all)
            throw parse_error("flip-blocks: block subset must be nonempty and proper");
        for (int i = 0; i < t.m; ++i)
            for (int j = i + 1; j < t.m; ++j)
                if (((s >> i & 1) ^ (s >> j & 1)) != 0)
                    r.adj ^= 1u << pair_index(i, j, t.m);
        break;
    }
    case UnaryAction::Kind::Cliqueify:
        r.adj = full;
        break;
    case UnaryAction::Kind::Anticliqueify:
        r.adj = 0;
        break;
    }
    return r;
}

bool closed_under(const TypeTable& T, ClosureKind kind) {
    switch (kind) {
    case ClosureKind::FlipAll:
        for (auto& t : T.types())
            if (!T.contains(apply_unary_action(UnaryAction::flip_all(), t))) return false;
        return true;
    case ClosureKind::AllBlockFlips:
        for (auto& t : T.types()) {
            uint32_t all = (1u << t.m) - 1;
            for (uint32_t s = 1; s < all; ++s)
                if (!T.contains(apply_unary_action(UnaryAction::flip_blocks(s), t)))
                    return false;
        }
        return true;
    case ClosureKind::Cliqueify:
        for (auto& t : T.types())
            if (!T.contains(apply_unary_action(UnaryAction::cliqueify(), t))) return false;
        return true;
    case ClosureKind::Anticliqueify:
        for (auto& t : T.types())
            if (!T.contains(apply_unary_action(UnaryAction::anticliqueify(), t))) return false;
        return true;
    case ClosureKind::GraphFree: {
        // partitions present must come with every adjacency choice
        std::map<uint64_t, int> seen;  // partition key -> count
        for (auto& t : T.types()) {
            KType p = t;
            p.adj = 0;
            seen[p.key()]++;
        }
        for (auto& [key, cnt] : seen) {
            KType probe{};
            for (auto& t : T.types()) {
                KType p = t;
                p.adj = 0;
                if (p.key() == key) { probe = t; break; }
            }
            if (cnt != 1 << pair_count(probe.m)) return false;
        }
        return true;
    }
    }
    return false;
}

const char* interdef_name(InterdefClass c) {
    switch (c) {
    case InterdefClass::Graph: return "Graph";
    case InterdefClass::R4: return "R4";
    case InterdefClass::R3: return "R3";
    case InterdefClass::R5: return "R5";
    case InterdefClass::Equality: return "Equality";
    }
    return "?";
}

InterdefClass interdef_class(const std::vector<TypeTable>& psi) {
    bool all_free = true, all_flip = true, all_sw = true;
    for (auto& T : psi) {
        if (!closed_under(T, ClosureKind::GraphFree)) all_free = false;
        if (!closed_under(T, ClosureKind::FlipAll)) all_flip = false;
        if (!closed_under(T, ClosureKind::AllBlockFlips)) all_sw = false;
    }
    if (all_free) return InterdefClass::Equality;
    if (all_flip && all_sw) return InterdefClass::R5;
    if (all_sw) return InterdefClass::R3;
    if (all_flip) return InterdefClass::R4;
    return InterdefClass::Graph;
}

} // namespace gsat
