#include "gsat/clones.hpp"

namespace gsat {

namespace {

Lab max_rule(Lab a, Lab b) { return (a == Lab::N && b == Lab::N) ? Lab::N : Lab::E; }
Lab min_rule(Lab a, Lab b) { return (a == Lab::E && b == Lab::E) ? Lab::E : Lab::N; }

BehaviorTable binary_table(Lab on_mixed_first, Lab on_mixed_second, bool is_max,
                           bool mixed_passes_through) {
    // mixed_passes_through: (q,EQ) -> q and (EQ,q) -> q (balanced);
    // otherwise mixed inputs take the fixed labels given.
    BehaviorTable b;
    b.arity = 2;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Lab a = Lab(i), c = Lab(j), out;
            if (a == Lab::EQ && c == Lab::EQ)
                out = Lab::EQ;
            else if (c == Lab::EQ)
                out = mixed_passes_through ? a : on_mixed_first;
            else if (a == Lab::EQ)
                out = mixed_passes_through ? c : on_mixed_second;
            else
                out = is_max ? max_rule(a, c) : min_rule(a, c);
            b.out[i * 3 + j] = out;
        }
    return b;
}

BehaviorTable constant_binary(Lab value) {
    BehaviorTable b;
    b.arity = 2;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            b.out[i * 3 + j] = (i == 0 && j == 0) ? Lab::EQ : value;
    return b;
}

enum class OneEq { Proj, ConstE, ConstN, Max, Min, Xnor, Xor };
enum class TwoEq { Balanced, ConstE, ConstN };

Lab one_eq_value(OneEq rule, int proj_bit, Lab q1, Lab q2) {
    switch (rule) {
    case OneEq::Proj: return proj_bit ? q2 : q1;
    case OneEq::ConstE: return Lab::E;
    case OneEq::ConstN: return Lab::N;
    case OneEq::Max: return max_rule(q1, q2);
    case OneEq::Min: return min_rule(q1, q2);
    case OneEq::Xnor: return q1 == q2 ? Lab::E : Lab::N;
    case OneEq::Xor: return q1 != q2 ? Lab::E : Lab::N;
    }
    return Lab::N;
}

// mix: 3 bits, one per hyperplane family indexed by the EQ position.
BehaviorTable ternary_table(bool majority, OneEq one_eq, TwoEq two_eq, int mix) {
    BehaviorTable b;
    b.arity = 3;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) {
                Lab a = Lab(i), c = Lab(j), d = Lab(l);
                int eqs = (a == Lab::EQ) + (c == Lab::EQ) + (d == Lab::EQ);
                Lab out;
                if (eqs == 3) {
                    out = Lab::EQ;
                } else if (eqs == 0) {
                    int es = (a == Lab::E) + (c == Lab::E) + (d == Lab::E);
                    out = majority ? (es >= 2 ? Lab::E : Lab::N)
                                   : (es % 2 == 1 ? Lab::E : Lab::N);
                } else if (eqs == 1) {
                    int p = a == Lab::EQ ? 0 : (c == Lab::EQ ? 1 : 2);
                    Lab q1 = p == 0 ? c : a;
                    Lab q2 = p == 2 ? c : d;
                    out = one_eq_value(one_eq, mix >> p & 1, q1, q2);
                } else {
                    Lab q = a != Lab::EQ ? a : (c != Lab::EQ ? c : d);
                    out = two_eq == TwoEq::Balanced ? q
                        : two_eq == TwoEq::ConstE   ? Lab::E
                                                    : Lab::N;
                }
                b.out[(i * 3 + j) * 3 + l] = out;
            }
    return b;
}

std::vector<CloneVariant> make_variants(int id) {
    std::vector<CloneVariant> out;
    auto push = [&](BehaviorTable t) {
        out.push_back({id, int(out.size()), std::move(t)});
    };
    auto push_mixes = [&](bool majority, TwoEq two_eq) {
        for (int mix = 0; mix < 8; ++mix)
            push(ternary_table(majority, OneEq::Proj, two_eq, mix));
    };
    switch (id) {
    case 1: {
        BehaviorTable b;
        b.arity = 1;
        b.constant = true;
        b.out[0] = b.out[1] = b.out[2] = Lab::EQ;
        push(b);
        break;
    }
    case 2: push(binary_table(Lab::EQ, Lab::EQ, true, true)); break;
    case 3: push(binary_table(Lab::EQ, Lab::EQ, false, true)); break;
    case 4: push(binary_table(Lab::E, Lab::E, true, false)); break;
    case 5: push(binary_table(Lab::N, Lab::N, false, false)); break;
    case 6: push_mixes(true, TwoEq::Balanced); break;
    case 7: push(ternary_table(true, OneEq::ConstE, TwoEq::ConstE, 0)); break;
    case 8: push(ternary_table(true, OneEq::ConstN, TwoEq::ConstN, 0)); break;
    case 9: push(ternary_table(true, OneEq::Max, TwoEq::ConstE, 0)); break;
    case 10: push(ternary_table(true, OneEq::Min, TwoEq::ConstN, 0)); break;
    case 11: push_mixes(false, TwoEq::Balanced); break;
    case 12: push_mixes(false, TwoEq::ConstE); break;
    case 13: push_mixes(false, TwoEq::ConstN); break;
    case 14: push(ternary_table(false, OneEq::Xnor, TwoEq::ConstE, 0)); break;
    case 15: push(ternary_table(false, OneEq::Xor, TwoEq::ConstN, 0)); break;
    case 16: push(constant_binary(Lab::E)); break;
    case 17: push(constant_binary(Lab::N)); break;
    default:
        throw parse_error("clone id out of range: " + std::to_string(id));
    }
    return out;
}

} // namespace

std::vector<CloneVariant> clone_variants(int clone_id) {
    if (clone_id < 1 || clone_id > 17)
        throw parse_error("clone id out of range: " + std::to_string(clone_id));
    return make_variants(clone_id);
}

const std::vector<CloneVariant>& all_clone_variants() {
    static const std::vector<CloneVariant> all = [] {
        std::vector<CloneVariant> v;
        for (int id = 1; id <= 17; ++id)
            for (auto& cv : make_variants(id)) v.push_back(cv);
        return v;
    }();
    return all;
}

} // namespace gsat
