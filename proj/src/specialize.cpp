#include "gsat/specialize.hpp"

namespace gsat {

std::vector<int> distinct_first_occurrence(std::span<const int> arg_ids) {
    std::vector<int> out;
    for (int id : arg_ids) {
        bool seen = false;
        for (int o : out)
            if (o == id) { seen = true; break; }
        if (!seen) out.push_back(id);
    }
    return out;
}

TypeTable specialize_table(const TypeTable& T, std::span<const int> arg_ids) {
    if (int(arg_ids.size()) != T.arity())
        throw parse_error("specialize_table: argument count mismatch");
    std::vector<int> distinct = distinct_first_occurrence(arg_ids);
    std::vector<int> rep;  // first position of each distinct id
    for (int id : distinct)
        for (size_t p = 0; p < arg_ids.size(); ++p)
            if (arg_ids[p] == id) { rep.push_back(int(p)); break; }

    TypeTable out(int(distinct.size()));
    for (auto& t : T.types()) {
        bool ok = true;
        for (size_t p = 0; p < arg_ids.size() && ok; ++p)
            for (size_t q = p + 1; q < arg_ids.size() && ok; ++q)
                if (arg_ids[p] == arg_ids[q] && pair_label(t, int(p), int(q)) != Lab::EQ)
                    ok = false;
        if (ok) out.insert(restrict_ktype(t, rep));
    }
    return out;
}

bool implies_equal(const TypeTable& T, int i, int j) {
    for (auto& t : T.types())
        if (pair_label(t, i, j) != Lab::EQ) return false;
    return true;
}

TypeTable injectivize(const TypeTable& T) {
    TypeTable out(T.arity());
    for (auto& t : T.types())
        if (t.discrete()) out.insert(t);
    return out;
}

uint32_t bool_of_type(const KType& t) {
    if (!t.discrete())
        throw parse_error("bool_of_type: type must have a discrete partition");
    // positions coincide with blocks, so adj already is the encoding
    return t.adj;
}

} // namespace gsat
