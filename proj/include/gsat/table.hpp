#pragma once

#include <unordered_set>
#include <vector>

#include "gsat/ktype.hpp"

namespace gsat {

// A relation first-order definable in the random graph, stored extensionally
// as a set of canonical KTypes of fixed arity. Members are kept sorted in
// enumeration order; membership is O(1) expected via the key set.
class TypeTable {
public:
    TypeTable() = default;
    explicit TypeTable(int arity) : arity_(arity) {}
    TypeTable(int arity, std::vector<KType> types) : arity_(arity) {
        for (auto& t : types) insert(t);
    }

    int arity() const { return arity_; }
    size_t size() const { return types_.size(); }
    bool empty() const { return types_.empty(); }
    const std::vector<KType>& types() const { return types_; }

    bool contains(const KType& t) const { return keys_.count(t.key()) != 0; }

    void insert(const KType& t) {
        if (t.k != arity_)
            throw internal_inconsistency_error("TypeTable: arity mismatch on insert");
        if (keys_.insert(t.key()).second) {
            auto it = std::lower_bound(types_.begin(), types_.end(), t);
            types_.insert(it, t);
        }
    }

    bool operator==(const TypeTable& o) const {
        return arity_ == o.arity_ && types_ == o.types_;
    }

    TypeTable complement_within(const std::vector<KType>& universe) const {
        TypeTable r(arity_);
        for (auto& t : universe)
            if (!contains(t)) r.insert(t);
        return r;
    }

private:
    int arity_ = 0;
    std::vector<KType> types_;
    std::unordered_set<uint64_t> keys_;
};

} // namespace gsat
