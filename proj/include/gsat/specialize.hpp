#pragma once

#include <span>

#include "gsat/table.hpp"

namespace gsat {

// Keeps the types of T whose positions at merged/repeated arguments are EQ,
// restricted to one position (the first occurrence) per distinct argument id.
TypeTable specialize_table(const TypeTable& T, std::span<const int> arg_ids);

// Distinct ids of arg_ids in first-occurrence order.
std::vector<int> distinct_first_occurrence(std::span<const int> arg_ids);

// True iff every type of T has label EQ at (i, j).
bool implies_equal(const TypeTable& T, int i, int j);

// The largest injective relation contained in T: the discrete-partition types.
TypeTable injectivize(const TypeTable& T);

// Boolean encoding of an all-distinct type: bit pair_index(i,j,k) is 1 iff
// positions i,j are adjacent, coordinates ordered (1,2),(1,3),...,(k-1,k).
uint32_t bool_of_type(const KType& t);

} // namespace gsat
