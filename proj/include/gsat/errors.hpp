#pragma once

#include <stdexcept>
#include <string>

namespace gsat {

// Parse / input problems: CLI exit code 1.
struct parse_error : std::runtime_error {
    int line = 0, col = 0;
    parse_error(const std::string& msg, int line_ = 0, int col_ = 0)
        : std::runtime_error(msg), line(line_), col(col_) {}
};

// Arity guards, preservation budgets, oracle caps: CLI exit code 2.
struct resource_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A solver or compiler contradicted its own contract: CLI exit code 3.
struct internal_inconsistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// compile_edge_affine verification failed; doubles as the "is edge affine" test.
struct not_edge_affine_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// compile_bijunctive / two_clause_cover verification failed.
struct not_bijunctive_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gsat
