#pragma once

#include <set>
#include <stdexcept>
#include <string>

namespace sfvs {

using VertexId = int;
using EdgeId = int;
using VertexSet = std::set<VertexId>;
using EdgeSet = std::set<EdgeId>;

// Violated internal invariant; always indicates an implementation bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Caller broke a documented precondition.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parse failure; carries the 1-based input line number.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct timeout_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check(bool cond, const char* what) {
    if (!cond) throw internal_error(what);
}

inline void require(bool cond, const char* what) {
    if (!cond) throw precondition_error(what);
}

}  // namespace sfvs
