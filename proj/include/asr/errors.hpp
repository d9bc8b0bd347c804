#pragma once

#include <stdexcept>
#include <string>

namespace asr {

// Error taxonomy mirrored by the CLI exit codes:
//   ParseError -> 2, PreconditionError -> 3, BudgetError -> 4, InvariantError -> 5.

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A proof-checking invariant failed; callers are expected to abort loudly.
struct InvariantError : std::logic_error {
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

inline void check_invariant(bool cond, const std::string& what) {
    if (!cond) throw InvariantError(what);
}

}  // namespace asr
