#pragma once

#include <stdexcept>
#include <string>

namespace ordpart {

// Violated operation precondition (bad input). CLI maps this to exit code 2.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Enumeration would exceed a configured budget. CLI maps this to exit code 3.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural invariant failed; indicates a bug, never a valid state.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw precondition_error(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

inline void check_budget(bool within, const std::string& msg) {
    if (!within) throw budget_error(msg);
}

}  // namespace ordpart
