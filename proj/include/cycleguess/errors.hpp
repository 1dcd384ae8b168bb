#pragma once

#include <stdexcept>
#include <string>

namespace cycleguess {

// Refusal because an enumeration or adjacency budget would be exceeded.
// The message always names the budget and the requested size.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation that cannot be carried out exactly at this size
// (e.g. constants enumeration for s > 3).
struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Entropy of X over Fix(P) is undefined when Fix(P) is empty.
struct trivial_protocol_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cycleguess
