#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cycleguess/core.hpp"

namespace cycleguess {

// A protocol on C_n: one s*s guess table per vertex. Row index is the
// colour of v_{i-1}, column index the colour of v_{i+1}; the table
// representation itself guarantees f_i depends on nothing else.
struct Protocol {
    ColourSpace space;
    Cycle cycle;
    std::vector<std::vector<int>> tables; // tables[i][left*s + right], i 0-based

    Protocol(ColourSpace sp, Cycle cy, std::vector<std::vector<int>> tb);

    int guess(int i, int left, int right) const {
        return tables[i][left * space.s + right];
    }
};

struct FixedSet {
    int n = 0;
    int s = 0;
    std::vector<Colouring> members; // lexicographic order

    std::uint64_t count() const { return members.size(); }
};

// s = m^2 - t, the round-down parametrisation of the colour count.
struct RoundDownSpec {
    int m = 0;
    int t = 0;
    int s = 0;

    RoundDownSpec(int m_, int t_);
};

// Applies every local function once: returns (f_1(c), ..., f_n(c)).
// The players win exactly when the result equals c.
Colouring evaluate(const Protocol& p, const Colouring& c);

bool is_fixed_point(const Protocol& p, const Colouring& c);

// Exact enumeration of Fix(p) in lexicographic mixed-radix order
// (c_1 most significant). Refuses when s^n exceeds the budget. The
// range may be split across threads; chunks are concatenated in range
// order, so the output never depends on the thread count.
FixedSet enumerate_fixed_set(const Protocol& p,
                             std::uint64_t budget = 100'000'000,
                             int threads = 1);

// The fractional-clique-partition protocol on C_n (n odd). Its fixed
// number is a * s^((n-1)/2) with a the greatest divisor of s <= sqrt(s).
Protocol build_fcp(int n, int s);

// Fixed count of P_fcp by formula, without enumeration.
std::uint64_t fcp_fix_formula(int n, int s);

// Colour forgetting: a protocol on s_prime <= s colours whose fixed set
// contains every member of Fix(p) with all entries below s_prime.
// Inherited guesses that fall outside [0, s_prime) become 0.
Protocol restrict_protocol(const Protocol& p, int s_prime);

// Lower bound s^(n/2) * (1 - t*n/s) on fix of the restricted protocol
// built from P_fcp on m^2 colours. May be non-positive (vacuous).
double round_down_bound(const RoundDownSpec& spec, int n);

// --- file formats ------------------------------------------------------
//
// Protocol (text, versioned):
//   cycleguess-protocol v1
//   n=<n> s=<s>
//   then for each vertex 1..n, s lines of s space-separated guesses
//   (row = colour of the left neighbour, column = right neighbour).
//
// Fixed sets export as one colouring per line, entries space-separated.

void write_protocol(std::ostream& os, const Protocol& p);
Protocol read_protocol(std::istream& is);
Protocol read_protocol_file(const std::string& path);
void write_protocol_file(const std::string& path, const Protocol& p);

void write_fixed_set(std::ostream& os, const FixedSet& fs);

} // namespace cycleguess
