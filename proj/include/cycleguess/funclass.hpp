#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cycleguess/core.hpp"

namespace cycleguess {

// A local guessing function f : Z_s x Z_s -> Z_s, stored row-major:
// table[x*s + y] = f(x, y) where x is the left argument.
struct LocalFunction {
    ColourSpace space;
    std::vector<int> table;

    LocalFunction(ColourSpace space, std::vector<int> table);

    int s() const { return space.s; }
    int operator()(int x, int y) const {
        return table[static_cast<size_t>(x) * static_cast<size_t>(space.s) +
                     static_cast<size_t>(y)];
    }
};

// Classification of a local function:
//   flat          every output value has exactly s preimages
//   semi-perfect  flat, and the two arguments are conditionally independent
//                 given the output (I(U1;U2|f(U)) = 0 for uniform U)
//   perfect       semi-perfect with |L(z)| and |R(z)| constant across z
struct FunctionClass {
    bool is_flat = false;
    bool is_semi_perfect = false;
    bool is_perfect = false;
    double cond_mi = 0.0;            // I(U1;U2|f(U)), base s
    std::vector<int> preimage_sizes; // |f^{-1}(z)| per z
    std::vector<int> left_sizes;     // |L(z)| per z
    std::vector<int> right_sizes;    // |R(z)| per z

    std::string to_text(int s) const;
};

FunctionClass classify(const LocalFunction& f, double tolerance = 1e-9);

// L(f,z) = {x | f(x,y) = z for some y} and R(f,z) = {y | f(x,y) = z for
// some x}, each returned in increasing order.
std::pair<std::vector<int>, std::vector<int>> lr_sets(const LocalFunction& f, int z);

// True iff every declared outcome probability is within eps of 1/k. The
// distribution must declare exactly k outcomes (zeros included).
bool is_k_eps_uniform(const std::vector<double>& probs, int k, double eps);

// Shannon entropy of a probability vector in the given base.
double distribution_entropy(const std::vector<double>& probs, int base);

// All tables of flat functions Z_s^2 -> Z_s (every value exactly s times),
// in lexicographic order. There are (s^2)! / (s!)^s of them.
std::vector<std::vector<int>> enumerate_flat_tables(int s);

struct ConstantsReport {
    int s = 0;
    double epsilon = 0.0;
    double delta1 = 0.0;
    double delta2 = 0.0;
    double delta = 0.0;
    std::int64_t N = 0;

    // Derivation detail.
    double eps_cap = 0.0;           // 1 / (s^2 (2s+1))
    double eps_cont = 0.0;          // continuity radius from the Fannes scan
    double delta2_alt = 0.0;        // (s eps^2 / 3) * ln s, the other reading
    std::uint64_t flat_count = 0;
    std::uint64_t flat_non_semi_perfect_count = 0;
    std::vector<int> argmin_table;  // flat non-semi-perfect table of minimal MI
    double argmin_cond_mi = 0.0;

    struct TraceEntry {
        double eps;
        double tau;
        double bound;
        bool accepted;
    };
    std::vector<TraceEntry> trace;

    std::string to_text() const;
};

// Computes epsilon, delta1, delta2, delta and the cycle-length threshold
// N = ceil(7 (1/delta + 2)) for s in {2, 3}. Larger s would require
// scanning s^(s^2) candidate functions and is refused.
ConstantsReport compute_constants(int s);

// Named example functions: "xor" = x+y mod s, "proj" = x,
// "pi" = pi(phi(x), psi(y)) over the canonical factor split.
LocalFunction builtin_function(const std::string& name, int s);

// Text format: header "cycleguess-function v1", then "s=<s>", then s rows
// of s integers (row = left argument).
LocalFunction read_function(std::istream& in);
void write_function(std::ostream& out, const LocalFunction& f);
LocalFunction read_function_file(const std::string& path);
void write_function_file(const std::string& path, const LocalFunction& f);

} // namespace cycleguess
