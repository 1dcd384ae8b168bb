#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cycleguess/config.hpp"
#include "cycleguess/core.hpp"

namespace cycleguess {

// Undirected side-information graph, vertices 0..n-1 internally
// (1-based in the file format).
struct SideInfoGraph {
    int n = 0;
    std::vector<std::vector<int>> adj; // sorted neighbour lists, symmetric

    static SideInfoGraph cycle(int n);
    static SideInfoGraph complete(int n);
    static SideInfoGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    std::size_t edge_count() const;
    bool is_cycle() const; // connected and 2-regular
};

// Edge-list text format: first line is n, then one "u v" pair per line,
// 1-based vertex labels.
SideInfoGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const SideInfoGraph& g);
SideInfoGraph read_graph_file(const std::string& path);

struct MisResult {
    bool exact = false;                 // false: timed out, size is a lower bound
    std::uint64_t size = 0;
    std::vector<std::uint64_t> witness; // an independent set of `size` vertices
};

struct ChiResult {
    bool exact = false; // false: [lower, upper] interval only
    int value = 0;
    int lower = 0;
    int upper = 0;
};

// The confusion graph of (g, s): vertices are all colourings of g encoded
// as integers in [0, s^n); two colourings are adjacent iff some vertex i
// differs between them while all of i's g-neighbours agree. Adjacency is
// always answerable through the oracle; the packed adjacency matrix
// (explicit mode) is built when s^n fits the vertex and byte budgets, and
// the exact solvers require it.
class ConfusionGraph {
  public:
    ConfusionGraph(SideInfoGraph g, int s, const RunConfig& cfg = RunConfig());

    const SideInfoGraph& side_info() const { return g_; }
    int n() const { return g_.n; }
    int s() const { return s_; }
    std::uint64_t vertex_count() const { return vc_; }
    bool explicit_mode() const { return explicit_; }

    bool adjacent(std::uint64_t u, std::uint64_t v) const; // definition oracle
    Colouring decode(std::uint64_t v) const;
    std::uint64_t encode(const Colouring& c) const;

    // Exact maximum independent set (branch and bound on the complement's
    // cliques). Throws budget_error outside explicit mode; on timeout
    // returns the incumbent with exact = false.
    MisResult max_independent_set(const RunConfig& cfg = RunConfig()) const;

    // Exact chromatic number by iterative-deepening exact colouring when
    // the vertex count is within cfg.chi_exact_vertex_budget; otherwise,
    // or on timeout, a [clique, greedy] interval with exact = false.
    ChiResult chromatic_number(const RunConfig& cfg = RunConfig()) const;

  private:
    SideInfoGraph g_;
    int s_ = 0;
    std::uint64_t vc_ = 0;
    bool explicit_ = false;
    std::size_t words_ = 0;             // 64-bit words per matrix row
    std::vector<std::uint64_t> matrix_; // packed rows, explicit mode only
    std::vector<std::uint8_t> digits_;  // vc x n digit table, explicit mode

    bool matrix_bit(std::uint64_t u, std::uint64_t v) const {
        return (matrix_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
                (v & 63)) & 1u;
    }
    void require_explicit(const char* op) const;
};

struct ConfusionStats {
    int n = 0;
    int s = 0;
    std::uint64_t vertex_count = 0;

    bool alpha_computed = false;
    bool alpha_exact = false;
    std::uint64_t alpha = 0; // lower bound when not exact
    double gn = 0.0;         // log_s alpha, when exact

    bool chi_computed = false;
    bool chi_exact = false;
    int chi = 0;
    int chi_lower = 0;
    int chi_upper = 0;
    double beta = 0.0; // log_s chi, when exact

    bool witness_verified = false;
    std::vector<Colouring> witness;
    std::string witness_path; // filled by callers that persist the witness

    bool side_is_cycle = false;
    bool side_is_odd_cycle = false;
    std::uint64_t fcp_fix = 0;  // formula value, odd cycles only
    bool fcp_bound_ok = false;  // alpha >= fcp_fix
    bool square_bound_ok = false; // alpha^2 <= s^n, odd cycles of length >= 5
    bool product_ok = false;    // alpha * chi >= s^n, both exact
    bool rate_ok = false;       // gn + beta >= n (within 1e-9), both exact

    std::string to_text() const;
};

// Assembles alpha and/or chi with all identity cross-checks.
ConfusionStats gn_beta_report(const SideInfoGraph& g, int s, const RunConfig& cfg,
                              bool want_alpha = true, bool want_chi = true);

} // namespace cycleguess
