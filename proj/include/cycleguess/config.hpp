#pragma once

#include <cstdint>
#include <stdexcept>

namespace cycleguess {

enum class OutputFormat { text, structured };

// Run-wide knobs. Flags override environment variables (CYCLEGUESS_*)
// which override these defaults; the CLI performs that resolution.
struct RunConfig {
    std::uint64_t enumeration_budget = 100'000'000; // max candidate colourings
    double solver_time_budget_s = 300.0;            // per exact solver call
    double tolerance = 1e-9;                        // absolute, for entropy comparisons
    std::uint64_t seed = 0;
    int threads = 1;
    OutputFormat output_format = OutputFormat::text;

    // Confusion-graph explicit mode: vertex cap, plus a byte cap on the
    // packed adjacency matrix (V^2/8 bytes) so huge V fails cleanly.
    std::uint64_t explicit_vertex_budget = 1u << 20;
    std::uint64_t adjacency_bytes_budget = std::uint64_t{1} << 31;
    std::uint64_t chi_exact_vertex_budget = 256;

    void validate() const {
        if (enumeration_budget == 0)
            throw std::invalid_argument("enumeration budget must be positive");
        if (!(solver_time_budget_s > 0.0))
            throw std::invalid_argument("solver time budget must be positive");
        if (!(tolerance > 0.0 && tolerance <= 1e-3))
            throw std::invalid_argument("tolerance must lie in (0, 1e-3]");
        if (threads < 1)
            throw std::invalid_argument("thread count must be positive");
    }
};

} // namespace cycleguess
