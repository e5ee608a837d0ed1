#pragma once

#include <cstdint>
#include <string>

namespace dhero {

/// Input-size ceilings for the exhaustive searches. Searches that would
/// exceed a ceiling throw ResourceError instead of running unbounded.
///
/// Each field can be overridden through the environment variable named in
/// its comment; `limits()` reads them once on first use.
struct Limits {
    int solver_vertices = 40;           ///< DHERO_MAX_SOLVER_VERTICES (exact dicolouring / colouring)
    std::uint64_t solver_nodes = 200'000'000;  ///< DHERO_MAX_SOLVER_NODES (branch-and-bound nodes)
    int fas_arcs = 22;                  ///< DHERO_MAX_FAS_ARCS (subset search over arcs)
    int cluster_vertices = 16;          ///< DHERO_MAX_CLUSTER_VERTICES (t-cluster subset search)
    int jewel_host_vertices = 24;       ///< DHERO_MAX_JEWEL_VERTICES
    std::uint64_t canonical_permutations = 4'000'000;  ///< DHERO_MAX_CANON_PERMUTATIONS
    int qt_vertices = 14;               ///< DHERO_MAX_QT_VERTICES (brute-force module search)
    std::uint64_t bound_bits = std::uint64_t{1} << 27;  ///< DHERO_MAX_BOUND_BITS (big-integer size)

    static Limits from_env();
};

/// Process-wide limits (from the environment on first call).
const Limits& limits();

/// Replace the process-wide limits. Not thread-safe; meant for tests and
/// command-line setup.
void set_limits(const Limits& l);

}  // namespace dhero
