#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace theta {

struct SweepResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    /// Description of the first failing case in enumeration order, if any.
    std::string first_failure;
};

/// Exhaustive checks of the structural identities up to the given bounds:
/// boundary balance (r <= max_rank, k <= max_level), balance preservation on
/// decomposition trees, telescoping over every flag type with r <= max_rank,
/// and the rectangular branching identity for r <= max_rank, m <= max_level.
/// Work is split across at most `threads` workers; results are merged in a
/// fixed order, so output does not depend on the thread count.
std::vector<SweepResult> run_identity_sweep(int max_rank, int max_level, unsigned threads);

/// Every composition of r (ordered sequence of positive parts), in
/// lexicographic order.
std::vector<std::vector<int>> compositions(int r);

/// Reads THETA_FACTOR_THREADS; falls back to the hardware concurrency.
unsigned sweep_threads_from_env();

}  // namespace theta
