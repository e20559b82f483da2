#pragma once

#include <utility>
#include <vector>

#include "theta/partition.hpp"

namespace theta {

/// One summand S_mu(C^r) (x) S_mu(C^r)^* of the rectangular branching.
struct BranchingRow {
    Partition mu;
    BigInt dim_left;
    BigInt dim_right;
};

/// Restriction of the GL(2r) module with highest weight m*omega_r to
/// GL(r) x GL(r); one multiplicity-free row per mu in the r x m box.
struct BranchingTable {
    std::size_t r = 0;
    int m = 0;
    std::vector<BranchingRow> rows;
};

struct BranchingIdentity {
    BigInt lhs;
    BigInt rhs;
    bool equal = false;
};

BranchingTable decompose_rectangular(std::size_t r, int m);

/// lhs = dim S_{(m^r)}(C^{2r}); rhs = sum of dim_left * dim_right over the table.
BranchingIdentity verify_branching_identity(std::size_t r, int m);

/// Highest weight of S_mu(C^r) on the fundamental weights: (i, mu_i - mu_{i+1})
/// for i < r and (r, mu_r), 1-based, zero coefficients dropped.
std::vector<std::pair<int, int>> mu_to_highest_weight(const Partition& mu, std::size_t r);

}  // namespace theta
