#pragma once

#include <map>
#include <utility>

#include "theta/partition.hpp"

namespace theta {

/// A Schur-basis expansion: partition -> positive multiplicity.
struct SchurExpansion {
    std::map<Partition, BigInt> terms;

    /// Multiplicity of s_nu (zero if absent).
    BigInt coefficient(const Partition& nu) const;
    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;
};

/// Littlewood-Richardson number N_{mu nu lambda}, counted as skew tableaux of
/// shape lambda/mu and content nu whose reverse reading word is a lattice word.
BigInt lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda);

/// s_{lambda/mu} in the Schur basis, via the Jacobi-Trudi determinant
/// det(h_{lambda_i - mu_j - i + j}) and Kostka numbers.
/// Throws ContainmentError if mu is not inside lambda.
SchurExpansion skew_schur_expand(const Partition& lambda, const Partition& mu);

/// Same expansion, read off coefficient by coefficient from lr_coefficient.
SchurExpansion skew_schur_expand_lr(const Partition& lambda, const Partition& mu);

/// Number of semistandard tableaux of shape nu and content alpha.
BigInt kostka_number(const Partition& nu, const std::vector<int>& content);

/// For mu in the r x m box, confirms by direct LR computation that
/// N_{mu nu (m^r)} is 1 at nu = complement of mu and 0 for every other nu of
/// the right size, and returns (complement, 1). Throws BoxViolation if mu is
/// outside the box and std::logic_error if the delta pattern fails.
std::pair<Partition, BigInt> rectangular_lr_is_delta(const Partition& mu, std::size_t r, int m);

}  // namespace theta
