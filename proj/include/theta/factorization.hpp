#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "theta/parabolic.hpp"
#include "theta/partition.hpp"

namespace theta {

/// A partition mu with exactly r (possibly zero) parts and mu_1 <= k - 1,
/// or mu_1 <= k when the inclusive bound is requested.
class MuIndex {
public:
    MuIndex(Partition mu, int rank, int level, bool inclusive = false);

    const Partition& mu() const { return mu_; }
    int rank() const { return rank_; }
    int level() const { return level_; }
    /// mu_i, 1-based.
    int at(int i) const { return mu_[static_cast<std::size_t>(i - 1)]; }

    friend bool operator==(const MuIndex& a, const MuIndex& b) { return a.mu_ == b.mu_; }

private:
    Partition mu_;
    int rank_;
    int level_;
};

/// Every MuIndex for rank r and level k, in box-enumeration order.
std::vector<MuIndex> enumerate_mu(int rank, int level, bool inclusive = false);

/// Parabolic data at the two preimages x1, x2 of the node induced by mu.
struct BoundaryData {
    /// Number of nonzero consecutive differences of mu.
    int l = 0;
    /// Jump positions r_1 < ... < r_l (1-based).
    std::vector<int> jumps;
    /// d_i = mu_{r_i} - mu_{r_i + 1}.
    std::vector<int> jump_sizes;
    MarkedPoint point1;
    MarkedPoint point2;
    /// The x2 weights written with the x1 jump order, (mu_r, mu_r + d_1, ...).
    /// Reported only; balance uses point2.weights.
    WeightVector point2_unreversed_weights;
};

BoundaryData mu_to_boundary(const MuIndex& mu, const std::string& label1 = "x1",
                            const std::string& label2 = "x2");

struct BalanceReport {
    std::int64_t contribution = 0;
    bool holds = false;
};

/// Flag terms of both boundary points plus r(alpha_1 + alpha_2), compared
/// against k * r.
BalanceReport verify_boundary_balance(const MuIndex& mu);

/// One factorization step: a child on genus g - 1 for every mu. Boundary
/// points are labelled "x1@<level>" and "x2@<level>".
std::vector<std::pair<MuIndex, ModuliSpec>> degenerate(const ModuliSpec& spec, int level_tag = 1,
                                                       bool inclusive = false);

struct DecompositionTree {
    ModuliSpec spec;
    std::vector<std::pair<MuIndex, DecompositionTree>> children;

    bool is_leaf() const { return children.empty(); }
    std::size_t node_count() const;
    std::size_t leaf_count() const;
};

/// Applies degenerate repeatedly until genus 0 or `depth` steps.
DecompositionTree build_tree(const ModuliSpec& spec, int depth, bool inclusive = false);

using LeafOracle = std::function<BigInt(const ModuliSpec&)>;

/// A leaf oracle failed; carries the offending leaf.
class LeafOracleError : public std::runtime_error {
public:
    LeafOracleError(ModuliSpec leaf, const std::string& what)
        : std::runtime_error(what), leaf_(std::move(leaf)) {}
    const ModuliSpec& leaf() const { return leaf_; }

private:
    ModuliSpec leaf_;
};

/// Leaves take the oracle's value; internal nodes sum their children.
BigInt aggregate_dimension(const DecompositionTree& tree, const LeafOracle& oracle);

}  // namespace theta
