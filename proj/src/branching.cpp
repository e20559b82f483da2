#include "theta/branching.hpp"

namespace theta {

BranchingTable decompose_rectangular(std::size_t r, int m) {
    if (r == 0) throw ValidationError("branching rank must be positive");
    if (m < 0) throw ValidationError("branching power must be nonnegative");
    BranchingTable table{r, m, {}};
    const int n = static_cast<int>(r);
    for (auto& mu : enumerate_in_box(r, m)) {
        BigInt left = dim_schur(mu, n);
        // The dual module has the same dimension.
        BigInt right = dim_schur(mu, n);
        table.rows.push_back({std::move(mu), std::move(left), std::move(right)});
    }
    return table;
}

BranchingIdentity verify_branching_identity(std::size_t r, int m) {
    const auto table = decompose_rectangular(r, m);
    BranchingIdentity out;
    out.lhs = dim_schur(Partition(std::vector<int>(r, m)), static_cast<int>(2 * r));
    out.rhs = 0;
    for (const auto& row : table.rows) out.rhs += row.dim_left * row.dim_right;
    out.equal = out.lhs == out.rhs;
    return out;
}

std::vector<std::pair<int, int>> mu_to_highest_weight(const Partition& mu, std::size_t r) {
    if (r == 0) throw ValidationError("rank must be positive");
    if (mu.length() > r)
        throw BoxViolation("partition " + mu.to_string() + " has more than " + std::to_string(r) +
                           " parts");
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < r; ++i) {
        const int coeff = mu[i] - mu[i + 1];
        if (coeff != 0) out.emplace_back(static_cast<int>(i + 1), coeff);
    }
    return out;
}

}  // namespace theta
