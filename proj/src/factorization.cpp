#include "theta/factorization.hpp"

namespace theta {

MuIndex::MuIndex(Partition mu, int rank, int level, bool inclusive)
    : rank_(rank), level_(level) {
    if (rank <= 0) throw ValidationError("mu index: rank must be positive");
    if (level <= 0) throw ValidationError("mu index: level must be positive");
    const int cap = inclusive ? level : level - 1;
    if (!mu.fits_in_box(static_cast<std::size_t>(rank), cap))
        throw BoxViolation("mu " + mu.to_string() + " is outside the " + std::to_string(rank) +
                           "x" + std::to_string(cap) + " box");
    mu_ = mu.padded(static_cast<std::size_t>(rank));
}

std::vector<MuIndex> enumerate_mu(int rank, int level, bool inclusive) {
    std::vector<MuIndex> out;
    for (auto& p : enumerate_in_box(static_cast<std::size_t>(rank), inclusive ? level : level - 1))
        out.emplace_back(std::move(p), rank, level, inclusive);
    return out;
}

BoundaryData mu_to_boundary(const MuIndex& mu, const std::string& label1, const std::string& label2) {
    const int r = mu.rank();
    const int k = mu.level();
    BoundaryData out;
    for (int i = 1; i < r; ++i) {
        const int d = mu.at(i) - mu.at(i + 1);
        if (d != 0) {
            out.jumps.push_back(i);
            out.jump_sizes.push_back(d);
        }
    }
    out.l = static_cast<int>(out.jumps.size());
    const int l = out.l;
    const int base = mu.at(r);

    // x1: r_i(x1) are the jumps, d_i(x1) the jump sizes.
    std::vector<int> n1, a1{base};
    int prev = 0;
    for (int i = 0; i < l; ++i) {
        n1.push_back(out.jumps[static_cast<std::size_t>(i)] - prev);
        prev = out.jumps[static_cast<std::size_t>(i)];
        a1.push_back(a1.back() + out.jump_sizes[static_cast<std::size_t>(i)]);
    }
    n1.push_back(r - prev);

    // x2: r_i(x2) = r - r_{l-i+1}(x1), d_i(x2) = d_{l-i+1}(x1).
    std::vector<int> n2, a2{base};
    prev = 0;
    for (int i = 1; i <= l; ++i) {
        const auto src = static_cast<std::size_t>(l - i);
        const int ri = r - out.jumps[src];
        n2.push_back(ri - prev);
        prev = ri;
        a2.push_back(a2.back() + out.jump_sizes[src]);
    }
    n2.push_back(r - prev);

    out.point1 = MarkedPoint(label1, FlagType(n1), WeightVector(a1), base);
    out.point2 = MarkedPoint(label2, FlagType(n2), WeightVector(a2), k - mu.at(1));
    out.point2_unreversed_weights = WeightVector(a1);
    return out;
}

BalanceReport verify_boundary_balance(const MuIndex& mu) {
    const auto b = mu_to_boundary(mu);
    BalanceReport out;
    out.contribution = b.point1.flag_contribution() + b.point2.flag_contribution() +
                       std::int64_t{mu.rank()} * (b.point1.alpha + b.point2.alpha);
    out.holds = out.contribution == std::int64_t{mu.level()} * mu.rank();
    return out;
}

std::vector<std::pair<MuIndex, ModuliSpec>> degenerate(const ModuliSpec& spec, int level_tag,
                                                       bool inclusive) {
    if (spec.genus() < 1)
        throw ValidationError("cannot degenerate a genus 0 curve");
    if (const auto star = check_star(spec); !star.holds)
        throw ValidationError("parent data violates the balance condition: lhs " +
                              std::to_string(star.lhs) + " != rhs " + std::to_string(star.rhs));
    const std::string tag = "@" + std::to_string(level_tag);
    std::vector<std::pair<MuIndex, ModuliSpec>> out;
    for (auto& mu : enumerate_mu(spec.rank(), spec.level(), inclusive)) {
        auto b = mu_to_boundary(mu, "x1" + tag, "x2" + tag);
        ModuliSpec child =
            spec.with_genus_and_points(spec.genus() - 1, {std::move(b.point1), std::move(b.point2)});
        if (!check_star(child).holds)
            throw std::logic_error("child for mu " + mu.mu().to_string() +
                                   " violates the balance condition");
        out.emplace_back(std::move(mu), std::move(child));
    }
    return out;
}

std::size_t DecompositionTree::node_count() const {
    std::size_t n = 1;
    for (const auto& [mu, child] : children) n += child.node_count();
    return n;
}

std::size_t DecompositionTree::leaf_count() const {
    if (is_leaf()) return 1;
    std::size_t n = 0;
    for (const auto& [mu, child] : children) n += child.leaf_count();
    return n;
}

namespace {

DecompositionTree build_node(const ModuliSpec& spec, int remaining, int level_tag, bool inclusive) {
    DecompositionTree node{spec, {}};
    if (remaining <= 0 || spec.genus() == 0) return node;
    for (auto& [mu, child] : degenerate(spec, level_tag, inclusive))
        node.children.emplace_back(std::move(mu),
                                   build_node(child, remaining - 1, level_tag + 1, inclusive));
    return node;
}

}  // namespace

DecompositionTree build_tree(const ModuliSpec& spec, int depth, bool inclusive) {
    if (depth < 0) throw ValidationError("tree depth must be nonnegative");
    if (const auto star = check_star(spec); !star.holds)
        throw ValidationError("root data violates the balance condition: lhs " +
                              std::to_string(star.lhs) + " != rhs " + std::to_string(star.rhs));
    return build_node(spec, depth, 1, inclusive);
}

BigInt aggregate_dimension(const DecompositionTree& tree, const LeafOracle& oracle) {
    if (tree.is_leaf()) {
        try {
            return oracle(tree.spec);
        } catch (const LeafOracleError&) {
            throw;
        } catch (const std::exception& e) {
            throw LeafOracleError(tree.spec, e.what());
        }
    }
    BigInt total = 0;
    for (const auto& [mu, child] : tree.children) total += aggregate_dimension(child, oracle);
    return total;
}

}  // namespace theta
