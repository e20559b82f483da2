#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "theta/factorization.hpp"
#include "theta/json_io.hpp"

using namespace theta;

namespace {

// (g, r, d = r g, k, ell = k) with no marked points satisfies the balance
// condition: k (d + r (1 - g)) = k r = r ell.
ModuliSpec balanced_root(int genus, int rank, int level) {
    return ModuliSpec(genus, rank, rank * genus, level, level, {});
}

void check_all_nodes(const DecompositionTree& t, int& visited) {
    ++visited;
    CHECK(check_star(t.spec).holds);
    for (const auto& [mu, child] : t.children) {
        CHECK(child.spec.genus() == t.spec.genus() - 1);
        CHECK(child.spec.points().size() == t.spec.points().size() + 2);
        CHECK(child.spec.degree() == t.spec.degree());
        CHECK(child.spec.ell() == t.spec.ell());
        check_all_nodes(child, visited);
    }
}

}  // namespace

TEST_CASE("MuIndex validation") {
    CHECK_NOTHROW(MuIndex(Partition{2, 1}, 3, 3));
    CHECK(MuIndex(Partition{2, 1}, 3, 3).mu().parts() == std::vector<int>{2, 1, 0});
    CHECK_THROWS_AS(MuIndex(Partition{3}, 2, 3), BoxViolation);
    CHECK_NOTHROW(MuIndex(Partition{3}, 2, 3, true));
    CHECK_THROWS_AS(MuIndex(Partition{1, 1, 1}, 2, 3), BoxViolation);
    CHECK(enumerate_mu(2, 3).size() == 6);
    CHECK(enumerate_mu(2, 3, true).size() == 10);
}

TEST_CASE("mu_to_boundary: constant mu") {
    for (int c = 0; c <= 3; ++c) {
        const auto b = mu_to_boundary(MuIndex(Partition(std::vector<int>(3, c)), 3, 4));
        CHECK(b.l == 0);
        CHECK(b.point1.alpha == c);
        CHECK(b.point2.alpha == 4 - c);
        CHECK(b.point1.flag == FlagType{3});
        CHECK(b.point2.flag == FlagType{3});
        CHECK(b.point1.weights == WeightVector{c});
    }
}

TEST_CASE("mu_to_boundary: (3,3,1,0) at r = 4, k = 4") {
    const auto b = mu_to_boundary(MuIndex(Partition{3, 3, 1, 0}, 4, 4));
    CHECK(b.l == 2);
    CHECK(b.jumps == std::vector<int>{2, 3});
    CHECK(b.jump_sizes == std::vector<int>{2, 1});
    CHECK(b.point1.flag == FlagType{2, 1, 1});
    CHECK(b.point1.weights == WeightVector{0, 2, 3});
    CHECK(b.point1.alpha == 0);
    CHECK(b.point2.flag == FlagType{1, 1, 2});
    CHECK(b.point2.flag.partial_sums() == std::vector<int>{1, 2, 4});
    CHECK(b.point2.weights.gaps() == std::vector<int>{1, 2});
    CHECK(b.point2.weights == WeightVector{0, 1, 3});
    CHECK(b.point2.alpha == 1);
    CHECK(b.point2_unreversed_weights == WeightVector{0, 2, 3});
    CHECK(b.point1.flag_contribution() == 7);
    CHECK(b.point2.flag_contribution() == 5);
}

TEST_CASE("mu_to_boundary: (1,0) at r = 2, k = 2") {
    const auto b = mu_to_boundary(MuIndex(Partition{1, 0}, 2, 2));
    CHECK(b.l == 1);
    CHECK(b.point1.flag == FlagType{1, 1});
    CHECK(b.point1.weights == WeightVector{0, 1});
    CHECK(b.point1.alpha == 0);
    CHECK(b.point2.flag == FlagType{1, 1});
    CHECK(b.point2.alpha == 1);
}

TEST_CASE("x2 data is the reversal of x1 data") {
    for (int r = 1; r <= 5; ++r)
        for (int k = 1; k <= 5; ++k)
            for (const auto& mu : enumerate_mu(r, k)) {
                const auto b = mu_to_boundary(mu);
                const auto r1 = b.point1.flag.partial_sums();
                const auto r2 = b.point2.flag.partial_sums();
                const auto d1 = b.point1.weights.gaps();
                const auto d2 = b.point2.weights.gaps();
                REQUIRE(d1.size() == static_cast<std::size_t>(b.l));
                REQUIRE(d2.size() == static_cast<std::size_t>(b.l));
                for (int i = 0; i < b.l; ++i) {
                    const auto j = static_cast<std::size_t>(b.l - 1 - i);
                    CHECK(r2[static_cast<std::size_t>(i)] == r - r1[j]);
                    CHECK(d2[static_cast<std::size_t>(i)] == d1[j]);
                }
                CHECK(b.point1.weights.weights().back() == mu.at(1));
                CHECK(b.point2.weights.weights().back() == mu.at(1));
                CHECK(b.point1.weights.bounded_by(k));
            }
}

TEST_CASE("verify_boundary_balance examples") {
    const auto c = verify_boundary_balance(MuIndex(Partition{2, 2, 2}, 3, 5));
    CHECK(c.contribution == 15);
    CHECK(c.holds);
    const auto a = verify_boundary_balance(MuIndex(Partition{3, 3, 1, 0}, 4, 4));
    CHECK(a.contribution == 16);
    CHECK(a.holds);
    const auto b = verify_boundary_balance(MuIndex(Partition{1, 0}, 2, 2));
    CHECK(b.contribution == 4);
    CHECK(b.holds);
}

TEST_CASE("boundary balance for r <= 5, k <= 6") {
    for (int r = 1; r <= 5; ++r)
        for (int k = 1; k <= 6; ++k)
            for (const auto& mu : enumerate_mu(r, k)) {
                const auto b = verify_boundary_balance(mu);
                CHECK(b.contribution == std::int64_t{k} * r);
            }
}

TEST_CASE("degenerate") {
    // r = 1, k = 2, g = 2: n = d - 1, so d = 3 and ell = 4.
    const ModuliSpec a(2, 1, 3, 2, 4, {});
    REQUIRE(check_star(a).holds);
    const auto ca = degenerate(a);
    REQUIRE(ca.size() == 2);
    CHECK(ca[0].first.mu() == Partition{0});
    CHECK(ca[1].first.mu() == Partition{1});
    for (const auto& [mu, child] : ca) {
        CHECK(child.genus() == 1);
        CHECK(check_star(child).holds);
        CHECK(child.points()[0].label == "x1@1");
        CHECK(child.points()[1].label == "x2@1");
    }

    const ModuliSpec b(1, 2, 2, 2, 2, {});
    REQUIRE(check_star(b).holds);
    CHECK(degenerate(b).size() == 3);

    CHECK_THROWS_AS(degenerate(ModuliSpec(0, 1, 1, 1, 1, {})), ValidationError);
    CHECK_THROWS_AS(degenerate(ModuliSpec(2, 1, 3, 2, 5, {})), ValidationError);
}

TEST_CASE("child count equals binomial(r + k - 1, r)") {
    for (int r = 1; r <= 4; ++r)
        for (int k = 1; k <= 4; ++k)
            CHECK(static_cast<std::int64_t>(degenerate(balanced_root(1, r, k)).size()) ==
                  oracle::binomial(r + k - 1, r));
}

TEST_CASE("build_tree shapes") {
    const ModuliSpec a(2, 1, 3, 2, 4, {});
    CHECK(build_tree(a, 0).node_count() == 1);
    const auto t = build_tree(a, 2);
    CHECK(t.node_count() == 7);
    CHECK(t.leaf_count() == 4);
    CHECK(build_tree(a, 5).node_count() == 7);  // stops at genus 0

    const auto u = build_tree(ModuliSpec(1, 2, 2, 2, 2, {}), 1);
    CHECK(u.node_count() == 4);
    CHECK(u.leaf_count() == 3);

    CHECK_THROWS_AS(build_tree(a, -1), ValidationError);
    CHECK_THROWS_AS(build_tree(ModuliSpec(2, 1, 3, 2, 5, {}), 1), ValidationError);

    // Multi-level labels stay distinct.
    std::set<std::string> labels;
    for (const auto& p : t.children[0].second.children[0].second.spec.points()) labels.insert(p.label);
    CHECK(labels == std::set<std::string>{"x1@1", "x2@1", "x1@2", "x2@2"});
}

TEST_CASE("balance holds at every node of a depth-3 tree") {
    const auto t = build_tree(balanced_root(3, 2, 3), 3);
    int visited = 0;
    check_all_nodes(t, visited);
    CHECK(visited == 1 + 6 + 36 + 216);
}

TEST_CASE("tree shape does not depend on degree or ell") {
    const auto a = build_tree(ModuliSpec(2, 1, 3, 2, 4, {}), 2);
    const auto b = build_tree(ModuliSpec(2, 1, 5, 2, 8, {}), 2);
    CHECK(a.node_count() == b.node_count());
    CHECK(a.leaf_count() == b.leaf_count());
    CHECK(tree_to_json(a) == tree_to_json(a));
}

TEST_CASE("aggregate_dimension") {
    const ModuliSpec a(2, 1, 3, 2, 4, {});
    const auto one = [](const ModuliSpec&) { return BigInt(1); };
    CHECK(aggregate_dimension(build_tree(a, 1), one) == 2);
    CHECK(aggregate_dimension(build_tree(a, 2), one) == 4);
    CHECK(aggregate_dimension(build_tree(a, 2), [](const ModuliSpec&) { return BigInt(0); }) == 0);

    // Linearity: doubling each leaf value doubles the root.
    const auto t = build_tree(balanced_root(2, 2, 3), 2);
    const auto f = [](const ModuliSpec& s) { return BigInt(static_cast<long>(s.points().size() + s.genus() + 1)); };
    const auto g = [&](const ModuliSpec& s) -> BigInt { return 2 * f(s); };
    CHECK(aggregate_dimension(t, g) == 2 * aggregate_dimension(t, f));

    try {
        aggregate_dimension(t, [](const ModuliSpec&) -> BigInt { throw std::runtime_error("no value"); });
        FAIL("expected LeafOracleError");
    } catch (const LeafOracleError& e) {
        CHECK(e.leaf().genus() == 0);
        CHECK(std::string(e.what()) == "no value");
    }
}

TEST_CASE("inclusive bound enumerates the r x k box") {
    const auto kids = degenerate(balanced_root(1, 2, 2), 1, true);
    CHECK(kids.size() == 6);
    for (const auto& [mu, child] : kids) CHECK(check_star(child).holds);
}
