#include <doctest.h>

#include "oracles.hpp"
#include "theta/partition.hpp"

using namespace theta;

TEST_CASE("partition construction and normalization") {
    CHECK_THROWS_AS(Partition({1, 2}), ValidationError);
    CHECK_THROWS_AS(Partition({2, -1}), ValidationError);

    const Partition p{3, 1, 0, 0};
    CHECK(p.declared_length() == 4);
    CHECK(p.length() == 2);
    CHECK(p.size() == 4);
    CHECK(p == Partition{3, 1});
    CHECK(p.to_string() == "[3,1,0,0]");
    CHECK(p[7] == 0);
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{2, 2}.contains(Partition{2, 1}));
    CHECK_FALSE(Partition{2, 1}.contains(Partition{1, 1, 1}));
}

TEST_CASE("dim_schur spot values") {
    CHECK(dim_schur(Partition{}, 5) == 1);
    CHECK(dim_schur(Partition{1}, 4) == 4);
    CHECK(dim_schur(Partition{2, 1}, 2) == 2);
    CHECK(dim_schur(Partition{2, 2}, 4) == 20);
    CHECK(dim_schur(Partition{1, 1, 1}, 2) == 0);
    CHECK(oracle::ssyt_count({2, 1}, 2) == 2);
    CHECK(oracle::ssyt_count({2, 2}, 4) == 20);
}

TEST_CASE("dim_schur matches SSYT counts on the 3x3 box") {
    for (const auto& shape : oracle::box_shapes(3, 3))
        for (int n = 1; n <= 4; ++n) {
            CAPTURE(n);
            CHECK(dim_schur(Partition(shape), n) == oracle::ssyt_count(shape, n));
        }
}

TEST_CASE("determinant twist: adding a full column keeps the dimension") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& shape : oracle::box_shapes(n, 3)) {
            std::vector<int> twisted = shape;
            for (int& x : twisted) ++x;
            CHECK(dim_schur(Partition(twisted), n) == dim_schur(Partition(shape), n));
        }
}

TEST_CASE("complement_in_box") {
    CHECK(complement_in_box(Partition{0, 0, 0}, 3, 2) == Partition{2, 2, 2});
    CHECK(complement_in_box(Partition{4, 4}, 2, 4) == Partition{});
    CHECK(complement_in_box(Partition{2, 1, 0}, 3, 3) == Partition{3, 2, 1});
    CHECK_THROWS_AS(complement_in_box(Partition{3}, 2, 2), BoxViolation);
    CHECK_THROWS_AS(complement_in_box(Partition{1, 1, 1}, 2, 2), BoxViolation);

    for (std::size_t r = 1; r <= 4; ++r)
        for (int m = 0; m <= 4; ++m)
            for (const auto& mu : enumerate_in_box(r, m))
                CHECK(complement_in_box(complement_in_box(mu, r, m), r, m) == mu);
}

TEST_CASE("enumerate_in_box order and counts") {
    const auto a = enumerate_in_box(1, 2);
    REQUIRE(a.size() == 3);
    CHECK(a[0] == Partition{0});
    CHECK(a[2] == Partition{2});

    const auto b = enumerate_in_box(2, 1);
    REQUIRE(b.size() == 3);
    CHECK(b[0].parts() == std::vector<int>{0, 0});
    CHECK(b[1].parts() == std::vector<int>{1, 0});
    CHECK(b[2].parts() == std::vector<int>{1, 1});
    CHECK(enumerate_in_box(2, 2).size() == 6);

    for (int r = 1; r <= 6; ++r)
        for (int m = 0; m <= 6; ++m) {
            const auto all = enumerate_in_box(static_cast<std::size_t>(r), m);
            CHECK(static_cast<std::int64_t>(all.size()) == oracle::binomial(r + m, r));
            CHECK(std::is_sorted(all.begin(), all.end(),
                                 [](const Partition& x, const Partition& y) { return x.parts() < y.parts(); }));
        }
}

TEST_CASE("partitions_of") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(8).size() == 22);
}
