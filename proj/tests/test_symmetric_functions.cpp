#include <doctest.h>

#include "oracles.hpp"
#include "theta/symmetric_functions.hpp"

using namespace theta;

TEST_CASE("lr_coefficient spot values") {
    CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2}) == 1);
    CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{3}) == 0);
    CHECK(lr_coefficient(Partition{1, 0}, Partition{1, 0}, Partition{1, 1}) == 1);
    // s_{21} s_{21} contains s_{321} twice.
    CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
    CHECK(oracle::lr_by_polynomials({2, 1}, {2, 1}, {3, 2, 1}) == 2);
}

TEST_CASE("lr_coefficient agrees with the polynomial oracle") {
    for (int total = 0; total <= 6; ++total)
        for (const auto& lambda : partitions_of(total))
            for (int a = 0; a <= total; ++a)
                for (const auto& mu : partitions_of(a))
                    for (const auto& nu : partitions_of(total - a)) {
                        CAPTURE(mu.to_string());
                        CAPTURE(nu.to_string());
                        CAPTURE(lambda.to_string());
                        CHECK(lr_coefficient(mu, nu, lambda) ==
                              oracle::lr_by_polynomials(mu.normalized(), nu.normalized(), lambda.normalized()));
                    }
}

TEST_CASE("lr_coefficient is symmetric in mu and nu") {
    for (int total = 0; total <= 8; ++total)
        for (const auto& lambda : partitions_of(total))
            for (int a = 0; a <= total; ++a)
                for (const auto& mu : partitions_of(a))
                    for (const auto& nu : partitions_of(total - a))
                        CHECK(lr_coefficient(mu, nu, lambda) == lr_coefficient(nu, mu, lambda));
}

TEST_CASE("kostka numbers") {
    CHECK(kostka_number(Partition{2, 1}, {1, 1, 1}) == 2);
    CHECK(kostka_number(Partition{3}, {1, 2}) == 1);
    CHECK(kostka_number(Partition{1, 1}, {2}) == 0);
    CHECK(kostka_number(Partition{3, 2}, {2, 2, 1}) == 2);
}

TEST_CASE("skew_schur_expand examples") {
    const auto a = skew_schur_expand(Partition{2}, Partition{1});
    CHECK(a.terms.size() == 1);
    CHECK(a.coefficient(Partition{1}) == 1);

    const auto b = skew_schur_expand(Partition{1, 1}, Partition{});
    CHECK(b.terms.size() == 1);
    CHECK(b.coefficient(Partition{1, 1}) == 1);

    const auto c = skew_schur_expand(Partition{2, 2}, Partition{1});
    CHECK(c.terms.size() == 1);
    CHECK(c.coefficient(Partition{2, 1}) == 1);

    // s_{21/1} = s_2 + s_11.
    const auto d = skew_schur_expand(Partition{2, 1}, Partition{1});
    CHECK(d.coefficient(Partition{2}) == 1);
    CHECK(d.coefficient(Partition{1, 1}) == 1);

    CHECK_THROWS_AS(skew_schur_expand(Partition{2}, Partition{1, 1}), ContainmentError);
    CHECK_THROWS_AS(skew_schur_expand_lr(Partition{1}, Partition{2}), ContainmentError);
}

TEST_CASE("expansion keys have the skew size") {
    const Partition lambda{4, 3, 2, 1};
    for (const auto& mu : enumerate_in_box(3, 2)) {
        if (!lambda.contains(mu)) continue;
        for (const auto& [nu, c] : skew_schur_expand(lambda, mu).terms) {
            CHECK(nu.size() == lambda.size() - mu.size());
            CHECK(c >= 1);
        }
    }
}

TEST_CASE("rectangular_lr_is_delta") {
    {
        const auto [nu, c] = rectangular_lr_is_delta(Partition{1, 0}, 2, 1);
        CHECK(nu == Partition{1});
        CHECK(c == 1);
    }
    {
        const auto [nu, c] = rectangular_lr_is_delta(Partition{}, 2, 1);
        CHECK(nu == Partition{1, 1});
        CHECK(c == 1);
    }
    {
        const auto [nu, c] = rectangular_lr_is_delta(Partition{2, 1}, 2, 2);
        CHECK(nu == Partition{1});
        CHECK(c == 1);
    }
    CHECK_THROWS_AS(rectangular_lr_is_delta(Partition{3}, 2, 2), BoxViolation);
}

TEST_CASE("sum of LR coefficients against a rectangle is the box indicator") {
    for (int r = 1; r <= 3; ++r)
        for (int m = 0; m <= 3; ++m) {
            const Partition rect(std::vector<int>(static_cast<std::size_t>(r), m));
            for (int s = 0; s <= r * m; ++s)
                for (const auto& mu : partitions_of(s)) {
                    BigInt total = 0;
                    for (const auto& nu : partitions_of(r * m - s)) total += lr_coefficient(mu, nu, rect);
                    CHECK(total == (mu.fits_in_box(static_cast<std::size_t>(r), m) ? 1 : 0));
                }
        }
}
