#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "bcg/abgroup.hpp"
#include "bcg/error.hpp"

using namespace bcg;

TEST_CASE("construction rejects trivial factors and negative orders") {
    CHECK_THROWS_AS(FgAbGroup({1}), InvalidGroup);
    CHECK_THROWS_AS(FgAbGroup({2, -3}), InvalidGroup);
    CHECK_NOTHROW(FgAbGroup({0, 2, 7}));
    CHECK(FgAbGroup().rank() == 0);
    CHECK(FgAbGroup().cardinality() == 1);
}

TEST_CASE("finiteness and cardinality") {
    CHECK(FgAbGroup({2, 3}).is_finite());
    CHECK(FgAbGroup({2, 3}).cardinality() == 6);
    CHECK_FALSE(FgAbGroup({2, 0}).is_finite());
    CHECK_THROWS_AS(FgAbGroup({2, 0}).cardinality(), InfiniteGroup);
    CHECK(FgAbGroup::free(3).is_free());
    CHECK(FgAbGroup({2, 0}).to_string() == "Z/2 + Z");
}

TEST_CASE("reduce") {
    const FgAbGroup a({2, 0});
    CHECK(reduce(a, std::vector<std::int64_t>{3, -1}) == a.make({1, -1}));
    const auto z4 = FgAbGroup::cyclic(4);
    CHECK(z4.make({4}).is_zero());
    const FgAbGroup b({2, 3});
    CHECK(b.make({5, 7}) == b.make({1, 1}));
    CHECK(b.make({-1, -1}) == b.make({1, 2}));
    const auto x = b.make({5, 7});
    CHECK(reduce(b, x.coeffs()) == x);
    CHECK_THROWS_AS(b.make({1}), InvalidGroup);
}

TEST_CASE("addition and negation") {
    const auto z4 = FgAbGroup::cyclic(4);
    CHECK(z4.make({3}) + z4.make({2}) == z4.make({1}));
    const FgAbGroup g({2, 0});
    CHECK((g.make({1, 2}) + g.make({1, -2})).is_zero());
    for (const auto& x : sample_box(g, 3)) {
        CHECK((x + -x).is_zero());
        CHECK(x + g.zero() == x);
        CHECK(x - x == g.zero());
        CHECK(3 * x == x + x + x);
    }
    CHECK_THROWS_AS(z4.make({1}) + FgAbGroup::cyclic(2).make({1}), GroupMismatch);
}

TEST_CASE("enumerate") {
    const auto z2 = FgAbGroup::cyclic(2);
    const auto e = enumerate(z2);
    REQUIRE(e.size() == 2);
    CHECK(e[0].is_zero());
    CHECK(e[1] == z2.make({1}));
    CHECK(enumerate(FgAbGroup({2, 2})).size() == 4);
    CHECK_THROWS_AS(enumerate(FgAbGroup({2, 0})), InfiniteGroup);

    const FgAbGroup g({3, 2, 4});
    const auto all = enumerate(g);
    CHECK(all.size() == 24);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(g.index_of(all[i]) == i);
        CHECK(g.element_at(i) == all[i]);
    }
}

TEST_CASE("sample_box") {
    CHECK(sample_box(FgAbGroup::free(1), 1).size() == 3);
    CHECK(sample_box(FgAbGroup::free(1), 1).front() == FgAbGroup::free(1).make({-1}));
    CHECK(sample_box(FgAbGroup::cyclic(2), 5).size() == 2);
    CHECK(sample_box(FgAbGroup::free(2), 1).size() == 9);
    CHECK(sample_box(FgAbGroup({2, 0}), 2).size() == 10);
    CHECK(exhaust_or_sample(FgAbGroup::cyclic(3), 7).size() == 3);
}

TEST_CASE("mod2_basis support") {
    CHECK(std::ranges::equal(mod2_basis(FgAbGroup({2, 3, 0})).basis_indices(), std::vector<std::size_t>{0, 2}));
    CHECK(mod2_basis(FgAbGroup::cyclic(3)).dimension() == 0);
    CHECK(std::ranges::equal(mod2_basis(FgAbGroup::cyclic(2)).basis_indices(), std::vector<std::size_t>{0}));
}

TEST_CASE("mod2 reduction is additive and kills 2G") {
    const FgAbGroup g({2, 3, 4, 0});
    const auto basis = mod2_basis(g);
    const auto dom = sample_box(g, 2);
    for (const auto& x : dom) {
        for (const auto& y : dom) {
            CHECK(basis.reduce(x + 2 * y) == basis.reduce(x));
            auto sum = basis.reduce(x);
            const auto ry = basis.reduce(y);
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] ^= ry[i];
            CHECK(basis.reduce(x + y) == sum);
        }
    }
}

TEST_CASE("custom mod2 basis") {
    const FgAbGroup g({2, 2});
    const Mod2Basis b(g, {{1, 1}, {0, 1}});
    CHECK_FALSE(b.is_standard());
    CHECK(b.lift(0) == g.make({1, 1}));
    // (1,0) = (1,1) + (0,1)
    CHECK(b.reduce(g.make({1, 0})) == std::vector<std::uint8_t>{1, 1});
    CHECK(b.reduce(g.make({0, 1})) == std::vector<std::uint8_t>{0, 1});
    CHECK_THROWS_AS(Mod2Basis(g, {{1, 1}, {1, 1}}), InvalidForm);
    CHECK_THROWS_AS(Mod2Basis(g, {{1, 0}}), InvalidForm);
}

TEST_CASE("torsion_elements") {
    const auto z4 = FgAbGroup::cyclic(4);
    CHECK(torsion_elements(z4, 2) == std::vector<Element>{z4.make({0}), z4.make({2})});
    CHECK(torsion_elements(FgAbGroup::free(1), 2) == std::vector<Element>{FgAbGroup::free(1).zero()});
    const FgAbGroup m({2, 3});
    CHECK(torsion_elements(m, 2) == std::vector<Element>{m.make({0, 0}), m.make({1, 0})});

    // Oracle: filter the enumeration by n*m = 0; also closure under + and -.
    const FgAbGroup big({4, 6, 3});
    for (std::int64_t n : {1, 2, 3, 4, 6, 12}) {
        std::vector<Element> expected;
        for (const auto& x : enumerate(big))
            if ((n * x).is_zero()) expected.push_back(x);
        const auto got = torsion_elements(big, n);
        CHECK(got == expected);
        for (const auto& a : got) {
            CHECK(std::ranges::find(got, -a) != got.end());
            for (const auto& b : got) CHECK(std::ranges::find(got, a + b) != got.end());
        }
    }
}

TEST_CASE("homomorphism well-definedness") {
    const auto z2 = FgAbGroup::cyclic(2);
    const auto z4 = FgAbGroup::cyclic(4);
    CHECK_NOTHROW(Homomorphism(z2, z4, {z4.make({2})}));
    CHECK_THROWS_AS(Homomorphism(z2, z4, {z4.make({1})}), InvalidForm);
    const Homomorphism f(FgAbGroup::free(1), z4, {z4.make({1})});
    CHECK(f(FgAbGroup::free(1).make({-3})) == z4.make({1}));
}

TEST_CASE("checked arithmetic") {
    CHECK(detail::mod(-7, 4) == 1);
    CHECK_THROWS_AS(detail::checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), std::overflow_error);
    CHECK_THROWS_AS(detail::checked_add(INT64_MAX, 1), std::overflow_error);
}
