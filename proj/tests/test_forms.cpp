#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bcg/error.hpp"
#include "bcg/forms.hpp"

using namespace bcg;

namespace {

const FgAbGroup Z2 = FgAbGroup::cyclic(2);
const FgAbGroup Z3 = FgAbGroup::cyclic(3);
const FgAbGroup Z4 = FgAbGroup::cyclic(4);
const FgAbGroup Z = FgAbGroup::free(1);

QuadraticForm single(const FgAbGroup& G, const FgAbGroup& M, std::int64_t q1) {
    return QuadraticForm(G, M, {M.make({q1})});
}

// Independent polarity oracle for cyclic G = Z/n into cyclic M = Z/m: t is a
// single entry t with n t = 0 and 2t = 2 q1.
bool cyclic_polar(std::int64_t n, std::int64_t m, std::int64_t q1) {
    for (std::int64_t t = 0; t < m; ++t)
        if ((n * t) % m == 0 && (2 * t - 2 * q1) % m == 0) return true;
    return false;
}

}  // namespace

TEST_CASE("bilinear evaluation") {
    const BilinearForm t(Z2, Z4, {{Z4.make({2})}});
    CHECK(t(Z2.make({1}), Z2.make({1})) == Z4.make({2}));
    for (const auto& y : enumerate(Z2)) CHECK(t(Z2.zero(), y).is_zero());
    const auto Zt = FgAbGroup::free(1);
    const BilinearForm five(Zt, Zt, {{Zt.make({5})}});
    CHECK(five(Zt.make({2}), Zt.make({3})) == Zt.make({30}));
    CHECK_THROWS_AS(BilinearForm(Z2, Z4, {{Z4.make({1})}}), InvalidForm);
}

TEST_CASE("bilinear forms are linear in each slot") {
    const FgAbGroup G({2, 0});
    const FgAbGroup M({4, 0});
    const BilinearForm t(G, M, {{M.make({2, 0}), M.make({2, 0})}, {M.make({0, 0}), M.make({1, 7})}});
    const auto dom = sample_box(G, 2);
    for (const auto& x : dom)
        for (const auto& y : dom)
            for (const auto& z : dom) {
                CHECK(t(x + y, z) == t(x, z) + t(y, z));
                CHECK(t(x, y + z) == t(x, y) + t(x, z));
            }
    CHECK(t.transpose().entry(0, 1) == t.entry(1, 0));
}

TEST_CASE("quadratic evaluation") {
    const auto q = single(Z2, Z4, 1);
    CHECK(q(Z2.make({1})) == Z4.make({1}));
    CHECK(q(Z2.zero()).is_zero());
    const auto koszul = single(Z, Z2, 1);
    CHECK(koszul(Z.make({3})) == Z2.make({1}));
    CHECK(koszul(Z.make({2})).is_zero());
}

TEST_CASE("quadratic well-definedness congruences") {
    // On Z/2 -> Z/4 every q_1 is allowed: 4 q_1 = 0.
    for (std::int64_t v = 0; v < 4; ++v) CHECK_NOTHROW(single(Z2, Z4, v));
    // On Z/3 -> Z/4: 9 q_1 = 0 forces q_1 = 0.
    CHECK_THROWS_AS(single(Z3, Z4, 1), InvalidForm);
    CHECK_NOTHROW(single(Z3, Z4, 0));
    // Cross terms must be killed by both orders.
    const FgAbGroup G({2, 2});
    QuadraticForm::CrossTerms bad{{{0, 1}, Z4.make({1})}};
    CHECK_THROWS_AS(QuadraticForm(G, Z4, {Z4.zero(), Z4.zero()}, bad), InvalidForm);
}

TEST_CASE("validate_quadratic_table") {
    const std::vector<Element> x2{Z4.make({0}), Z4.make({1})};
    CHECK(validate_quadratic_table(Z2, Z4, x2));
    // A homomorphism with 2-torsion values is quadratic.
    const FgAbGroup G({2, 2});
    std::vector<Element> hom;
    for (const auto& x : enumerate(G)) hom.push_back(Z4.make({2 * ((x[0] + x[1]) % 2)}));
    CHECK(validate_quadratic_table(G, Z4, hom));
    const std::vector<Element> bad{Z3.make({1}), Z3.make({0}), Z3.make({0})};
    CHECK_FALSE(validate_quadratic_table(Z3, Z3, bad));
    CHECK_THROWS_AS(validate_quadratic_table(Z, Z2, std::vector<Element>{}), InfiniteGroup);
}

TEST_CASE("from_table and table agree with evaluation") {
    const FgAbGroup G({2, 4});
    for (const auto& table : enumerate_quadratic_tables(G, Z4)) {
        const auto q = QuadraticForm::from_table(G, Z4, table);
        CHECK(q.table() == table);
    }
    CHECK_THROWS_AS(QuadraticForm::from_table(Z3, Z3, std::vector<Element>{Z3.make({1}), Z3.zero(), Z3.zero()}),
                    InvalidForm);
}

TEST_CASE("polarization") {
    const auto q = single(Z2, Z4, 1);
    CHECK(polarization(q).entry(0, 0) == Z4.make({2}));
    const auto hom = single(Z2, Z4, 2);
    CHECK(polarization(hom).is_zero());
    // q(x) = t(x, x) polarizes to t + t^T.
    const FgAbGroup G({0, 0});
    const FgAbGroup M = FgAbGroup::free(1);
    const BilinearForm t(G, M, {{M.make({3}), M.make({5})}, {M.make({-1}), M.make({2})}});
    CHECK(polarization(whitehead::diag(t)) == t + t.transpose());
}

TEST_CASE("is_polar") {
    CHECK_FALSE(is_polar(single(Z2, Z4, 1)).has_value());
    const auto t = is_polar(single(Z2, Z4, 2));
    REQUIRE(t.has_value());
    CHECK(t->entry(0, 0) == Z4.make({0}));  // least of {0, 2}
    // Free groups: always polar.
    const FgAbGroup F = FgAbGroup::free(2);
    const QuadraticForm qf(F, Z4, {Z4.make({1}), Z4.make({3})}, {{{0, 1}, Z4.make({1})}});
    const auto tf = is_polar(qf);
    REQUIRE(tf.has_value());
    CHECK(*tf + tf->transpose() == polarization(qf));
}

TEST_CASE("is_polar on cyclic pairs matches a direct oracle") {
    for (std::int64_t n : {2, 3, 4, 6}) {
        for (std::int64_t m : {2, 3, 4, 8}) {
            const auto G = FgAbGroup::cyclic(n);
            const auto M = FgAbGroup::cyclic(m);
            for (const auto& table : enumerate_quadratic_tables(G, M)) {
                const auto q = QuadraticForm::from_table(G, M, table);
                const bool expected = cyclic_polar(n, m, q.diag(0)[0]);
                CHECK(is_polar(q).has_value() == expected);
                CHECK(brute_force_is_polar(q) == expected);
            }
        }
    }
}

TEST_CASE("brute force") {
    CHECK_FALSE(brute_force_is_polar(single(Z2, Z4, 1)));
    const auto zero = brute_force_polar_witness(QuadraticForm::zero(Z2, Z4));
    REQUIRE(zero.has_value());
    CHECK(zero->is_zero());
    CHECK(brute_force_is_polar(single(Z2, Z4, 2)));
    // Z -> Z/4 searches all of Z/4; Z/2 -> Z only the 2-torsion {0}.
    CHECK(brute_force_is_polar(single(Z, Z4, 1)));
    CHECK(brute_force_is_polar(single(Z2, Z, 0)));
    CHECK_THROWS_AS(brute_force_is_polar(single(Z, Z, 1)), SearchSpaceTooLarge);
    CHECK_THROWS_AS(brute_force_is_polar(QuadraticForm::zero(FgAbGroup({2, 2, 2}), FgAbGroup({2, 2, 2})), 10),
                    SearchSpaceTooLarge);
}

TEST_CASE("decompose_polar") {
    const FgAbGroup G({2, 0});
    const BilinearForm t(G, Z4, {{Z4.make({2}), Z4.make({2})}, {Z4.make({0}), Z4.make({1})}});
    const auto d = decompose_polar(whitehead::diag(t), t);
    for (const auto& v : d.values) CHECK(v.is_zero());

    const auto koszul = decompose_polar(single(Z, Z2, 1), BilinearForm::zero(Z, Z2));
    REQUIRE(koszul.values.size() == 1);
    CHECK(koszul.values[0] == Z2.make({1}));

    // Polarization zero and t = 0: qbar is q itself.
    const auto picard = single(Z2, Z4, 2);
    const auto pd = decompose_polar(picard, BilinearForm::zero(Z2, Z4));
    CHECK(pd.values[0] == Z4.make({2}));

    CHECK_THROWS_AS(decompose_polar(single(Z2, Z4, 1), BilinearForm::zero(Z2, Z4)), NotAWitness);
}

TEST_CASE("decompose_polar reconstructs q") {
    const std::vector<FgAbGroup> groups{FgAbGroup({2, 2}), FgAbGroup({4, 2}), FgAbGroup::cyclic(6)};
    for (const auto& G : groups) {
        for (const auto& table : enumerate_quadratic_tables(G, Z4)) {
            const auto q = QuadraticForm::from_table(G, Z4, table);
            const auto t = is_polar(q);
            if (!t) continue;
            const auto qbar = decompose_polar(q, *t);
            for (const auto& v : qbar.values) CHECK((2 * v).is_zero());
            for (const auto& x : enumerate(G)) CHECK((*t)(x, x) + qbar(x) == q(x));
        }
    }
}

TEST_CASE("Whitehead maps") {
    const Mod2Homomorphism f{mod2_basis(Z2), Z4, {Z4.make({2})}};
    const auto q = whitehead::psi(f);
    CHECK(q.diag(0) == Z4.make({2}));
    CHECK(whitehead::phi(q).is_zero());
    const Mod2Homomorphism bad{mod2_basis(Z2), Z4, {Z4.make({1})}};
    CHECK_THROWS_AS(whitehead::psi(bad), InvalidForm);
    for (const auto& B : enumerate_bilinear_forms(FgAbGroup({2, 4}), Z4))
        CHECK(whitehead::phi(whitehead::diag(B)) == whitehead::sym(B));
    CHECK_FALSE(whitehead::psi_preimage(single(Z2, Z4, 1)).has_value());
}

TEST_CASE("quadratic identities on sampled infinite groups") {
    const FgAbGroup G({2, 0});
    const FgAbGroup M({4});
    const QuadraticForm q(G, M, {M.make({1}), M.make({3})}, {{{0, 1}, M.make({2})}});
    const auto b = polarization(q);
    const auto dom = sample_box(G, 2);
    for (const auto& x : dom) {
        CHECK(q(-x) == q(x));
        CHECK(q(2 * x) == 4 * q(x));
        for (const auto& y : dom) {
            CHECK(q(x + y) - q(x) - q(y) == b(x, y));
            CHECK(b(x, y) == b(y, x));
            for (const auto& z : dom) CHECK(q(x + y + z) + q(x) + q(y) + q(z) == q(y + z) + q(z + x) + q(x + y));
        }
    }
}
