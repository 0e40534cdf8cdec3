#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bcg/error.hpp"
#include "bcg/model.hpp"
#include "bcg/strictify.hpp"

using namespace bcg;

namespace {

const FgAbGroup Z2 = FgAbGroup::cyclic(2);
const FgAbGroup Z4 = FgAbGroup::cyclic(4);
const FgAbGroup Z = FgAbGroup::free(1);

}  // namespace

TEST_CASE("free_polarizing_t") {
    const QuadraticForm q(Z, Z4, {Z4.make({1})});
    CHECK(free_polarizing_t(q).entry(0, 0) == Z4.make({1}));
    CHECK(free_polarizing_t(QuadraticForm::zero(FgAbGroup::free(3), Z4)).is_zero());
    const auto F2 = FgAbGroup::free(2);
    const QuadraticForm q2(F2, Z, {Z.zero(), Z.zero()}, {{{0, 1}, Z.make({5})}});
    const auto t = free_polarizing_t(q2);
    CHECK(t.entry(0, 1) == Z.make({5}));
    CHECK(t.entry(1, 0) == Z.zero());
    CHECK(t + t.transpose() == polarization(q2));
    CHECK_THROWS_AS(free_polarizing_t(QuadraticForm::zero(Z2, Z4)), NotFree);
}

TEST_CASE("strictify_cocycle Picard case") {
    const QuadraticForm q(Z2, Z2, {Z2.make({1})});
    const auto kappa = strictify_cocycle(q, BilinearForm::zero(Z2, Z2));
    CHECK(kappa.h_vanishes());
    CHECK(kappa.c(Z2.make({1}), Z2.make({1})) == Z2.make({1}));
    CHECK(validate(kappa.realized()).valid());
    CHECK(trace_table(kappa) == q.table());
}

TEST_CASE("strictify_cocycle with vanishing correction is t") {
    const FgAbGroup G({2, 4});
    const BilinearForm t(G, Z4, {{Z4.make({2}), Z4.make({2})}, {Z4.make({0}), Z4.make({1})}});
    const auto kappa = strictify_cocycle(whitehead::diag(t), t);
    for (const auto& x : enumerate(G))
        for (const auto& y : enumerate(G)) CHECK(kappa.c(x, y) == t(x, y));
}

TEST_CASE("strictify_cocycle Koszul line") {
    const QuadraticForm q(Z, Z2, {Z2.make({1})});
    const auto kappa = strictify_cocycle(q, BilinearForm::zero(Z, Z2));
    for (const auto& x : sample_box(Z, 4))
        for (const auto& y : sample_box(Z, 4)) {
            const std::int64_t expected = ((x[0] % 2 + 2) % 2) * ((y[0] % 2 + 2) % 2);
            CHECK(kappa.c(x, y) == Z2.make({expected}));
        }
    CHECK(validate(kappa, 4).valid());
}

TEST_CASE("strictify_cocycle rejects non-witnesses") {
    CHECK_THROWS_AS(strictify_cocycle(QuadraticForm(Z2, Z4, {Z4.make({1})}), BilinearForm::zero(Z2, Z4)), NotAWitness);
}

TEST_CASE("c - t depends only on classes mod 2G") {
    const FgAbGroup G({4, 0});
    const FgAbGroup M({8});
    const QuadraticForm q(G, M, {M.make({2}), M.make({3})}, {{{0, 1}, M.make({2})}});
    const auto t = is_polar(q);
    REQUIRE(t.has_value());
    const auto kappa = strictify_cocycle(q, *t);
    const auto dom = sample_box(G, 2);
    for (const auto& x : dom)
        for (const auto& y : dom) {
            const auto base = kappa.c(x, y) - (*t)(x, y);
            for (const auto& u : dom) CHECK(kappa.c(x + 2 * u, y) - (*t)(x + 2 * u, y) == base);
        }
    CHECK(validate(kappa, 2).valid());
    for (const auto& x : dom) CHECK(kappa.c(x, x) == q(x));
}

TEST_CASE("basis independence of the class") {
    const FgAbGroup G({2, 2});
    const Mod2Basis other(G, {{1, 1}, {0, 1}});
    for (const auto& table : enumerate_quadratic_tables(G, Z4)) {
        const auto q = QuadraticForm::from_table(G, Z4, table);
        const auto t = is_polar(q);
        if (!t) continue;
        const auto a = strictify_cocycle(q, *t);
        const auto b = strictify_cocycle(q, *t, other);
        CHECK(validate(b.realized()).valid());
        CHECK(trace_table(a) == trace_table(b));
        const auto k = find_coboundary_witness(a.realized(), b.realized());
        CHECK(k.has_value());
    }
}

TEST_CASE("can_strictify") {
    const auto np = can_strictify(example_nonpolar());
    CHECK_FALSE(np.polar);
    CHECK_FALSE(np.strict.has_value());

    const auto zero = can_strictify(AbelianCocycle3::zero(Z2, Z4));
    REQUIRE(zero.polar);
    CHECK(zero.strict->realized() == AbelianCocycle3::zero(Z2, Z4).realized());

    for (const auto& kappa : enumerate_cocycles(Z2, Z4)) {
        const auto d = can_strictify(kappa);
        CHECK(d.polar == brute_force_is_polar(trace(kappa)));
        if (is_symmetric(kappa)) {
            CHECK(d.polar);
            CHECK(d.witness->is_zero());
        }
        if (d.polar) {
            CHECK(d.strict->h_vanishes());
            CHECK(cohomologous(kappa, *d.strict));
            CHECK(find_coboundary_witness(kappa, d.strict->realized()).has_value());
        }
    }
}

TEST_CASE("realize_quadratic_form realizes every form") {
    const std::vector<std::pair<FgAbGroup, FgAbGroup>> pairs{
        {Z2, Z4}, {FgAbGroup::cyclic(4), FgAbGroup::cyclic(8)}, {FgAbGroup({2, 2}), Z4}, {FgAbGroup::cyclic(6), Z4}};
    for (const auto& [G, M] : pairs) {
        for (const auto& table : enumerate_quadratic_tables(G, M)) {
            const auto kappa = realize_quadratic_form(QuadraticForm::from_table(G, M, table));
            CHECK(validate(kappa).valid());
            CHECK(trace_table(kappa) == table);
        }
    }
}

TEST_CASE("polar cover of the non-polar example") {
    const auto kappa = example_nonpolar();
    const auto r = polar_cover(kappa);
    CHECK(r.cover == Z);
    CHECK(r.lifted_form.diag(0) == Z4.make({1}));
    CHECK(r.witness_t.entry(0, 0) == Z4.make({1}));
    CHECK(r.kernel_generators == std::vector<Element>{Z.make({2})});
    for (const auto& n : sample_box(Z, 5)) {
        CHECK(r.strict_cocycle.c(n, n) == Z4.make({n[0] * n[0]}));
        CHECK(r.lifted_form(n) == trace(kappa)(r.surjection(n)));
    }
    CHECK(r.comparison_status == "found");
    REQUIRE(r.comparison_cells.has_value());
    CHECK(coboundary(*r.comparison_cells) == *r.pushforward - kappa);
}

TEST_CASE("polar cover of zero and infinite cocycles") {
    const FgAbGroup G({2, 2});
    const auto r = polar_cover(AbelianCocycle3::zero(G, Z2));
    CHECK(r.cover == FgAbGroup::free(2));
    CHECK(r.strict_cocycle.c(r.cover.make({3, -1}), r.cover.make({1, 5})).is_zero());
    CHECK(r.comparison_status == "found");
    CHECK(r.comparison_cells->values() == CoboundaryWitness::zero(G, Z2).values());

    const auto k = polar_cover(example_koszul());
    CHECK(k.comparison_status == "infinite");
    CHECK_FALSE(k.comparison_cells.has_value());
    CHECK(k.kernel_generators.empty());
}

TEST_CASE("polar cover guard leaves the cells absent") {
    const FgAbGroup G({2, 2, 2});
    const auto kappa = realize_quadratic_form(QuadraticForm::zero(G, Z4));
    const auto r = polar_cover(kappa, {10, 1});
    CHECK(r.comparison_status == "guard_exceeded");
    CHECK_FALSE(r.comparison_cells.has_value());
    CHECK(is_polar(r.lifted_form).has_value());
}

TEST_CASE("lifted forms are polar even when the base form is not") {
    for (const auto& table : enumerate_quadratic_tables(FgAbGroup::cyclic(4), FgAbGroup::cyclic(8))) {
        const auto q = QuadraticForm::from_table(FgAbGroup::cyclic(4), FgAbGroup::cyclic(8), table);
        const auto r = polar_cover(realize_quadratic_form(q));
        CHECK(is_polar(r.lifted_form).has_value());
        CHECK(r.strict_cocycle.h_vanishes());
        for (const auto& n : sample_box(r.cover, 6)) CHECK(r.strict_cocycle.c(n, n) == q(r.surjection(n)));
    }
}
