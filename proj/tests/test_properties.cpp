#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "bcg/cocycle.hpp"
#include "bcg/error.hpp"
#include "bcg/forms.hpp"
#include "bcg/model.hpp"
#include "bcg/strictify.hpp"

using namespace bcg;

// Randomized invariants. Generators are seeded so failures reproduce; the
// seed and trial index are reported through doctest's CAPTURE.

namespace {

constexpr std::uint32_t kSeed = 20240611;
constexpr int kTrials = 60;

class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    std::int64_t range(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }

    FgAbGroup group(std::size_t max_rank, bool allow_free) {
        static const std::vector<std::int64_t> orders{2, 3, 4, 6, 8};
        const auto r = static_cast<std::size_t>(range(1, static_cast<std::int64_t>(max_rank)));
        std::vector<std::int64_t> o;
        for (std::size_t i = 0; i < r; ++i) {
            if (allow_free && range(0, 3) == 0) {
                o.push_back(0);
            } else {
                o.push_back(orders[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(orders.size()) - 1))]);
            }
        }
        return FgAbGroup(o);
    }

    Element element(const FgAbGroup& G, std::int64_t bound = 6) {
        std::vector<std::int64_t> c;
        for (auto n : G.orders()) c.push_back(n == 0 ? range(-bound, bound) : range(0, n - 1));
        return G.make(c);
    }

    // Uniform over {m : n m = 0}.
    Element torsion(const FgAbGroup& M, std::int64_t n) {
        if (n == 0) return element(M);
        const auto options = torsion_elements(M, n);
        return options[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(options.size()) - 1))];
    }

    BilinearForm bilinear(const FgAbGroup& G, const FgAbGroup& M) {
        std::vector<std::vector<Element>> m(G.rank());
        for (std::size_t i = 0; i < G.rank(); ++i)
            for (std::size_t j = 0; j < G.rank(); ++j) m[i].push_back(torsion(M, std::gcd(G.order(i), G.order(j))));
        return BilinearForm(G, M, m);
    }

    Mod2Homomorphism mod2_hom(const FgAbGroup& G, const FgAbGroup& M) {
        const auto basis = mod2_basis(G);
        std::vector<Element> v;
        for (std::size_t i = 0; i < basis.dimension(); ++i) v.push_back(torsion(M, 2));
        return {basis, M, v};
    }

    // diag(t) + psi(f): always polar.
    QuadraticForm polar_form(const FgAbGroup& G, const FgAbGroup& M) {
        const auto t = bilinear(G, M);
        const auto f = whitehead::psi(mod2_hom(G, M));
        const auto d = whitehead::diag(t);
        std::vector<Element> diag;
        QuadraticForm::CrossTerms cross;
        for (std::size_t i = 0; i < G.rank(); ++i) {
            diag.push_back(d.diag(i) + f.diag(i));
            for (std::size_t j = i + 1; j < G.rank(); ++j) cross.emplace(std::pair{i, j}, d.cross(i, j) + f.cross(i, j));
        }
        return QuadraticForm(G, M, diag, cross);
    }

    // Any well-defined form: drawn from generator data satisfying the congruences.
    QuadraticForm any_form(const FgAbGroup& G, const FgAbGroup& M) {
        std::vector<Element> diag;
        QuadraticForm::CrossTerms cross;
        for (std::size_t i = 0; i < G.rank(); ++i) {
            const auto n = G.order(i);
            // 2n q = 0 and n^2 q = 0 together say gcd(2n, n^2) q = 0.
            diag.push_back(torsion(M, n == 0 ? 0 : std::gcd(2 * n, n * n)));
            for (std::size_t j = i + 1; j < G.rank(); ++j) cross.emplace(std::pair{i, j}, torsion(M, std::gcd(n, G.order(j))));
        }
        return QuadraticForm(G, M, diag, cross);
    }

private:
    std::mt19937 rng_;
};

}  // namespace

TEST_CASE("group axioms on random elements") {
    Gen gen(kSeed);
    for (int trial = 0; trial < kTrials; ++trial) {
        CAPTURE(trial);
        const auto G = gen.group(4, true);
        const auto x = gen.element(G), y = gen.element(G), z = gen.element(G);
        CHECK(x + y == y + x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x + -x).is_zero());
        CHECK(reduce(G, x.coeffs()) == x);
        if (G.is_finite()) CHECK(G.element_at(G.index_of(x)) == x);
    }
}

TEST_CASE("random forms are well defined and quadratic") {
    Gen gen(kSeed + 1);
    for (int trial = 0; trial < kTrials; ++trial) {
        CAPTURE(trial);
        const auto G = gen.group(3, true);
        const auto M = gen.group(2, false);
        const auto q = gen.any_form(G, M);
        const auto b = polarization(q);
        const auto x = gen.element(G), y = gen.element(G), z = gen.element(G);
        CHECK(q(-x) == q(x));
        CHECK(q(2 * x) == 4 * q(x));
        CHECK(q(x + y) - q(x) - q(y) == b(x, y));
        CHECK(b(x + y, z) == b(x, z) + b(y, z));
        CHECK(q(x + y + z) + q(x) + q(y) + q(z) == q(y + z) + q(z + x) + q(x + y));
        // Shifting a torsion coordinate by its order does not change the value.
        for (std::size_t i = 0; i < G.rank(); ++i) {
            if (G.order(i) == 0) continue;
            std::vector<std::int64_t> raw(x.coeffs().begin(), x.coeffs().end());
            raw[i] += G.order(i);
            CHECK(q(reduce(G, raw)) == q(x));
        }
    }
}

TEST_CASE("is_polar agrees with the brute-force oracle") {
    Gen gen(kSeed + 2);
    int polar = 0, nonpolar = 0;
    for (int trial = 0; trial < 3 * kTrials; ++trial) {
        CAPTURE(trial);
        const auto G = gen.group(2, false);
        const auto M = gen.group(2, false);
        const auto q = gen.any_form(G, M);
        bool brute = false;
        try {
            brute = brute_force_is_polar(q);
        } catch (const SearchSpaceTooLarge&) {
            continue;
        }
        const auto t = is_polar(q);
        CHECK(t.has_value() == brute);
        (brute ? polar : nonpolar)++;
        if (t) {
            CHECK(*t + t->transpose() == polarization(q));
            const auto qbar = decompose_polar(q, *t);
            for (const auto& x : enumerate(G)) CHECK((*t)(x, x) + qbar(x) == q(x));
        }
    }
    CHECK(polar > 0);
    CHECK(nonpolar > 0);
}

TEST_CASE("strictification of random polar forms") {
    Gen gen(kSeed + 3);
    for (int trial = 0; trial < kTrials; ++trial) {
        CAPTURE(trial);
        const auto G = gen.group(3, true);
        const auto M = gen.group(2, false);
        if (exhaust_or_sample(G, 2).size() > 40) continue;
        const auto q = gen.polar_form(G, M);
        const auto t = is_polar(q);
        REQUIRE(t.has_value());
        const auto kappa = strictify_cocycle(q, *t);
        CHECK(kappa.h_vanishes());
        CHECK(validate(kappa, 2).valid());
        for (const auto& x : exhaust_or_sample(G, 2)) CHECK(kappa.c(x, x) == q(x));
        if (G.is_finite() && G.cardinality() <= 16) {
            const auto tables = kappa.realized();
            CHECK(validate(tables).valid());
            CHECK(trace_table(tables) == q.table());
            CHECK(signature_form(SkeletalModel::build(tables)) == q);
        }
    }
}

TEST_CASE("realized forms have the right trace and strictify iff polar") {
    Gen gen(kSeed + 4);
    for (int trial = 0; trial < kTrials; ++trial) {
        CAPTURE(trial);
        const auto G = gen.group(2, false);
        if (G.cardinality() > 16) continue;
        const auto M = gen.group(2, false);
        const auto q = gen.any_form(G, M);
        const auto kappa = realize_quadratic_form(q);
        CHECK(validate(kappa).valid());
        CHECK(trace_table(kappa) == q.table());
        const auto d = can_strictify(kappa);
        CHECK(d.polar == is_polar(q).has_value());
    }
}

TEST_CASE("coboundaries of random witnesses") {
    Gen gen(kSeed + 5);
    for (int trial = 0; trial < kTrials; ++trial) {
        CAPTURE(trial);
        const auto G = gen.group(2, false);
        if (G.cardinality() > 12) continue;
        const auto M = gen.group(2, false);
        const std::size_t n = G.cardinality();
        std::vector<Element> k(n * n, M.zero());
        for (std::size_t x = 1; x < n; ++x)
            for (std::size_t y = 1; y < n; ++y) k[x * n + y] = gen.element(M);
        const auto d = coboundary(CoboundaryWitness(G, M, k));
        CHECK(validate(d).valid());
        CHECK(is_symmetric(d));
        for (const auto& v : trace_table(d)) CHECK(v.is_zero());
        CHECK(is_picard(SkeletalModel::build(d)));
    }
}

TEST_CASE("cohomologous agrees with the witness search on shifted cocycles") {
    Gen gen(kSeed + 6);
    for (int trial = 0; trial < kTrials; ++trial) {
        CAPTURE(trial);
        const auto G = FgAbGroup::cyclic(gen.range(2, 3));
        const auto M = FgAbGroup::cyclic(gen.range(2, 4));
        const auto a = realize_quadratic_form(gen.any_form(G, M));
        const auto b = realize_quadratic_form(gen.any_form(G, M));
        const std::size_t n = G.cardinality();
        std::vector<Element> k(n * n, M.zero());
        for (std::size_t x = 1; x < n; ++x)
            for (std::size_t y = 1; y < n; ++y) k[x * n + y] = gen.element(M);
        const auto shifted = b + coboundary(CoboundaryWitness(G, M, k));
        const auto w = find_coboundary_witness(a, shifted);
        CHECK(cohomologous(a, shifted) == w.has_value());
        if (w) CHECK(coboundary(*w) == a - shifted);
    }
}
