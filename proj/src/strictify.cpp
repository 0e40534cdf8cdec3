#include "bcg/strictify.hpp"

#include <stdexcept>

#include "bcg/error.hpp"

namespace bcg {

namespace {

// q o f for the generator-matching surjection Z^r -> G.
QuadraticForm lift_to_free(const QuadraticForm& q, const FgAbGroup& cover) {
    const std::size_t r = q.source().rank();
    std::vector<Element> diag;
    QuadraticForm::CrossTerms cross;
    for (std::size_t i = 0; i < r; ++i) {
        diag.push_back(q.diag(i));
        for (std::size_t j = i + 1; j < r; ++j) cross.emplace(std::pair{i, j}, q.cross(i, j));
    }
    return QuadraticForm(cover, q.target(), std::move(diag), cross);
}

}  // namespace

BilinearForm free_polarizing_t(const QuadraticForm& q) {
    const auto& P = q.source();
    if (!P.is_free()) throw NotFree("free_polarizing_t needs a free group, got " + P.to_string());
    const std::size_t r = P.rank();
    std::vector<std::vector<Element>> t(r, std::vector<Element>(r, q.target().zero()));
    for (std::size_t i = 0; i < r; ++i) {
        t[i][i] = q.diag(i);
        for (std::size_t j = i + 1; j < r; ++j) t[i][j] = q.cross(i, j);
    }
    return BilinearForm(P, q.target(), std::move(t));
}

AbelianCocycle3 strictify_cocycle(const QuadraticForm& q, const BilinearForm& t) {
    return strictify_cocycle(q, t, mod2_basis(q.source()));
}

AbelianCocycle3 strictify_cocycle(const QuadraticForm& q, const BilinearForm& t, const Mod2Basis& basis) {
    auto qbar = decompose_polar(q, t, basis);
    return AbelianCocycle3::structured(t, basis, std::move(qbar.values));
}

StrictifyDecision can_strictify(const AbelianCocycle3& kappa) {
    auto q = trace(kappa);
    auto t = is_polar(q);
    if (!t) return StrictifyDecision{false, std::move(q), std::nullopt, std::nullopt};
    auto strict = strictify_cocycle(q, *t);
    if (!cohomologous(kappa, strict)) throw std::logic_error("strictified cocycle changed the trace");
    return StrictifyDecision{true, std::move(q), std::move(t), std::move(strict)};
}

AbelianCocycle3 pushforward_along_section(const BilinearForm& t_on_cover, const FgAbGroup& group) {
    const auto& P = t_on_cover.source();
    if (!P.is_free() || P.rank() != group.rank()) {
        throw GroupMismatch("cover must be free of rank " + std::to_string(group.rank()) + ", got " + P.to_string());
    }
    const auto elems = enumerate(group);
    std::vector<Element> lifts;
    for (const auto& x : elems) lifts.push_back(reduce(P, x.coeffs()));
    const std::size_t n = elems.size();
    std::vector<Element> h, c;
    h.reserve(n * n * n);
    c.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            c.push_back(t_on_cover(lifts[x], lifts[y]));
            for (std::size_t z = 0; z < n; ++z) {
                const auto carry = lifts[y] + lifts[z] - lifts[group.index_of(elems[y] + elems[z])];
                h.push_back(t_on_cover(lifts[x], carry));
            }
        }
    return AbelianCocycle3::from_tables(group, t_on_cover.target(), std::move(h), std::move(c));
}

AbelianCocycle3 realize_quadratic_form(const QuadraticForm& q) {
    const auto lifted = lift_to_free(q, FgAbGroup::free(q.source().rank()));
    return pushforward_along_section(free_polarizing_t(lifted), q.source());
}

PolarCoverResult polar_cover(const AbelianCocycle3& kappa, const SearchOptions& options) {
    const auto& G = kappa.group();
    const auto& M = kappa.coeffs();
    const auto q = trace(kappa);
    const auto P = FgAbGroup::free(G.rank());
    std::vector<Element> images;
    for (std::size_t i = 0; i < G.rank(); ++i) images.push_back(G.generator(i));
    Homomorphism f(P, G, std::move(images));

    auto lifted = lift_to_free(q, P);
    auto t = free_polarizing_t(lifted);
    auto strict = strictify_cocycle(lifted, t);

    std::vector<Element> kernel;
    for (std::size_t i = 0; i < G.rank(); ++i) {
        if (G.order(i) != 0) kernel.push_back(G.order(i) * P.generator(i));
    }

    PolarCoverResult out{P, std::move(f), std::move(lifted), t, std::move(strict), std::move(kernel),
                         std::nullopt, std::nullopt, "infinite"};
    if (!G.is_finite()) return out;
    out.pushforward = pushforward_along_section(t, G);
    if (!M.is_finite()) return out;
    try {
        out.comparison_cells = find_coboundary_witness(*out.pushforward, kappa, options);
        out.comparison_status = out.comparison_cells ? "found" : "not_found";
    } catch (const SearchSpaceTooLarge&) {
        out.comparison_status = "guard_exceeded";
    }
    return out;
}

}  // namespace bcg
