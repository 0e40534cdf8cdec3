#pragma once

// Strictifying cocycles: for a polar quadratic form q with witness t, the
// abelian 3-cocycle with h = 0 and c(x, y) = t(x, y) + sum_i xbar_i ybar_i qbar(beta_i)
// has trace q. Polar covers lift an arbitrary cocycle to a free group, where
// every form is polar.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcg/abgroup.hpp"
#include "bcg/cocycle.hpp"
#include "bcg/forms.hpp"
#include "bcg/search.hpp"

namespace bcg {

/// For q on a free group: t_ij = b_ij (i < j), q_i (i = j), 0 (i > j).
/// Throws NotFree when some generator has finite order.
BilinearForm free_polarizing_t(const QuadraticForm& q);

/// Structured cocycle (0, c) with c = t + sum_i xbar_i ybar_i qbar(beta_i).
/// Throws NotAWitness unless t + t^T = polarization(q).
AbelianCocycle3 strictify_cocycle(const QuadraticForm& q, const BilinearForm& t);
AbelianCocycle3 strictify_cocycle(const QuadraticForm& q, const BilinearForm& t, const Mod2Basis& basis);

struct StrictifyDecision {
    bool polar = false;
    QuadraticForm form;
    std::optional<BilinearForm> witness;
    /// Cohomologous to the input with h = 0; present iff polar.
    std::optional<AbelianCocycle3> strict;
};

StrictifyDecision can_strictify(const AbelianCocycle3& kappa);

/// Table cocycle on a finite G with trace q, built by lifting q to the free
/// group on the generators of G, taking the free polarizing t there, and
/// transporting (0, t) along the coefficient section s : G -> Z^r:
///   c(x, y) = t(s x, s y),  h(x, y, z) = t(s x, s y + s z - s(y + z)).
/// Works for every q, polar or not.
AbelianCocycle3 realize_quadratic_form(const QuadraticForm& q);

/// Pushforward of a cocycle (0, t) on Z^r (t bilinear, t + t^T pulled back
/// from G, t killing ker f x ker f) to G along the section, as above.
AbelianCocycle3 pushforward_along_section(const BilinearForm& t_on_cover, const FgAbGroup& group);

struct PolarCoverResult {
    FgAbGroup cover;  // free of rank r
    Homomorphism surjection;
    QuadraticForm lifted_form;
    BilinearForm witness_t;
    AbelianCocycle3 strict_cocycle;
    /// Generators n_i e_i of ker(f) for the torsion generators of G.
    std::vector<Element> kernel_generators;
    /// Pushforward of strict_cocycle to G (finite G only).
    std::optional<AbelianCocycle3> pushforward;
    /// Coboundary between pushforward and the input cocycle.
    std::optional<CoboundaryWitness> comparison_cells;
    /// "found", "not_found", "infinite" or "guard_exceeded".
    std::string comparison_status;
};

PolarCoverResult polar_cover(const AbelianCocycle3& kappa, const SearchOptions& options = {});

}  // namespace bcg
