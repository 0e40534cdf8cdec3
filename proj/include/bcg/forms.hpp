#pragma once

// Bilinear and quadratic forms G -> M stored by generator data, the polarity
// decision and its brute-force oracle, and the maps of the Whitehead sequence
//   0 -> Hom(G/2G, M) -psi-> Quad(G, M) -phi-> Bil(G, M).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bcg/abgroup.hpp"

namespace bcg {

inline constexpr std::uint64_t kDefaultFormSearchBudget = 1'000'000;

/// Bilinear form t : G x G -> M, entry (i, j) = t(g_i, g_j).
class BilinearForm {
public:
    /// Throws InvalidForm unless n_i t_ij = 0 and n_j t_ij = 0 for all i, j.
    BilinearForm(FgAbGroup source, FgAbGroup target, std::vector<std::vector<Element>> matrix);

    static BilinearForm zero(const FgAbGroup& source, const FgAbGroup& target);

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    const Element& entry(std::size_t i, std::size_t j) const { return matrix_[i][j]; }
    const std::vector<std::vector<Element>>& matrix() const { return matrix_; }

    Element operator()(const Element& x, const Element& y) const;

    BilinearForm transpose() const;
    BilinearForm operator+(const BilinearForm& other) const;
    bool is_zero() const;
    bool is_symmetric() const;

    friend bool operator==(const BilinearForm& a, const BilinearForm& b);

private:
    FgAbGroup source_;
    FgAbGroup target_;
    std::vector<std::vector<Element>> matrix_;
};

/// Quadratic form q : G -> M given by q_i = q(g_i) and the polarization
/// values b_ij = b(g_i, g_j) for i < j. Evaluation:
///   q(sum x_i g_i) = sum x_i^2 q_i + sum_{i<j} x_i x_j b_ij.
class QuadraticForm {
public:
    using CrossTerms = std::map<std::pair<std::size_t, std::size_t>, Element>;

    /// `cross` is keyed by (i, j) with i < j; missing pairs are zero.
    /// Throws InvalidForm unless, for every torsion generator of order n_i,
    /// n_i b_ij = 0 (j != i), 2 n_i q_i = 0 and n_i^2 q_i = 0.
    QuadraticForm(FgAbGroup source, FgAbGroup target, std::vector<Element> diag, const CrossTerms& cross = {});

    static QuadraticForm zero(const FgAbGroup& source, const FgAbGroup& target);

    /// Reads generator data off a full value table (indexed by
    /// FgAbGroup::index_of) and checks that the evaluation rule reproduces it.
    /// Throws InvalidForm if the table is not quadratic.
    static QuadraticForm from_table(const FgAbGroup& source, const FgAbGroup& target, std::span<const Element> table);

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    const Element& diag(std::size_t i) const { return diag_[i]; }
    /// b(g_i, g_j); on the diagonal this is 2 q_i.
    Element cross(std::size_t i, std::size_t j) const;

    Element operator()(const Element& x) const;

    /// Values on enumerate(source()), finite groups only.
    std::vector<Element> table() const;

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b);

private:
    FgAbGroup source_;
    FgAbGroup target_;
    std::vector<Element> diag_;
    std::vector<std::vector<Element>> cross_;  // symmetric, diagonal unused
};

/// Homomorphism G/2G -> M given by its values on the vectors of a Mod2Basis.
struct Mod2Homomorphism {
    Mod2Basis basis;
    FgAbGroup target;
    std::vector<Element> values;

    Element operator()(const Element& x) const;
};

/// q(-x) = q(x) and q(x+y+z) + q(x) + q(y) + q(z) = q(y+z) + q(z+x) + q(x+y)
/// for all x, y, z. The table is indexed by FgAbGroup::index_of.
bool validate_quadratic_table(const FgAbGroup& source, const FgAbGroup& target, std::span<const Element> table);

/// All maps G -> M passing validate_quadratic_table, by exhaustion of M^|G|.
std::vector<std::vector<Element>> enumerate_quadratic_tables(const FgAbGroup& source, const FgAbGroup& target,
                                                             std::uint64_t max_candidates = kDefaultFormSearchBudget);

BilinearForm polarization(const QuadraticForm& q);

/// A bilinear t with t + t^T = polarization(q), or nullopt if q is not polar.
/// Off-diagonal entries split as t_ij = b_ij (i < j), t_ji = 0; the diagonal
/// takes the lexicographically least m with 2m = 2q_i and n_i m = 0.
std::optional<BilinearForm> is_polar(const QuadraticForm& q);

/// Exhaustive search over every well-defined bilinear matrix. Returns the
/// first witness in row-major lexicographic order. Throws SearchSpaceTooLarge
/// when the candidate count exceeds the budget or an entry domain is infinite.
std::optional<BilinearForm> brute_force_polar_witness(const QuadraticForm& q,
                                                      std::uint64_t max_candidates = kDefaultFormSearchBudget);
bool brute_force_is_polar(const QuadraticForm& q, std::uint64_t max_candidates = kDefaultFormSearchBudget);

/// qbar(x) = q(x) - t(x, x) as a map on G/2G with 2-torsion values.
/// Throws NotAWitness unless t + t^T = polarization(q).
Mod2Homomorphism decompose_polar(const QuadraticForm& q, const BilinearForm& t);
Mod2Homomorphism decompose_polar(const QuadraticForm& q, const BilinearForm& t, const Mod2Basis& basis);

/// Every well-defined bilinear form G x G -> M (brute force).
std::vector<BilinearForm> enumerate_bilinear_forms(const FgAbGroup& source, const FgAbGroup& target,
                                                   std::uint64_t max_candidates = kDefaultFormSearchBudget);

/// Every homomorphism G/2G -> 2M in the standard basis.
std::vector<Mod2Homomorphism> enumerate_mod2_homomorphisms(const FgAbGroup& source, const FgAbGroup& target,
                                                           std::uint64_t max_candidates = kDefaultFormSearchBudget);

namespace whitehead {

/// A homomorphism G/2G -> M viewed as a quadratic form. Throws InvalidForm
/// when some value is not 2-torsion.
QuadraticForm psi(const Mod2Homomorphism& f);
BilinearForm phi(const QuadraticForm& q);
/// q(x) = B(x, x).
QuadraticForm diag(const BilinearForm& form);
/// B(x, y) + B(y, x).
BilinearForm sym(const BilinearForm& form);
/// The unique f with psi(f) = q when phi(q) = 0, otherwise nullopt.
std::optional<Mod2Homomorphism> psi_preimage(const QuadraticForm& q);

}  // namespace whitehead

}  // namespace bcg
