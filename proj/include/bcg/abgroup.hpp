#pragma once

// Finitely generated abelian groups presented by per-generator orders,
// together with their elements, homomorphisms and the mod-2 quotient.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace bcg {

class Element;

/// Z/n_1 + ... + Z/n_r, where n_i = 0 stands for a free generator.
///
/// Orders are kept exactly as given (no Smith normal form); an order of 1 is
/// rejected. Copies share the order vector, so passing groups by value is cheap.
class FgAbGroup {
public:
    /// The trivial group (rank 0).
    FgAbGroup();
    explicit FgAbGroup(std::vector<std::int64_t> orders);

    static FgAbGroup cyclic(std::int64_t n);
    static FgAbGroup free(std::size_t rank);

    std::span<const std::int64_t> orders() const { return *orders_; }
    std::size_t rank() const { return orders_->size(); }
    std::int64_t order(std::size_t i) const { return (*orders_)[i]; }

    bool is_finite() const;
    bool is_free() const;
    /// Product of the orders; throws InfiniteGroup when a free generator exists.
    std::uint64_t cardinality() const;

    Element zero() const;
    Element generator(std::size_t i) const;
    Element make(std::vector<std::int64_t> coeffs) const;

    /// Position of x in the lexicographic enumeration (finite groups only).
    std::size_t index_of(const Element& x) const;
    Element element_at(std::size_t index) const;

    /// Human-readable presentation such as "Z/2 + Z".
    std::string to_string() const;

    friend bool operator==(const FgAbGroup& a, const FgAbGroup& b);

private:
    std::shared_ptr<const std::vector<std::int64_t>> orders_;
};

/// Group element in reduced coordinates: 0 <= x_i < n_i on torsion
/// generators, arbitrary integers on free generators.
class Element {
public:
    /// Reduces coeffs; throws InvalidGroup on a length mismatch.
    Element(FgAbGroup group, std::vector<std::int64_t> coeffs);

    const FgAbGroup& group() const { return group_; }
    std::span<const std::int64_t> coeffs() const { return coeffs_; }
    std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
    std::size_t size() const { return coeffs_.size(); }
    bool is_zero() const;

    Element operator+(const Element& other) const;
    Element operator-(const Element& other) const;
    Element operator-() const;
    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    friend Element operator*(std::int64_t k, const Element& x);

    /// Comma-separated coefficients, e.g. "1,0,-2"; used as a JSON table key.
    std::string key() const;

    friend bool operator==(const Element& a, const Element& b);
    /// Lexicographic on coefficients; only meaningful within one group.
    friend std::strong_ordering operator<=>(const Element& a, const Element& b);

private:
    FgAbGroup group_;
    std::vector<std::int64_t> coeffs_;
};

/// Reduced representative of the coefficient vector in G.
Element reduce(const FgAbGroup& group, std::span<const std::int64_t> coeffs);

/// All elements of a finite group in lexicographic coefficient order.
std::vector<Element> enumerate(const FgAbGroup& group);

/// Every reduced element whose free coefficients lie in [-bound, bound].
std::vector<Element> sample_box(const FgAbGroup& group, std::int64_t bound);

/// Elements of G when finite, otherwise the box of the given bound.
std::vector<Element> exhaust_or_sample(const FgAbGroup& group, std::int64_t bound);

/// {m in M : n*m = 0}, lexicographically ordered. Finite even if M has a
/// free part.
std::vector<Element> torsion_elements(const FgAbGroup& group, std::int64_t n);

/// Group homomorphism given by the images of the source generators.
class Homomorphism {
public:
    /// Throws InvalidForm unless n_j * images_j = 0 for every torsion source
    /// generator.
    Homomorphism(FgAbGroup source, FgAbGroup target, std::vector<Element> images);

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    std::span<const Element> images() const { return images_; }

    Element operator()(const Element& x) const;

private:
    FgAbGroup source_;
    FgAbGroup target_;
    std::vector<Element> images_;
};

/// A basis of the F_2-vector space G/2G.
///
/// The support is the set of generator indices surviving in G/2G (even or free
/// order). The default basis is the images of those generators; a custom basis
/// is given by 0/1 vectors over the support coordinates.
class Mod2Basis {
public:
    explicit Mod2Basis(FgAbGroup group);
    /// Throws InvalidForm when the vectors are not a basis.
    Mod2Basis(FgAbGroup group, std::vector<std::vector<std::uint8_t>> vectors);

    const FgAbGroup& group() const { return group_; }
    std::span<const std::size_t> basis_indices() const { return support_; }
    std::size_t dimension() const { return support_.size(); }
    bool is_standard() const { return standard_; }
    const std::vector<std::vector<std::uint8_t>>& vectors() const { return vectors_; }

    /// Coordinates of the class of x with respect to this basis.
    std::vector<std::uint8_t> reduce(const Element& x) const;
    /// The element with 0/1 coefficients representing the i-th basis vector.
    Element lift(std::size_t i) const;

    friend bool operator==(const Mod2Basis& a, const Mod2Basis& b);

private:
    FgAbGroup group_;
    std::vector<std::size_t> support_;
    std::vector<std::vector<std::uint8_t>> vectors_;
    // inverse_[i][j]: F_2 inverse of the matrix whose columns are vectors_.
    std::vector<std::vector<std::uint8_t>> inverse_;
    bool standard_ = true;
};

Mod2Basis mod2_basis(const FgAbGroup& group);

namespace detail {

/// Non-negative residue of a modulo n > 0.
std::int64_t mod(std::int64_t a, std::int64_t n);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace detail

}  // namespace bcg
