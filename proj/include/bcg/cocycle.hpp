#pragma once

// Abelian 3-cocycles (h, c) on G with values in M (trivial action), their
// validation, coboundaries, the Eilenberg-MacLane trace, and the exhaustive
// oracles used to exhibit the trace isomorphism on small groups.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "bcg/abgroup.hpp"
#include "bcg/forms.hpp"
#include "bcg/search.hpp"

namespace bcg {

inline constexpr std::int64_t kDefaultSampleBox = 3;
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Normalized k : G x G -> M, stored densely by (index_of(x), index_of(y)).
class CoboundaryWitness {
public:
    /// Throws NotNormalized unless k(x, 0) = 0 = k(0, y).
    CoboundaryWitness(FgAbGroup group, FgAbGroup coeffs, std::vector<Element> values);

    static CoboundaryWitness zero(const FgAbGroup& group, const FgAbGroup& coeffs);

    const FgAbGroup& group() const { return group_; }
    const FgAbGroup& coeffs() const { return coeffs_; }
    const std::vector<Element>& values() const { return values_; }

    Element operator()(const Element& x, const Element& y) const;

    friend bool operator==(const CoboundaryWitness& a, const CoboundaryWitness& b);

private:
    FgAbGroup group_;
    FgAbGroup coeffs_;
    std::vector<Element> values_;
};

/// Pair (h, c) with h : G^3 -> M and c : G^2 -> M.
///
/// Two backings: dense tables over a finite G, or the structured shape
///   h = 0,  c(x, y) = t(x, y) + sum_i xbar_i ybar_i corr_i
/// (xbar the coordinates of x in G/2G w.r.t. a Mod2Basis) which evaluates on
/// any G. Construction does not validate; use validate().
class AbelianCocycle3 {
public:
    struct Tables {
        std::vector<Element> h;  // |G|^3, index ((x * n) + y) * n + z
        std::vector<Element> c;  // |G|^2, index x * n + y
        friend bool operator==(const Tables&, const Tables&) = default;
    };
    struct Structured {
        BilinearForm bilinear;
        Mod2Basis basis;
        std::vector<Element> correction;  // one value per basis vector
        friend bool operator==(const Structured&, const Structured&) = default;
    };

    static AbelianCocycle3 from_tables(FgAbGroup group, FgAbGroup coeffs, std::vector<Element> h,
                                       std::vector<Element> c);
    static AbelianCocycle3 structured(BilinearForm bilinear, std::vector<Element> correction);
    static AbelianCocycle3 structured(BilinearForm bilinear, Mod2Basis basis, std::vector<Element> correction);
    static AbelianCocycle3 zero(const FgAbGroup& group, const FgAbGroup& coeffs);

    const FgAbGroup& group() const { return group_; }
    const FgAbGroup& coeffs() const { return coeffs_; }

    bool is_table() const { return std::holds_alternative<Tables>(data_); }
    const Tables& tables() const { return std::get<Tables>(data_); }
    const Structured& structured_data() const { return std::get<Structured>(data_); }

    Element h(const Element& x, const Element& y, const Element& z) const;
    Element c(const Element& x, const Element& y) const;

    /// True when h is zero by construction or every table entry is zero.
    bool h_vanishes() const;

    /// Dense tables on a finite group (identity for table-backed cocycles).
    AbelianCocycle3 realized() const;

    /// Copies with one table entry replaced (table backing only).
    AbelianCocycle3 with_h(const Element& x, const Element& y, const Element& z, Element value) const;
    AbelianCocycle3 with_c(const Element& x, const Element& y, Element value) const;

    /// Componentwise sum / difference of the realized tables.
    AbelianCocycle3 operator+(const AbelianCocycle3& other) const;
    AbelianCocycle3 operator-(const AbelianCocycle3& other) const;

    friend bool operator==(const AbelianCocycle3& a, const AbelianCocycle3& b);

private:
    AbelianCocycle3(FgAbGroup group, FgAbGroup coeffs, std::variant<Tables, Structured> data);

    FgAbGroup group_;
    FgAbGroup coeffs_;
    std::variant<Tables, Structured> data_;
};

struct CheckResult {
    bool passed = true;
    std::uint64_t checked = 0;
    /// Arguments of the first failing instance.
    std::vector<Element> counterexample;
};

struct ValidationReport {
    CheckResult group_cocycle;
    CheckResult normalized;
    CheckResult identity_A;
    CheckResult identity_Aprime;
    /// False when the checks ran over sample_box(G, box) only.
    bool exhaustive = true;
    std::int64_t box = 0;

    bool valid() const {
        return group_cocycle.passed && normalized.passed && identity_A.passed && identity_Aprime.passed;
    }
};

ValidationReport validate(const AbelianCocycle3& kappa, std::int64_t box = kDefaultSampleBox);

/// c(x, y) + c(y, x) = 0 on all enumerated (or sampled) pairs.
bool is_symmetric(const AbelianCocycle3& kappa, std::int64_t box = kDefaultSampleBox);

/// (dk, k^T - k) with dk(x,y,z) = k(y,z) - k(x+y,z) + k(x,y+z) - k(x,y).
/// With this dk, identity (A) forces the braiding part c(x,y) = k(y,x) - k(x,y);
/// the opposite sign fails (A) in general once 2M != 0.
AbelianCocycle3 coboundary(const CoboundaryWitness& k);

/// x -> c(x, x), read off as generator data.
QuadraticForm trace(const AbelianCocycle3& kappa);
/// c(x, x) for every x of a finite G, in enumeration order.
std::vector<Element> trace_table(const AbelianCocycle3& kappa);

/// W(x, y) = c(x, y) + c(y, x) read off generator pairs. Requires finite G.
BilinearForm w_form(const AbelianCocycle3& kappa);

/// Equality of traces; valid as a class test because the trace is injective
/// on H^3_ab.
bool cohomologous(const AbelianCocycle3& a, const AbelianCocycle3& b);

/// Exhaustive search for k with a - b = coboundary(k). Needs finite G and M;
/// throws SearchSpaceTooLarge when |M|^((|G|-1)^2) exceeds the budget.
std::optional<CoboundaryWitness> find_coboundary_witness(const AbelianCocycle3& a, const AbelianCocycle3& b,
                                                         const SearchOptions& options = {});

/// Every valid table-backed abelian 3-cocycle on (G, M), in lexicographic
/// order of the free entries (h entries first, then c). Throws
/// SearchSpaceTooLarge when |M|^((|G|-1)^3 + (|G|-1)^2) exceeds the budget.
std::vector<AbelianCocycle3> enumerate_cocycles(const FgAbGroup& group, const FgAbGroup& coeffs,
                                                const SearchOptions& options = {kDefaultEnumerationBudget, 1});

struct CohomologyClass {
    std::vector<Element> trace;        // trace table
    std::vector<std::size_t> members;  // indices into the classified list
};

/// Groups cocycles by trace table, ordered by trace.
std::vector<CohomologyClass> classify(const std::vector<AbelianCocycle3>& cocycles);

}  // namespace bcg
