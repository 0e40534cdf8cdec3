#pragma once

// The skeletal braided categorical group T(G, M, (h, c)): objects are the
// elements of G, every object has automorphism group M and there are no other
// morphisms. Tensor is addition, the associator is h and the braiding is c.
// The coherence checks below re-derive the axioms through these accessors and
// do not call into cocycle validation.

#include <cstdint>
#include <string>
#include <vector>

#include "bcg/abgroup.hpp"
#include "bcg/cocycle.hpp"
#include "bcg/forms.hpp"

namespace bcg {

class SkeletalModel {
public:
    /// Throws InvalidCocycle (carrying the failing checks) unless kappa
    /// passes validate(kappa, box).
    static SkeletalModel build(AbelianCocycle3 kappa, std::int64_t box = kDefaultSampleBox);
    /// No validation; for exercising the checkers on broken data.
    static SkeletalModel unchecked(AbelianCocycle3 kappa);

    const AbelianCocycle3& cocycle() const { return kappa_; }
    const FgAbGroup& objects() const { return kappa_.group(); }
    const FgAbGroup& automorphisms() const { return kappa_.coeffs(); }

    Element unit() const { return objects().zero(); }
    Element tensor(const Element& x, const Element& y) const { return x + y; }
    /// (X --f--> X) (x) (Y --g--> Y) = (X + Y --f+g--> X + Y).
    Element tensor_morphisms(const Element& f, const Element& g) const { return f + g; }
    Element compose(const Element& f, const Element& g) const { return f + g; }
    Element identity() const { return automorphisms().zero(); }
    Element inverse(const Element& x) const { return -x; }

    /// a_{X,Y,Z} : X (x) (Y (x) Z) -> (X (x) Y) (x) Z.
    Element associator(const Element& x, const Element& y, const Element& z) const { return kappa_.h(x, y, z); }
    /// s_{X,Y} : X (x) Y -> Y (x) X.
    Element braiding(const Element& x, const Element& y) const { return kappa_.c(x, y); }
    /// The contraction X (x) X^{-1} -> 1, fixed to the identity.
    Element contraction(const Element& x) const;
    Element left_unitor(const Element& x) const;
    Element right_unitor(const Element& x) const;

private:
    explicit SkeletalModel(AbelianCocycle3 kappa) : kappa_(std::move(kappa)) {}
    AbelianCocycle3 kappa_;
};

struct CoherenceReport {
    bool passed = true;
    std::uint64_t checked = 0;
    bool exhaustive = true;
    std::int64_t box = 0;
    std::vector<Element> counterexample;
};

struct HexagonReport {
    CoherenceReport first;   // identity (A)
    CoherenceReport second;  // identity (A')
    bool passed() const { return first.passed && second.passed; }
};

CoherenceReport check_pentagon(const SkeletalModel& m, std::int64_t box = kDefaultSampleBox);
HexagonReport check_hexagons(const SkeletalModel& m, std::int64_t box = kDefaultSampleBox);
/// Unit constraints and triangle, unit-braiding compatibility, id_1 tensoring
/// and X (x) X^{-1} = 1.
CoherenceReport check_units(const SkeletalModel& m, std::int64_t box = kDefaultSampleBox);

/// s_{X,X} (x) X^{-1} (x) X^{-1} transported to Aut(1) along the contractions.
Element signature(const SkeletalModel& m, const Element& x);
QuadraticForm signature_form(const SkeletalModel& m);

bool is_picard(const SkeletalModel& m, std::int64_t box = kDefaultSampleBox);
FgAbGroup pi0(const SkeletalModel& m);
FgAbGroup pi1(const SkeletalModel& m);

/// Built-in instances: "nonpolar" (Z/2, Z/4, h(1,1,1) = 2, c(x,y) = xy) and
/// "koszul" (Z, Z/2, h = 0, c(x,y) = xbar ybar).
AbelianCocycle3 example_nonpolar();
AbelianCocycle3 example_koszul();
AbelianCocycle3 builtin_example(const std::string& name);
std::vector<std::string> builtin_example_names();

}  // namespace bcg
