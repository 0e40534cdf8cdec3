#include "bcg/acceptance.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "bcg/abgroup.hpp"
#include "bcg/cocycle.hpp"
#include "bcg/error.hpp"
#include "bcg/forms.hpp"
#include "bcg/model.hpp"
#include "bcg/strictify.hpp"

namespace bcg::acceptance {

namespace {

// Collects failures; keeps the first few messages for the report line.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) {
            if (!detail_.empty()) detail_ += "; ";
            detail_ += what;
        }
    }
    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }

    bool passed() const { return failures_ == 0 && checks_ > 0; }
    std::string detail() const {
        if (checks_ == 0) return "no checks ran";
        std::ostringstream os;
        os << checks_ << " checks";
        if (!notes_.empty()) os << ", " << notes_;
        if (failures_) os << ", " << failures_ << " failed: " << detail_;
        return os.str();
    }

private:
    std::uint64_t checks_ = 0;
    std::uint64_t failures_ = 0;
    std::string detail_;
    std::string notes_;
};

struct Pair {
    FgAbGroup G;
    FgAbGroup M;
};

std::vector<Pair> enumeration_pairs() {
    return {{FgAbGroup::cyclic(2), FgAbGroup::cyclic(2)}, {FgAbGroup::cyclic(2), FgAbGroup::cyclic(4)}};
}

std::vector<Pair> corpus_pairs() {
    const std::vector<FgAbGroup> groups = {FgAbGroup::cyclic(2), FgAbGroup::cyclic(3), FgAbGroup::cyclic(4),
                                           FgAbGroup({2, 2})};
    const std::vector<FgAbGroup> coeffs = {FgAbGroup::cyclic(2), FgAbGroup::cyclic(4), FgAbGroup({2, 2})};
    std::vector<Pair> out;
    for (const auto& G : groups)
        for (const auto& M : coeffs) out.push_back({G, M});
    return out;
}

std::string label(const Pair& p) { return "(" + p.G.to_string() + ", " + p.M.to_string() + ")"; }

// ---------------------------------------------------------------------------

void criterion_1(Checker& ck) {
    const auto kappa = example_nonpolar();
    const auto G = kappa.group();
    const auto M = kappa.coeffs();
    const auto report = validate(kappa);
    ck.expect(report.valid(), "nonpolar example fails validate");
    ck.expect(report.exhaustive, "validation was not exhaustive");
    ck.expect(report.group_cocycle.checked == 16 && report.identity_A.checked == 8, "unexpected check counts");

    const auto q = trace(kappa);
    // Oracle: x -> x^2 mod 4 on Z/2, evaluated directly.
    for (const auto& x : enumerate(G)) {
        const std::int64_t v = x[0] * x[0];
        ck.expect(q(x) == M.make({v}), "trace differs from x^2 at " + x.key());
        ck.expect(trace_table(kappa)[G.index_of(x)] == M.make({v}), "trace table differs at " + x.key());
    }
    ck.expect(!is_polar(q).has_value(), "is_polar reports polar");
    ck.expect(!brute_force_is_polar(q), "brute force reports polar");
}

void criterion_2(Checker& ck, unsigned parallel) {
    for (const auto& p : enumeration_pairs()) {
        const auto start = std::chrono::steady_clock::now();
        const auto cocycles = enumerate_cocycles(p.G, p.M, {kDefaultEnumerationBudget, parallel});
        const auto classes = classify(cocycles);
        const auto tables = enumerate_quadratic_tables(p.G, p.M);
        ck.note(label(p) + ": " + std::to_string(cocycles.size()) + " cocycles, " + std::to_string(classes.size()) +
                " classes");

        ck.expect(classes.size() == tables.size(), label(p) + " class count differs from |Quad|");
        std::set<std::vector<Element>> traces;
        for (const auto& cls : classes) traces.insert(cls.trace);
        for (const auto& t : tables) ck.expect(traces.count(t) == 1, label(p) + " quadratic table not hit");
        for (const auto& kappa : cocycles) ck.expect(validate(kappa).valid(), label(p) + " enumerated invalid cocycle");

        for (std::size_t a = 0; a < classes.size(); ++a)
            for (std::size_t b = 0; b < classes.size(); ++b)
                for (auto i : classes[a].members)
                    for (auto j : classes[b].members) {
                        const auto k = find_coboundary_witness(cocycles[i], cocycles[j]);
                        if (a == b) {
                            ck.expect(k.has_value(), label(p) + " same-class pair without witness");
                            if (k) ck.expect(coboundary(*k) == cocycles[i] - cocycles[j], label(p) + " witness wrong");
                        } else {
                            ck.expect(!k.has_value(), label(p) + " cross-class witness found");
                        }
                    }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ck.expect(secs < kEnumerationTimeLimitSeconds, label(p) + " exceeded the time limit");
    }
    // Pinned counts for the two instances.
    const auto counts = std::vector<std::size_t>{classify(enumerate_cocycles(FgAbGroup::cyclic(2), FgAbGroup::cyclic(2))).size(),
                                                 classify(enumerate_cocycles(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4))).size()};
    ck.expect(counts[0] == 2 && counts[1] == 4, "distinct-trace counts are not 2 and 4");
}

void criterion_3(Checker& ck) {
    std::size_t polar = 0;
    for (const auto& p : corpus_pairs()) {
        const auto dom = enumerate(p.G);
        for (const auto& table : enumerate_quadratic_tables(p.G, p.M)) {
            const auto q = QuadraticForm::from_table(p.G, p.M, table);
            const auto t = is_polar(q);
            if (!t) continue;
            ++polar;
            const auto kappa = strictify_cocycle(q, *t);
            ck.expect(kappa.h_vanishes(), label(p) + " strictified h is nonzero");
            const auto tables = kappa.realized();
            ck.expect(tables.h_vanishes(), label(p) + " realized h is nonzero");
            const auto report = validate(tables);
            ck.expect(report.valid() && report.exhaustive, label(p) + " strictified cocycle invalid");
            ck.expect(validate(kappa).valid(), label(p) + " structured cocycle invalid");
            ck.expect(trace_table(kappa) == table, label(p) + " trace differs from q");
        }
    }
    ck.note(std::to_string(polar) + " polar forms");
    ck.expect(polar > 0, "corpus has no polar forms");
}

void criterion_4(Checker& ck) {
    std::size_t polar = 0, nonpolar = 0;
    for (const auto& p : corpus_pairs()) {
        for (const auto& table : enumerate_quadratic_tables(p.G, p.M)) {
            const auto q = QuadraticForm::from_table(p.G, p.M, table);
            const auto kappa = realize_quadratic_form(q);
            ck.expect(validate(kappa).valid(), label(p) + " realized cocycle invalid");
            ck.expect(trace_table(kappa) == table, label(p) + " realized trace differs");
            const bool brute = brute_force_is_polar(q);
            const auto decision = can_strictify(kappa);
            ck.expect(decision.polar == brute, label(p) + " can_strictify disagrees with brute force");
            if (decision.polar) {
                ck.expect(decision.strict && cohomologous(kappa, *decision.strict), label(p) + " strict rep not cohomologous");
            }
            (brute ? polar : nonpolar)++;
        }
    }
    ck.note(std::to_string(polar) + " polar, " + std::to_string(nonpolar) + " non-polar");
    ck.expect(polar > 0 && nonpolar > 0, "corpus lacks polar or non-polar forms");
}

std::vector<CoboundaryWitness> all_witnesses(const FgAbGroup& G, const FgAbGroup& M) {
    const auto gs = enumerate(G);
    const auto ms = enumerate(M);
    const std::size_t n = gs.size();
    std::vector<std::size_t> free;  // dense indices with both arguments nonzero
    for (std::size_t x = 1; x < n; ++x)
        for (std::size_t y = 1; y < n; ++y) free.push_back(x * n + y);
    std::vector<CoboundaryWitness> out;
    std::vector<std::size_t> digits(free.size(), 0);
    while (true) {
        std::vector<Element> values(n * n, M.zero());
        for (std::size_t i = 0; i < free.size(); ++i) values[free[i]] = ms[digits[i]];
        out.emplace_back(G, M, std::move(values));
        std::size_t i = digits.size();
        while (i > 0 && ++digits[i - 1] == ms.size()) digits[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

void criterion_5(Checker& ck) {
    for (const auto& p : enumeration_pairs()) {
        const auto dom = enumerate(p.G);
        const auto cocycles = enumerate_cocycles(p.G, p.M);
        for (const auto& kappa : cocycles) {
            for (const auto& x : dom)
                for (const auto& y : dom)
                    for (const auto& z : dom) {
                        const auto alt = kappa.h(x, y, z) - kappa.h(y, x, z) - kappa.h(x, z, y) -
                                         kappa.h(z, y, x) + kappa.h(y, z, x) + kappa.h(z, x, y);
                        ck.expect(alt.is_zero(), label(p) + " alternating sum nonzero");
                    }
            const auto W = w_form(kappa);
            ck.expect(W.is_symmetric(), label(p) + " W not symmetric");
            for (const auto& x : dom)
                for (const auto& y : dom) {
                    ck.expect(W(x, y) == kappa.c(x, y) + kappa.c(y, x), label(p) + " W differs from c + c^T");
                    ck.expect(kappa.c(x + y, x + y) - kappa.c(x, x) - kappa.c(y, y) == W(x, y),
                              label(p) + " W identity for c(y+z, y+z) fails");
                    for (const auto& z : dom) {
                        const auto lhs = kappa.c(x + y, z) + kappa.c(z, x + y);
                        ck.expect(lhs == W(x, z) + W(y, z), label(p) + " c + c^T not bilinear");
                    }
                }
            ck.expect(validate_quadratic_table(p.G, p.M, trace_table(kappa)), label(p) + " trace not quadratic");
            if (is_symmetric(kappa)) {
                for (const auto& x : dom) ck.expect((2 * trace(kappa)(x)).is_zero(), label(p) + " symmetric trace not 2-torsion");
                ck.expect(polarization(trace(kappa)).is_zero(), label(p) + " symmetric trace polarization nonzero");
            }
        }
        for (const auto& k : all_witnesses(p.G, p.M)) {
            const auto d = coboundary(k);
            ck.expect(validate(d).valid(), label(p) + " coboundary invalid");
            ck.expect(is_symmetric(d), label(p) + " coboundary not symmetric");
            for (const auto& v : trace_table(d)) ck.expect(v.is_zero(), label(p) + " coboundary trace nonzero");
        }
    }
}

void criterion_6(Checker& ck) {
    for (const auto& p : corpus_pairs()) {
        for (const auto& f : enumerate_mod2_homomorphisms(p.G, p.M)) {
            const auto q = whitehead::psi(f);
            ck.expect(whitehead::phi(q).is_zero(), label(p) + " phi o psi nonzero");
            const auto back = whitehead::psi_preimage(q);
            ck.expect(back && back->values == f.values, label(p) + " psi not injective on its image");
        }
        for (const auto& table : enumerate_quadratic_tables(p.G, p.M)) {
            const auto q = QuadraticForm::from_table(p.G, p.M, table);
            const bool in_kernel = whitehead::phi(q).is_zero();
            const auto pre = whitehead::psi_preimage(q);
            ck.expect(in_kernel == pre.has_value(), label(p) + " ker(phi) != im(psi)");
            if (pre) ck.expect(whitehead::psi(*pre) == q, label(p) + " psi preimage does not map back");
        }
        for (const auto& B : enumerate_bilinear_forms(p.G, p.M)) {
            ck.expect(whitehead::sym(B) == whitehead::phi(whitehead::diag(B)), label(p) + " sym != phi o diag");
        }
    }
}

void criterion_7(Checker& ck) {
    const auto kappa = example_nonpolar();
    const auto q = trace(kappa);
    const auto result = polar_cover(kappa);
    const auto& P = result.cover;
    const auto& M = kappa.coeffs();
    ck.expect(P == FgAbGroup::free(1), "cover is not Z");
    ck.expect(result.surjection(P.generator(0)) == kappa.group().generator(0), "f does not hit the generator");
    ck.expect(result.witness_t.entry(0, 0) == M.make({1}), "t_11 != 1");
    ck.expect(is_polar(result.lifted_form).has_value(), "lifted form not polar");
    ck.expect(result.strict_cocycle.h_vanishes(), "strict cocycle has h != 0");
    const auto box = sample_box(P, 5);
    for (const auto& m : box) {
        for (const auto& n : box) {
            // Oracle: c''(m, n) = m n reduced mod 4.
            ck.expect(result.strict_cocycle.c(m, n) == M.make({m[0] * n[0]}), "c'' != mn at " + m.key() + "|" + n.key());
        }
        ck.expect(result.strict_cocycle.c(m, m) == M.make({m[0] * m[0]}), "trace != n^2 at " + m.key());
        ck.expect(result.strict_cocycle.c(m, m) == q(result.surjection(m)), "trace != q o f at " + m.key());
        ck.expect(result.lifted_form(m) == q(result.surjection(m)), "lifted form != q o f at " + m.key());
    }
    ck.expect(validate(result.strict_cocycle, 5).valid(), "strict cocycle fails validate on the box");
    const auto cover_model = SkeletalModel::build(result.strict_cocycle, 5);
    const auto base_model = SkeletalModel::build(kappa);
    ck.expect(pi1(cover_model) == pi1(base_model), "pi1 changed");
    ck.expect(pi0(cover_model) == P && pi0(base_model) == kappa.group(), "pi0 mismatch");
    ck.expect(result.comparison_status == "found", "no comparison cells: " + result.comparison_status);
    if (result.comparison_cells && result.pushforward) {
        ck.expect(coboundary(*result.comparison_cells) == *result.pushforward - kappa, "comparison cells wrong");
    }
}

void check_model(Checker& ck, const std::string& name, const AbelianCocycle3& kappa) {
    const auto m = SkeletalModel::build(kappa);
    ck.expect(check_pentagon(m).passed, name + " pentagon fails");
    ck.expect(check_hexagons(m).passed(), name + " hexagon fails");
    ck.expect(check_units(m).passed, name + " unit coherence fails");
    const auto sig = signature_form(m);
    const auto tr = trace(kappa);
    ck.expect(sig == tr, name + " signature form differs from trace");
    for (const auto& x : exhaust_or_sample(m.objects(), 5)) ck.expect(signature(m, x) == tr(x), name + " signature at " + x.key());
}

void criterion_8(Checker& ck) {
    for (const auto& name : builtin_example_names()) check_model(ck, name, builtin_example(name));

    std::size_t perturbations = 0;
    for (const auto& name : builtin_example_names()) {
        const auto kappa = builtin_example(name);
        if (!kappa.is_table()) continue;
        const auto& G = kappa.group();
        const auto& M = kappa.coeffs();
        std::vector<AbelianCocycle3> variants;
        std::vector<Element> nonzero;
        for (const auto& x : enumerate(G))
            if (!x.is_zero()) nonzero.push_back(x);
        for (std::size_t g = 0; g < M.rank(); ++g) {
            const auto step = M.generator(g);
            for (const auto& x : nonzero)
                for (const auto& y : nonzero) {
                    variants.push_back(kappa.with_c(x, y, kappa.c(x, y) + step));
                    for (const auto& z : nonzero) variants.push_back(kappa.with_h(x, y, z, kappa.h(x, y, z) + step));
                }
        }
        for (const auto& v : variants) {
            const auto m = SkeletalModel::unchecked(v);
            const bool rejected = !check_pentagon(m).passed || !check_hexagons(m).passed() || !check_units(m).passed;
            ck.expect(rejected, name + " perturbation accepted");
            ++perturbations;
        }
    }
    ck.note(std::to_string(perturbations) + " perturbations");

    const auto koszul = SkeletalModel::build(example_koszul());
    for (const auto& n : sample_box(koszul.objects(), 5)) {
        const std::int64_t parity = ((n[0] % 2) + 2) % 2;
        ck.expect(signature(koszul, n) == koszul.automorphisms().make({parity}), "Koszul signature != parity");
    }
}

void criterion_9(Checker& ck) {
    std::size_t pairs = 0;
    for (const auto& p : enumeration_pairs()) {
        const auto cocycles = enumerate_cocycles(p.G, p.M);
        for (const auto& a : cocycles)
            for (const auto& b : cocycles) {
                ck.expect(cohomologous(a, b) == find_coboundary_witness(a, b).has_value(),
                          label(p) + " fast path disagrees with witness search");
                ++pairs;
            }
    }
    ck.note(std::to_string(pairs) + " pairs");
}

}  // namespace

std::vector<CriterionResult> run_all(std::ostream& out, unsigned parallel) {
    const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria = {
        {"non-polar example on (Z/2, Z/4)", criterion_1},
        {"trace bijectivity on (Z/2, Z/2) and (Z/2, Z/4)", [parallel](Checker& ck) { criterion_2(ck, parallel); }},
        {"strictification round trip", criterion_3},
        {"strictifiable iff polar", criterion_4},
        {"cocycle lemma properties", criterion_5},
        {"Whitehead exactness", criterion_6},
        {"polar cover of the non-polar example", criterion_7},
        {"coherence checker", criterion_8},
        {"cohomologous agrees with witness search", criterion_9},
    };
    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        CriterionResult r;
        r.id = static_cast<int>(i + 1);
        r.name = criteria[i].first;
        Checker ck;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(ck);
            r.passed = ck.passed();
            r.detail = ck.detail();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " (" << r.detail << ", "
            << static_cast<long long>(r.seconds * 1000) << " ms)\n";
        out.flush();
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace bcg::acceptance
