#include "bcg/cocycle.hpp"

#include <map>
#include <string>

#include "bcg/error.hpp"

namespace bcg {

namespace {

void require_group(const FgAbGroup& actual, const FgAbGroup& expected, const char* what) {
    if (!(actual == expected)) {
        throw GroupMismatch(std::string(what) + ": expected " + expected.to_string() + ", got " + actual.to_string());
    }
}

void require_same_pair(const AbelianCocycle3& a, const AbelianCocycle3& b) {
    require_group(b.group(), a.group(), "cocycle group");
    require_group(b.coeffs(), a.coeffs(), "cocycle coefficients");
}

std::size_t group_size(const FgAbGroup& g) { return static_cast<std::size_t>(g.cardinality()); }

// Records the first failure of a check.
void record(CheckResult& r, bool ok, std::initializer_list<Element> args) {
    ++r.checked;
    if (!ok && r.passed) {
        r.passed = false;
        r.counterexample.assign(args.begin(), args.end());
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// CoboundaryWitness

CoboundaryWitness::CoboundaryWitness(FgAbGroup group, FgAbGroup coeffs, std::vector<Element> values)
    : group_(std::move(group)), coeffs_(std::move(coeffs)), values_(std::move(values)) {
    const std::size_t n = group_size(group_);
    if (values_.size() != n * n) throw InvalidCocycle("coboundary witness needs |G|^2 values");
    for (const auto& v : values_) require_group(v.group(), coeffs_, "witness value");
    for (std::size_t i = 0; i < n; ++i) {
        if (!values_[i * n].is_zero() || !values_[i].is_zero()) {
            throw NotNormalized("k(x,0) and k(0,y) must vanish; failed at index " + std::to_string(i));
        }
    }
}

CoboundaryWitness CoboundaryWitness::zero(const FgAbGroup& group, const FgAbGroup& coeffs) {
    const std::size_t n = group_size(group);
    return CoboundaryWitness(group, coeffs, std::vector<Element>(n * n, coeffs.zero()));
}

Element CoboundaryWitness::operator()(const Element& x, const Element& y) const {
    const std::size_t n = values_.empty() ? 0 : group_size(group_);
    return values_[group_.index_of(x) * n + group_.index_of(y)];
}

bool operator==(const CoboundaryWitness& a, const CoboundaryWitness& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_ && a.values_ == b.values_;
}

// ---------------------------------------------------------------------------
// AbelianCocycle3

AbelianCocycle3::AbelianCocycle3(FgAbGroup group, FgAbGroup coeffs, std::variant<Tables, Structured> data)
    : group_(std::move(group)), coeffs_(std::move(coeffs)), data_(std::move(data)) {}

AbelianCocycle3 AbelianCocycle3::from_tables(FgAbGroup group, FgAbGroup coeffs, std::vector<Element> h,
                                             std::vector<Element> c) {
    const std::size_t n = group_size(group);
    if (h.size() != n * n * n || c.size() != n * n) throw InvalidCocycle("tables must have |G|^3 and |G|^2 entries");
    for (const auto& v : h) require_group(v.group(), coeffs, "h value");
    for (const auto& v : c) require_group(v.group(), coeffs, "c value");
    return AbelianCocycle3(std::move(group), std::move(coeffs), Tables{std::move(h), std::move(c)});
}

AbelianCocycle3 AbelianCocycle3::structured(BilinearForm bilinear, std::vector<Element> correction) {
    Mod2Basis basis(bilinear.source());
    return structured(std::move(bilinear), std::move(basis), std::move(correction));
}

AbelianCocycle3 AbelianCocycle3::structured(BilinearForm bilinear, Mod2Basis basis, std::vector<Element> correction) {
    require_group(basis.group(), bilinear.source(), "mod-2 basis");
    if (correction.size() != basis.dimension()) {
        throw InvalidCocycle("correction needs one value per basis vector of G/2G (" +
                             std::to_string(basis.dimension()) + ")");
    }
    for (const auto& v : correction) require_group(v.group(), bilinear.target(), "correction value");
    FgAbGroup g = bilinear.source();
    FgAbGroup m = bilinear.target();
    return AbelianCocycle3(std::move(g), std::move(m),
                           Structured{std::move(bilinear), std::move(basis), std::move(correction)});
}

AbelianCocycle3 AbelianCocycle3::zero(const FgAbGroup& group, const FgAbGroup& coeffs) {
    const Mod2Basis basis(group);
    return structured(BilinearForm::zero(group, coeffs), basis,
                      std::vector<Element>(basis.dimension(), coeffs.zero()));
}

Element AbelianCocycle3::h(const Element& x, const Element& y, const Element& z) const {
    require_group(x.group(), group_, "h argument");
    if (const auto* t = std::get_if<Tables>(&data_)) {
        const std::size_t n = group_size(group_);
        return t->h[(group_.index_of(x) * n + group_.index_of(y)) * n + group_.index_of(z)];
    }
    return coeffs_.zero();
}

Element AbelianCocycle3::c(const Element& x, const Element& y) const {
    require_group(x.group(), group_, "c argument");
    if (const auto* t = std::get_if<Tables>(&data_)) {
        const std::size_t n = group_size(group_);
        return t->c[group_.index_of(x) * n + group_.index_of(y)];
    }
    const auto& s = std::get<Structured>(data_);
    Element out = s.bilinear(x, y);
    const auto xb = s.basis.reduce(x);
    const auto yb = s.basis.reduce(y);
    for (std::size_t i = 0; i < xb.size(); ++i)
        if (xb[i] & yb[i]) out += s.correction[i];
    return out;
}

bool AbelianCocycle3::h_vanishes() const {
    if (const auto* t = std::get_if<Tables>(&data_)) {
        for (const auto& v : t->h)
            if (!v.is_zero()) return false;
    }
    return true;
}

AbelianCocycle3 AbelianCocycle3::realized() const {
    if (is_table()) return *this;
    const auto elems = enumerate(group_);
    std::vector<Element> h(elems.size() * elems.size() * elems.size(), coeffs_.zero());
    std::vector<Element> c;
    c.reserve(elems.size() * elems.size());
    for (const auto& x : elems)
        for (const auto& y : elems) c.push_back(this->c(x, y));
    return from_tables(group_, coeffs_, std::move(h), std::move(c));
}

AbelianCocycle3 AbelianCocycle3::with_h(const Element& x, const Element& y, const Element& z, Element value) const {
    require_group(value.group(), coeffs_, "h value");
    Tables t = std::get<Tables>(data_);
    const std::size_t n = group_size(group_);
    t.h[(group_.index_of(x) * n + group_.index_of(y)) * n + group_.index_of(z)] = std::move(value);
    return AbelianCocycle3(group_, coeffs_, std::move(t));
}

AbelianCocycle3 AbelianCocycle3::with_c(const Element& x, const Element& y, Element value) const {
    require_group(value.group(), coeffs_, "c value");
    Tables t = std::get<Tables>(data_);
    const std::size_t n = group_size(group_);
    t.c[group_.index_of(x) * n + group_.index_of(y)] = std::move(value);
    return AbelianCocycle3(group_, coeffs_, std::move(t));
}

AbelianCocycle3 AbelianCocycle3::operator+(const AbelianCocycle3& other) const {
    require_same_pair(*this, other);
    Tables a = realized().tables();
    const Tables b = other.realized().tables();
    for (std::size_t i = 0; i < a.h.size(); ++i) a.h[i] += b.h[i];
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
    return AbelianCocycle3(group_, coeffs_, std::move(a));
}

AbelianCocycle3 AbelianCocycle3::operator-(const AbelianCocycle3& other) const {
    require_same_pair(*this, other);
    Tables a = realized().tables();
    const Tables b = other.realized().tables();
    for (std::size_t i = 0; i < a.h.size(); ++i) a.h[i] -= b.h[i];
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] -= b.c[i];
    return AbelianCocycle3(group_, coeffs_, std::move(a));
}

bool operator==(const AbelianCocycle3& a, const AbelianCocycle3& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate(const AbelianCocycle3& kappa, std::int64_t box) {
    ValidationReport report;
    const auto& G = kappa.group();
    report.exhaustive = G.is_finite();
    report.box = report.exhaustive ? 0 : box;
    const auto dom = exhaust_or_sample(G, box);
    const Element zero = G.zero();

    // h = 0 structurally: the cocycle identity and normalization hold exactly.
    if (kappa.is_table()) {
        for (const auto& u : dom)
            for (const auto& x : dom)
                for (const auto& y : dom)
                    for (const auto& z : dom) {
                        const bool ok = kappa.h(x, y, z) + kappa.h(u, x + y, z) + kappa.h(u, x, y) ==
                                        kappa.h(u, x, y + z) + kappa.h(u + x, y, z);
                        record(report.group_cocycle, ok, {u, x, y, z});
                    }
        for (const auto& x : dom)
            for (const auto& z : dom) record(report.normalized, kappa.h(x, zero, z).is_zero(), {x, zero, z});
    }

    for (const auto& x : dom)
        for (const auto& y : dom)
            for (const auto& z : dom) {
                const bool a = kappa.h(y, z, x) + kappa.c(x, y + z) + kappa.h(x, y, z) ==
                               kappa.c(x, z) + kappa.h(y, x, z) + kappa.c(x, y);
                record(report.identity_A, a, {x, y, z});
                const bool ap = -kappa.h(z, x, y) + kappa.c(x + y, z) - kappa.h(x, y, z) ==
                                kappa.c(x, z) - kappa.h(x, z, y) + kappa.c(y, z);
                record(report.identity_Aprime, ap, {x, y, z});
            }
    return report;
}

bool is_symmetric(const AbelianCocycle3& kappa, std::int64_t box) {
    const auto dom = exhaust_or_sample(kappa.group(), box);
    for (const auto& x : dom)
        for (const auto& y : dom)
            if (!(kappa.c(x, y) + kappa.c(y, x)).is_zero()) return false;
    return true;
}

AbelianCocycle3 coboundary(const CoboundaryWitness& k) {
    const auto elems = enumerate(k.group());
    std::vector<Element> h, c;
    h.reserve(elems.size() * elems.size() * elems.size());
    for (const auto& x : elems)
        for (const auto& y : elems)
            for (const auto& z : elems) h.push_back(k(y, z) - k(x + y, z) + k(x, y + z) - k(x, y));
    for (const auto& x : elems)
        for (const auto& y : elems) c.push_back(k(y, x) - k(x, y));
    return AbelianCocycle3::from_tables(k.group(), k.coeffs(), std::move(h), std::move(c));
}

// ---------------------------------------------------------------------------
// Trace

QuadraticForm trace(const AbelianCocycle3& kappa) {
    const auto& G = kappa.group();
    const std::size_t r = G.rank();
    std::vector<Element> diag;
    for (std::size_t i = 0; i < r; ++i) diag.push_back(kappa.c(G.generator(i), G.generator(i)));
    QuadraticForm::CrossTerms cross;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            const auto s = G.generator(i) + G.generator(j);
            cross.emplace(std::pair{i, j}, kappa.c(s, s) - diag[i] - diag[j]);
        }
    }
    return QuadraticForm(G, kappa.coeffs(), std::move(diag), cross);
}

std::vector<Element> trace_table(const AbelianCocycle3& kappa) {
    std::vector<Element> out;
    for (const auto& x : enumerate(kappa.group())) out.push_back(kappa.c(x, x));
    return out;
}

BilinearForm w_form(const AbelianCocycle3& kappa) {
    const auto& G = kappa.group();
    if (!G.is_finite()) throw InfiniteGroup("w_form reads W off a finite group; got " + G.to_string());
    const std::size_t r = G.rank();
    std::vector<std::vector<Element>> m(r, std::vector<Element>(r, kappa.coeffs().zero()));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            m[i][j] = kappa.c(G.generator(i), G.generator(j)) + kappa.c(G.generator(j), G.generator(i));
    return BilinearForm(G, kappa.coeffs(), std::move(m));
}

bool cohomologous(const AbelianCocycle3& a, const AbelianCocycle3& b) {
    require_same_pair(a, b);
    return trace(a) == trace(b);
}

// ---------------------------------------------------------------------------
// Exhaustive searches

std::optional<CoboundaryWitness> find_coboundary_witness(const AbelianCocycle3& a, const AbelianCocycle3& b,
                                                         const SearchOptions& options) {
    require_same_pair(a, b);
    const auto& G = a.group();
    const auto& M = a.coeffs();
    if (!M.is_finite()) throw InfiniteGroup("coboundary search needs finite coefficients; got " + M.to_string());
    const std::size_t n = group_size(G);
    const detail::IndexedGroup mod(M);
    const auto diff = (a - b).tables();

    // Variables: k(x, y) for nonzero x, y.
    auto var = [n](std::size_t x, std::size_t y) { return (x - 1) * (n - 1) + (y - 1); };
    const std::size_t vars = (n - 1) * (n - 1);
    std::vector<detail::LinearEquation> eqs;
    auto term = [&](detail::LinearEquation& eq, std::size_t x, std::size_t y, int sign) {
        if (x != 0 && y != 0) eq.terms.emplace_back(var(x, y), sign);
    };
    const auto elems = enumerate(G);
    std::vector<std::size_t> sum(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) sum[x * n + y] = G.index_of(elems[x] + elems[y]);

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            detail::LinearEquation eq;
            term(eq, y, x, +1);
            term(eq, x, y, -1);
            eq.rhs = mod.index(diff.c[x * n + y]);
            eqs.push_back(std::move(eq));
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                detail::LinearEquation eq;
                term(eq, y, z, +1);
                term(eq, sum[x * n + y], z, -1);
                term(eq, x, sum[y * n + z], +1);
                term(eq, x, y, -1);
                eq.rhs = mod.index(diff.h[(x * n + y) * n + z]);
                eqs.push_back(std::move(eq));
            }

    const detail::LinearSearch search(mod, vars, std::move(eqs));
    if (search.candidate_count() > options.max_candidates) {
        throw SearchSpaceTooLarge("coboundary search has " + std::to_string(search.candidate_count()) +
                                  " candidates, budget " + std::to_string(options.max_candidates));
    }
    const auto sols = search.solve(1, options.parallel);
    if (sols.empty()) return std::nullopt;
    std::vector<Element> k(n * n, M.zero());
    for (std::size_t x = 1; x < n; ++x)
        for (std::size_t y = 1; y < n; ++y) k[x * n + y] = mod.element(sols[0][var(x, y)]);
    return CoboundaryWitness(G, M, std::move(k));
}

std::vector<AbelianCocycle3> enumerate_cocycles(const FgAbGroup& group, const FgAbGroup& coeffs,
                                                const SearchOptions& options) {
    if (!coeffs.is_finite()) throw InfiniteGroup("enumeration needs finite coefficients; got " + coeffs.to_string());
    const std::size_t n = group_size(group);
    const detail::IndexedGroup mod(coeffs);
    const std::size_t m = n - 1;
    const std::size_t h_vars = m * m * m;
    const std::size_t vars = h_vars + m * m;
    auto hv = [m](std::size_t x, std::size_t y, std::size_t z) { return ((x - 1) * m + (y - 1)) * m + (z - 1); };
    auto cv = [m, h_vars](std::size_t x, std::size_t y) { return h_vars + (x - 1) * m + (y - 1); };

    // Entries with a zero argument are forced to vanish: h by normalization,
    // c by identities (A) and (A') at y = z = 0 and x = y = 0.
    auto h_term = [&](detail::LinearEquation& eq, std::size_t x, std::size_t y, std::size_t z, int sign) {
        if (x && y && z) eq.terms.emplace_back(hv(x, y, z), sign);
    };
    auto c_term = [&](detail::LinearEquation& eq, std::size_t x, std::size_t y, int sign) {
        if (x && y) eq.terms.emplace_back(cv(x, y), sign);
    };
    const auto elems = enumerate(group);
    std::vector<std::size_t> sum(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) sum[x * n + y] = group.index_of(elems[x] + elems[y]);
    auto add = [&](std::size_t x, std::size_t y) { return sum[x * n + y]; };

    std::vector<detail::LinearEquation> eqs;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    detail::LinearEquation eq;
                    h_term(eq, x, y, z, +1);
                    h_term(eq, u, add(x, y), z, +1);
                    h_term(eq, u, x, y, +1);
                    h_term(eq, u, x, add(y, z), -1);
                    h_term(eq, add(u, x), y, z, -1);
                    eqs.push_back(std::move(eq));
                }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                detail::LinearEquation a;
                h_term(a, y, z, x, +1);
                c_term(a, x, add(y, z), +1);
                h_term(a, x, y, z, +1);
                c_term(a, x, z, -1);
                h_term(a, y, x, z, -1);
                c_term(a, x, y, -1);
                eqs.push_back(std::move(a));
                detail::LinearEquation ap;
                h_term(ap, z, x, y, -1);
                c_term(ap, add(x, y), z, +1);
                h_term(ap, x, y, z, -1);
                c_term(ap, x, z, -1);
                h_term(ap, x, z, y, +1);
                c_term(ap, y, z, -1);
                eqs.push_back(std::move(ap));
            }

    const detail::LinearSearch search(mod, vars, std::move(eqs));
    if (search.candidate_count() > options.max_candidates) {
        throw SearchSpaceTooLarge("cocycle enumeration has " + std::to_string(search.candidate_count()) +
                                  " candidates, budget " + std::to_string(options.max_candidates));
    }
    std::vector<AbelianCocycle3> out;
    for (const auto& sol : search.solve(0, options.parallel)) {
        std::vector<Element> h(n * n * n, coeffs.zero());
        std::vector<Element> c(n * n, coeffs.zero());
        for (std::size_t x = 1; x < n; ++x)
            for (std::size_t y = 1; y < n; ++y) {
                c[x * n + y] = mod.element(sol[cv(x, y)]);
                for (std::size_t z = 1; z < n; ++z) h[(x * n + y) * n + z] = mod.element(sol[hv(x, y, z)]);
            }
        out.push_back(AbelianCocycle3::from_tables(group, coeffs, std::move(h), std::move(c)));
    }
    return out;
}

std::vector<CohomologyClass> classify(const std::vector<AbelianCocycle3>& cocycles) {
    std::map<std::vector<Element>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < cocycles.size(); ++i) buckets[trace_table(cocycles[i])].push_back(i);
    std::vector<CohomologyClass> out;
    for (auto& [tr, members] : buckets) out.push_back({tr, std::move(members)});
    return out;
}

}  // namespace bcg
