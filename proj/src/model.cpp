#include "bcg/model.hpp"

#include "bcg/error.hpp"

namespace bcg {

namespace {

std::string describe_failures(const ValidationReport& r) {
    std::string s;
    auto add = [&](const char* name, const CheckResult& c) {
        if (c.passed) return;
        if (!s.empty()) s += ", ";
        s += name;
        if (!c.counterexample.empty()) {
            s += " at (";
            for (std::size_t i = 0; i < c.counterexample.size(); ++i) {
                if (i) s += " | ";
                s += c.counterexample[i].key();
            }
            s += ")";
        }
    };
    add("group cocycle identity", r.group_cocycle);
    add("normalization", r.normalized);
    add("identity (A)", r.identity_A);
    add("identity (A')", r.identity_Aprime);
    return s;
}

CoherenceReport start_report(const SkeletalModel& m, std::int64_t box) {
    CoherenceReport r;
    r.exhaustive = m.objects().is_finite();
    r.box = r.exhaustive ? 0 : box;
    return r;
}

void record(CoherenceReport& r, bool ok, std::initializer_list<Element> args) {
    ++r.checked;
    if (!ok && r.passed) {
        r.passed = false;
        r.counterexample.assign(args.begin(), args.end());
    }
}

Element morphism_inverse(const Element& f) { return -f; }

}  // namespace

SkeletalModel SkeletalModel::build(AbelianCocycle3 kappa, std::int64_t box) {
    const auto report = validate(kappa, box);
    if (!report.valid()) throw InvalidCocycle("not an abelian 3-cocycle: " + describe_failures(report));
    return SkeletalModel(std::move(kappa));
}

SkeletalModel SkeletalModel::unchecked(AbelianCocycle3 kappa) { return SkeletalModel(std::move(kappa)); }

Element SkeletalModel::contraction(const Element& x) const {
    (void)x;
    return identity();
}

Element SkeletalModel::left_unitor(const Element& x) const {
    (void)x;
    return identity();
}

Element SkeletalModel::right_unitor(const Element& x) const {
    (void)x;
    return identity();
}

CoherenceReport check_pentagon(const SkeletalModel& m, std::int64_t box) {
    auto r = start_report(m, box);
    const auto dom = exhaust_or_sample(m.objects(), box);
    const auto id = m.identity();
    for (const auto& x : dom)
        for (const auto& y : dom)
            for (const auto& z : dom)
                for (const auto& w : dom) {
                    // X(Y(ZW)) -> (XY)(ZW) -> ((XY)Z)W
                    const auto top = m.compose(m.associator(m.tensor(x, y), z, w), m.associator(x, y, m.tensor(z, w)));
                    // X(Y(ZW)) -> X((YZ)W) -> (X(YZ))W -> ((XY)Z)W
                    const auto bottom = m.compose(m.tensor_morphisms(m.associator(x, y, z), id),
                                                  m.compose(m.associator(x, m.tensor(y, z), w),
                                                            m.tensor_morphisms(id, m.associator(y, z, w))));
                    record(r, top == bottom, {x, y, z, w});
                }
    return r;
}

HexagonReport check_hexagons(const SkeletalModel& m, std::int64_t box) {
    HexagonReport r{start_report(m, box), start_report(m, box)};
    const auto dom = exhaust_or_sample(m.objects(), box);
    const auto id = m.identity();
    for (const auto& x : dom)
        for (const auto& y : dom)
            for (const auto& z : dom) {
                const auto yz = m.tensor(y, z);
                const auto xy = m.tensor(x, y);
                // X(YZ) -> (XY)Z ... both routes to (YZ)X rebracketed as Y(ZX).
                const auto first_left =
                    m.compose(m.associator(y, z, x), m.compose(m.braiding(x, yz), m.associator(x, y, z)));
                const auto first_right =
                    m.compose(m.tensor_morphisms(id, m.braiding(x, z)),
                              m.compose(m.associator(y, x, z), m.tensor_morphisms(m.braiding(x, y), id)));
                record(r.first, first_left == first_right, {x, y, z});

                const auto second_left =
                    m.compose(morphism_inverse(m.associator(z, x, y)),
                              m.compose(m.braiding(xy, z), morphism_inverse(m.associator(x, y, z))));
                const auto second_right =
                    m.compose(m.tensor_morphisms(m.braiding(x, z), id),
                              m.compose(morphism_inverse(m.associator(x, z, y)), m.tensor_morphisms(id, m.braiding(y, z))));
                record(r.second, second_left == second_right, {x, y, z});
            }
    return r;
}

CoherenceReport check_units(const SkeletalModel& m, std::int64_t box) {
    auto r = start_report(m, box);
    const auto dom = exhaust_or_sample(m.objects(), box);
    const auto one = m.unit();
    const auto id = m.identity();
    for (const auto& x : dom) {
        record(r, m.tensor(x, m.inverse(x)) == one, {x});
        record(r, m.braiding(x, one) == id && m.braiding(one, x) == id, {x, one});
        for (const auto& y : dom) {
            // Triangle: (rho_X (x) id_Y) o a_{X,1,Y} = id_X (x) lambda_Y.
            const auto tri_left = m.compose(m.tensor_morphisms(m.right_unitor(x), id), m.associator(x, one, y));
            const auto tri_right = m.tensor_morphisms(id, m.left_unitor(y));
            record(r, tri_left == tri_right, {x, one, y});
            record(r, m.associator(one, x, y) == id && m.associator(x, y, one) == id, {x, y});
        }
    }
    for (const auto& f : exhaust_or_sample(m.automorphisms(), box)) {
        record(r, m.tensor_morphisms(f, id) == f && m.tensor_morphisms(id, f) == f, {f});
    }
    return r;
}

Element signature(const SkeletalModel& m, const Element& x) {
    const auto inv = m.inverse(x);
    // (X X)(X^-1 X^-1) is the unit object; conjugate s_{X,X} (x) id by the
    // contraction isomorphism.
    const auto twisted = m.tensor_morphisms(m.braiding(x, x), m.tensor_morphisms(m.identity(), m.identity()));
    const auto eps = m.compose(m.contraction(x), m.tensor_morphisms(m.identity(), m.contraction(inv)));
    return m.compose(eps, m.compose(twisted, morphism_inverse(eps)));
}

QuadraticForm signature_form(const SkeletalModel& m) {
    const auto& G = m.objects();
    const std::size_t r = G.rank();
    std::vector<Element> diag;
    for (std::size_t i = 0; i < r; ++i) diag.push_back(signature(m, G.generator(i)));
    QuadraticForm::CrossTerms cross;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            cross.emplace(std::pair{i, j}, signature(m, G.generator(i) + G.generator(j)) - diag[i] - diag[j]);
    return QuadraticForm(G, m.automorphisms(), std::move(diag), cross);
}

bool is_picard(const SkeletalModel& m, std::int64_t box) {
    const auto dom = exhaust_or_sample(m.objects(), box);
    for (const auto& x : dom)
        for (const auto& y : dom)
            if (!(m.compose(m.braiding(y, x), m.braiding(x, y)) == m.identity())) return false;
    return true;
}

FgAbGroup pi0(const SkeletalModel& m) { return m.objects(); }

FgAbGroup pi1(const SkeletalModel& m) { return m.automorphisms(); }

AbelianCocycle3 example_nonpolar() {
    const auto G = FgAbGroup::cyclic(2);
    const auto M = FgAbGroup::cyclic(4);
    std::vector<Element> h(8, M.zero());
    std::vector<Element> c(4, M.zero());
    h[7] = M.make({2});  // h(1,1,1)
    c[3] = M.make({1});  // c(1,1)
    return AbelianCocycle3::from_tables(G, M, std::move(h), std::move(c));
}

AbelianCocycle3 example_koszul() {
    const auto G = FgAbGroup::free(1);
    const auto M = FgAbGroup::cyclic(2);
    return AbelianCocycle3::structured(BilinearForm::zero(G, M), {M.make({1})});
}

AbelianCocycle3 builtin_example(const std::string& name) {
    if (name == "nonpolar") return example_nonpolar();
    if (name == "koszul") return example_koszul();
    throw ParseError("unknown example '" + name + "' (known: nonpolar, koszul)");
}

std::vector<std::string> builtin_example_names() { return {"nonpolar", "koszul"}; }

}  // namespace bcg
