#include "bcg/json_io.hpp"

#include <set>
#include <sstream>

#include "bcg/error.hpp"

namespace bcg::json_io {

namespace {

const json& field(const json& obj, const char* key, const char* what) {
    if (!obj.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
    return *it;
}

std::int64_t as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ParseError(what + ": expected an integer, got " + j.dump());
    return j.get<std::int64_t>();
}

std::vector<std::int64_t> int_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + ": expected an array of integers");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], what + "[" + std::to_string(i) + "]"));
    return out;
}

std::string tuple_key(std::initializer_list<Element> args) {
    std::string s;
    for (const auto& e : args) {
        if (!s.empty()) s += '|';
        s += e.key();
    }
    return s;
}

// Parses "1,0|0,1" into elements of `group`.
std::vector<Element> parse_tuple_key(const std::string& key, const FgAbGroup& group, std::size_t arity) {
    std::vector<Element> out;
    std::stringstream parts(key);
    std::string part;
    while (std::getline(parts, part, '|')) {
        std::vector<std::int64_t> coeffs;
        std::stringstream nums(part);
        std::string num;
        while (std::getline(nums, num, ',')) {
            try {
                std::size_t used = 0;
                coeffs.push_back(std::stoll(num, &used));
                if (used != num.size()) throw std::invalid_argument(num);
            } catch (const std::exception&) {
                throw ParseError("table key \"" + key + "\": bad coefficient \"" + num + "\"");
            }
        }
        if (coeffs.size() != group.rank()) {
            throw ParseError("table key \"" + key + "\": expected " + std::to_string(group.rank()) +
                             " coefficients per element");
        }
        out.emplace_back(group, std::move(coeffs));
    }
    if (out.size() != arity) throw ParseError("table key \"" + key + "\": expected " + std::to_string(arity) + " elements");
    return out;
}

json matrix_to_json(const std::vector<std::vector<Element>>& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& e : row) r.push_back(to_json(e));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<std::vector<Element>> matrix_from_json(const json& j, const FgAbGroup& source, const FgAbGroup& target) {
    if (!j.is_array() || j.size() != source.rank()) {
        throw ParseError("matrix: expected " + std::to_string(source.rank()) + " rows");
    }
    std::vector<std::vector<Element>> m;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != source.rank()) {
            throw ParseError("matrix: every row needs " + std::to_string(source.rank()) + " entries");
        }
        std::vector<Element> r;
        for (const auto& e : row) r.push_back(element_from_json(e, target));
        m.push_back(std::move(r));
    }
    return m;
}

json check_to_json(const CheckResult& c) {
    json out = {{"passed", c.passed}, {"checked", c.checked}};
    if (!c.passed) {
        json ce = json::array();
        for (const auto& e : c.counterexample) ce.push_back(e.key());
        out["counterexample"] = std::move(ce);
    }
    return out;
}

}  // namespace

json to_json(const FgAbGroup& g) {
    return {{"orders", std::vector<std::int64_t>(g.orders().begin(), g.orders().end())}};
}

FgAbGroup group_from_json(const json& j) {
    try {
        return FgAbGroup(int_list(field(j, "orders", "group"), "group.orders"));
    } catch (const InvalidGroup& e) {
        throw ParseError(std::string("group: ") + e.what());
    }
}

json to_json(const Element& x) {
    return {{"coeffs", std::vector<std::int64_t>(x.coeffs().begin(), x.coeffs().end())}};
}

Element element_from_json(const json& j, const FgAbGroup& group) {
    auto coeffs = int_list(field(j, "coeffs", "element"), "element.coeffs");
    if (coeffs.size() != group.rank()) {
        throw ParseError("element " + j.dump() + " needs " + std::to_string(group.rank()) + " coefficients for " +
                         group.to_string());
    }
    return Element(group, std::move(coeffs));
}

json to_json(const BilinearForm& t) {
    return {{"source", to_json(t.source())}, {"target", to_json(t.target())}, {"matrix", matrix_to_json(t.matrix())}};
}

BilinearForm bilinear_from_json(const json& j) {
    const auto G = group_from_json(field(j, "source", "bilinear form"));
    const auto M = group_from_json(field(j, "target", "bilinear form"));
    return BilinearForm(G, M, matrix_from_json(field(j, "matrix", "bilinear form"), G, M));
}

json to_json(const QuadraticForm& q) {
    json diag = json::array();
    json off = json::object();
    const std::size_t r = q.source().rank();
    for (std::size_t i = 0; i < r; ++i) {
        diag.push_back(to_json(q.diag(i)));
        for (std::size_t j = i + 1; j < r; ++j) off[std::to_string(i) + "," + std::to_string(j)] = to_json(q.cross(i, j));
    }
    return {{"source", to_json(q.source())}, {"target", to_json(q.target())}, {"diag", diag}, {"offdiag", off}};
}

QuadraticForm quadratic_from_json(const json& j) {
    const auto G = group_from_json(field(j, "source", "quadratic form"));
    const auto M = group_from_json(field(j, "target", "quadratic form"));
    const auto& d = field(j, "diag", "quadratic form");
    if (!d.is_array() || d.size() != G.rank()) {
        throw ParseError("quadratic form: diag needs " + std::to_string(G.rank()) + " entries");
    }
    std::vector<Element> diag;
    for (const auto& e : d) diag.push_back(element_from_json(e, M));
    QuadraticForm::CrossTerms cross;
    if (const auto it = j.find("offdiag"); it != j.end()) {
        if (!it->is_object()) throw ParseError("quadratic form: offdiag must be an object keyed by \"i,j\"");
        for (const auto& [key, value] : it->items()) {
            std::size_t a = 0, b = 0;
            char comma = 0;
            std::istringstream is(key);
            if (!(is >> a >> comma >> b) || comma != ',' || !is.eof()) {
                throw ParseError("quadratic form: bad offdiag key \"" + key + "\"");
            }
            if (a >= b || b >= G.rank()) throw ParseError("quadratic form: offdiag key \"" + key + "\" needs i < j < rank");
            cross.emplace(std::pair{a, b}, element_from_json(value, M));
        }
    }
    return QuadraticForm(G, M, std::move(diag), cross);
}

json to_json(const AbelianCocycle3& kappa) {
    json out = {{"group", to_json(kappa.group())}, {"coeffs", to_json(kappa.coeffs())}};
    if (kappa.is_table()) {
        const auto elems = enumerate(kappa.group());
        json h = json::object(), c = json::object();
        for (const auto& x : elems)
            for (const auto& y : elems) {
                const auto cv = kappa.c(x, y);
                if ((!x.is_zero() && !y.is_zero()) || !cv.is_zero()) c[tuple_key({x, y})] = to_json(cv);
                for (const auto& z : elems) {
                    const auto hv = kappa.h(x, y, z);
                    if ((!x.is_zero() && !y.is_zero() && !z.is_zero()) || !hv.is_zero()) h[tuple_key({x, y, z})] = to_json(hv);
                }
            }
        out["h"] = std::move(h);
        out["c"] = std::move(c);
        return out;
    }
    const auto& s = kappa.structured_data();
    json corr = json::array();
    for (const auto& v : s.correction) corr.push_back(to_json(v));
    json c = {{"bilinear", matrix_to_json(s.bilinear.matrix())}, {"correction", corr}};
    if (!s.basis.is_standard()) c["basis"] = s.basis.vectors();
    out["h"] = "zero";
    out["c"] = std::move(c);
    return out;
}

AbelianCocycle3 cocycle_from_json(const json& j) {
    const auto G = group_from_json(field(j, "group", "cocycle"));
    const auto M = group_from_json(field(j, "coeffs", "cocycle"));
    const auto& hj = field(j, "h", "cocycle");
    const auto& cj = field(j, "c", "cocycle");
    if (hj.is_string()) {
        if (hj.get<std::string>() != "zero") throw ParseError("cocycle: h must be \"zero\" or a table");
        const auto bil = BilinearForm(G, M, matrix_from_json(field(cj, "bilinear", "structured c"), G, M));
        std::optional<Mod2Basis> basis;
        if (const auto it = cj.find("basis"); it != cj.end()) {
            basis.emplace(G, it->get<std::vector<std::vector<std::uint8_t>>>());
        } else {
            basis.emplace(G);
        }
        const auto& corr = field(cj, "correction", "structured c");
        if (!corr.is_array()) throw ParseError("structured c: correction must be an array");
        std::vector<Element> values;
        for (const auto& e : corr) values.push_back(element_from_json(e, M));
        return AbelianCocycle3::structured(bil, *basis, std::move(values));
    }
    if (!hj.is_object() || !cj.is_object()) throw ParseError("cocycle: h and c must be tables (objects)");
    if (!G.is_finite()) throw ParseError("cocycle: table backing needs a finite group, got " + G.to_string());
    const std::size_t n = static_cast<std::size_t>(G.cardinality());
    std::vector<Element> h(n * n * n, M.zero()), c(n * n, M.zero());
    std::set<std::size_t> seen_h, seen_c;
    for (const auto& [key, value] : hj.items()) {
        const auto a = parse_tuple_key(key, G, 3);
        const auto idx = (G.index_of(a[0]) * n + G.index_of(a[1])) * n + G.index_of(a[2]);
        if (!seen_h.insert(idx).second) throw ParseError("cocycle: duplicate h entry \"" + key + "\"");
        h[idx] = element_from_json(value, M);
    }
    for (const auto& [key, value] : cj.items()) {
        const auto a = parse_tuple_key(key, G, 2);
        const auto idx = G.index_of(a[0]) * n + G.index_of(a[1]);
        if (!seen_c.insert(idx).second) throw ParseError("cocycle: duplicate c entry \"" + key + "\"");
        c[idx] = element_from_json(value, M);
    }
    return AbelianCocycle3::from_tables(G, M, std::move(h), std::move(c));
}

json to_json(const CoboundaryWitness& k) {
    json table = json::object();
    const auto elems = enumerate(k.group());
    for (const auto& x : elems)
        for (const auto& y : elems)
            if (!x.is_zero() && !y.is_zero()) table[tuple_key({x, y})] = to_json(k(x, y));
    return {{"group", to_json(k.group())}, {"coeffs", to_json(k.coeffs())}, {"k", table}};
}

CoboundaryWitness witness_from_json(const json& j) {
    const auto G = group_from_json(field(j, "group", "witness"));
    const auto M = group_from_json(field(j, "coeffs", "witness"));
    const auto& kj = field(j, "k", "witness");
    if (!kj.is_object()) throw ParseError("witness: k must be a table");
    const std::size_t n = static_cast<std::size_t>(G.cardinality());
    std::vector<Element> k(n * n, M.zero());
    for (const auto& [key, value] : kj.items()) {
        const auto a = parse_tuple_key(key, G, 2);
        k[G.index_of(a[0]) * n + G.index_of(a[1])] = element_from_json(value, M);
    }
    return CoboundaryWitness(G, M, std::move(k));
}

json to_json(const Homomorphism& f) {
    json images = json::array();
    for (const auto& e : f.images()) images.push_back(to_json(e));
    return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"images", images}};
}

json to_json(const Mod2Homomorphism& f) {
    json values = json::array();
    for (const auto& v : f.values) values.push_back(to_json(v));
    std::vector<std::size_t> idx(f.basis.basis_indices().begin(), f.basis.basis_indices().end());
    return {{"basis_indices", idx}, {"basis", f.basis.vectors()}, {"values", values}};
}

json to_json(const ValidationReport& r) {
    return {{"group_cocycle", check_to_json(r.group_cocycle)},
            {"normalized", check_to_json(r.normalized)},
            {"identity_A", check_to_json(r.identity_A)},
            {"identity_A_prime", check_to_json(r.identity_Aprime)},
            {"exhaustive", r.exhaustive},
            {"box", r.box},
            {"valid", r.valid()}};
}

json to_json(const CoherenceReport& r) {
    json out = {{"passed", r.passed}, {"checked", r.checked}, {"exhaustive", r.exhaustive}, {"box", r.box}};
    if (!r.passed) {
        json ce = json::array();
        for (const auto& e : r.counterexample) ce.push_back(e.key());
        out["counterexample"] = std::move(ce);
    }
    return out;
}

json to_json(const PolarCoverResult& r) {
    json kernel = json::array();
    for (const auto& e : r.kernel_generators) kernel.push_back(to_json(e));
    json out = {{"P", to_json(r.cover)},
                {"surjection", to_json(r.surjection)},
                {"lifted_form", to_json(r.lifted_form)},
                {"witness_t", to_json(r.witness_t)},
                {"strict_cocycle", to_json(r.strict_cocycle)},
                {"kernel_generators", kernel},
                {"kernel_rank", r.kernel_generators.size()},
                {"full", "undetermined"},
                {"pi1", to_json(r.lifted_form.target())},
                {"comparison_status", r.comparison_status}};
    out["pushforward"] = r.pushforward ? to_json(*r.pushforward) : json(nullptr);
    out["comparison_cells"] = r.comparison_cells ? to_json(*r.comparison_cells) : json(nullptr);
    return out;
}

json table_to_json(std::span<const Element> domain, std::span<const Element> values) {
    json out = json::object();
    for (std::size_t i = 0; i < domain.size(); ++i) out[domain[i].key()] = to_json(values[i]);
    return out;
}

std::vector<Element> table_from_json(const json& j, const FgAbGroup& group, const FgAbGroup& coeffs) {
    if (!j.is_object()) throw ParseError("table must be an object keyed by elements");
    const std::size_t n = static_cast<std::size_t>(group.cardinality());
    std::vector<std::optional<Element>> slots(n);
    for (const auto& [key, value] : j.items()) {
        const auto a = parse_tuple_key(key, group, 1);
        const auto idx = group.index_of(a[0]);
        if (slots[idx]) throw ParseError("table: duplicate entry \"" + key + "\"");
        slots[idx] = element_from_json(value, coeffs);
    }
    std::vector<Element> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!slots[i]) throw ParseError("table: missing entry for " + group.element_at(i).key());
        out.push_back(*slots[i]);
    }
    return out;
}

json parse(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

}  // namespace bcg::json_io
