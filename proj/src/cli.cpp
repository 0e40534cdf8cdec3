#include "bcg/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "bcg/acceptance.hpp"
#include "bcg/error.hpp"
#include "bcg/json_io.hpp"

namespace bcg::cli {

namespace {

using json_io::json;

// Result document and exit code of one command.
struct Outcome {
    json document;
    int code = kExitOk;
};

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    std::string output_path;
    bool stdin_used = false;
};

std::string read_source(Context& ctx, const std::string& path) {
    if (path == "-") {
        if (ctx.stdin_used) throw ParseError("standard input can only be read once");
        ctx.stdin_used = true;
        std::stringstream ss;
        ss << ctx.in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

json read_document(Context& ctx, const std::string& path) {
    return json_io::parse(read_source(ctx, path), path == "-" ? "<stdin>" : path);
}

// Accepts either an inline JSON document or a path to one.
json inline_or_file(Context& ctx, const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return json_io::parse(arg, "argument");
    return read_document(ctx, arg);
}

std::vector<Element> domain_for(const FgAbGroup& G, std::int64_t box) { return exhaust_or_sample(G, box); }

json trace_table_json(const QuadraticForm& q, std::int64_t box) {
    const auto dom = domain_for(q.source(), box);
    std::vector<Element> values;
    for (const auto& x : dom) values.push_back(q(x));
    return json_io::table_to_json(dom, values);
}

json search_guards(std::uint64_t max_candidates) { return {{"max_candidates", max_candidates}}; }

// ---------------------------------------------------------------------------
// forms

Outcome forms_validate(Context& ctx, const std::string& path) {
    const auto doc = read_document(ctx, path);
    if (doc.is_object() && doc.contains("table")) {
        const auto G = json_io::group_from_json(doc.at("source"));
        const auto M = json_io::group_from_json(doc.at("target"));
        const auto table = json_io::table_from_json(doc.at("table"), G, M);
        const bool ok = validate_quadratic_table(G, M, table);
        json out = {{"valid", ok}};
        if (ok) out["form"] = json_io::to_json(QuadraticForm::from_table(G, M, table));
        return {out, ok ? kExitOk : kExitNegative};
    }
    try {
        const auto q = json_io::quadratic_from_json(doc);
        return {{{"valid", true}, {"form", json_io::to_json(q)}}, kExitOk};
    } catch (const InvalidForm& e) {
        return {{{"valid", false}, {"reason", e.what()}}, kExitNegative};
    }
}

Outcome forms_is_polar(Context& ctx, const std::string& path, std::uint64_t max_candidates) {
    const auto q = json_io::quadratic_from_json(read_document(ctx, path));
    const auto t = is_polar(q);
    json out = {{"polar", t.has_value()}, {"witness_t", t ? json_io::to_json(*t) : json(nullptr)}};
    try {
        out["brute_force"] = brute_force_is_polar(q, max_candidates);
    } catch (const SearchSpaceTooLarge&) {
        out["brute_force"] = "guard_exceeded";
    }
    out["guards"] = search_guards(max_candidates);
    return {out, t ? kExitOk : kExitNegative};
}

Outcome forms_polarize(Context& ctx, const std::string& path) {
    const auto q = json_io::quadratic_from_json(read_document(ctx, path));
    return {{{"polarization", json_io::to_json(polarization(q))}}, kExitOk};
}

// ---------------------------------------------------------------------------
// cocycle

Outcome cocycle_validate(Context& ctx, const std::string& path, std::int64_t box) {
    const auto kappa = json_io::cocycle_from_json(read_document(ctx, path));
    const auto report = validate(kappa, box);
    auto out = json_io::to_json(report);
    out["symmetric"] = report.valid() ? json(is_symmetric(kappa, box)) : json(nullptr);
    return {out, report.valid() ? kExitOk : kExitNegative};
}

Outcome cocycle_trace(Context& ctx, const std::string& path, std::int64_t box) {
    const auto kappa = json_io::cocycle_from_json(read_document(ctx, path));
    const auto q = trace(kappa);
    json out = {{"form", json_io::to_json(q)}, {"table", trace_table_json(q, box)}};
    out["exhaustive"] = kappa.group().is_finite();
    out["box"] = kappa.group().is_finite() ? 0 : box;
    return {out, kExitOk};
}

Outcome cocycle_cohomologous(Context& ctx, const std::string& first, const std::string& second,
                             const SearchOptions& options) {
    const auto a = json_io::cocycle_from_json(read_document(ctx, first));
    const auto b = json_io::cocycle_from_json(read_document(ctx, second));
    if (!(a.group() == b.group()) || !(a.coeffs() == b.coeffs())) {
        throw GroupMismatch("cocycles live on different (G, M)");
    }
    const bool same = cohomologous(a, b);
    json out = {{"cohomologous", same}};
    if (a.group().is_finite() && a.coeffs().is_finite()) {
        try {
            const auto k = find_coboundary_witness(a, b, options);
            out["witness"] = k ? json_io::to_json(*k) : json(nullptr);
            out["witness_status"] = k ? "found" : "not_found";
        } catch (const SearchSpaceTooLarge&) {
            out["witness"] = nullptr;
            out["witness_status"] = "guard_exceeded";
        }
    } else {
        out["witness"] = nullptr;
        out["witness_status"] = "infinite";
    }
    out["guards"] = search_guards(options.max_candidates);
    return {out, same ? kExitOk : kExitNegative};
}

Outcome cocycle_enumerate(Context& ctx, const std::string& group, const std::string& coeffs,
                          const SearchOptions& options, bool list) {
    const auto G = json_io::group_from_json(inline_or_file(ctx, group));
    const auto M = json_io::group_from_json(inline_or_file(ctx, coeffs));
    const auto cocycles = enumerate_cocycles(G, M, options);
    const auto classes = classify(cocycles);
    const auto dom = enumerate(G);
    json cls = json::array();
    std::size_t symmetric_classes = 0;
    for (const auto& c : classes) {
        const auto q = QuadraticForm::from_table(G, M, c.trace);
        bool symmetric = false;
        for (auto i : c.members) symmetric = symmetric || is_symmetric(cocycles[i]);
        symmetric_classes += symmetric ? 1 : 0;
        cls.push_back({{"trace", json_io::table_to_json(dom, c.trace)},
                       {"size", c.members.size()},
                       {"polar", is_polar(q).has_value()},
                       {"symmetric", symmetric}});
    }
    json out = {{"group", json_io::to_json(G)},
                {"coeffs", json_io::to_json(M)},
                {"cocycle_count", cocycles.size()},
                {"class_count", classes.size()},
                {"symmetric_class_count", symmetric_classes},
                {"classes", cls},
                {"guards", search_guards(options.max_candidates)}};
    if (list) {
        json all = json::array();
        for (const auto& k : cocycles) all.push_back(json_io::to_json(k));
        out["cocycles"] = std::move(all);
    }
    return {out, kExitOk};
}

// ---------------------------------------------------------------------------
// strictify, polar cover, model

Outcome strictify_cmd(Context& ctx, const std::string& path) {
    const auto kappa = json_io::cocycle_from_json(read_document(ctx, path));
    const auto decision = can_strictify(kappa);
    json out = {{"polar", decision.polar}, {"form", json_io::to_json(decision.form)}};
    if (!decision.polar) return {out, kExitNegative};
    out["witness_t"] = json_io::to_json(*decision.witness);
    out["strict_cocycle"] = json_io::to_json(*decision.strict);
    return {out, kExitOk};
}

Outcome polar_cover_cmd(Context& ctx, const std::string& path, const SearchOptions& options) {
    const auto kappa = json_io::cocycle_from_json(read_document(ctx, path));
    auto out = json_io::to_json(polar_cover(kappa, options));
    out["guards"] = search_guards(options.max_candidates);
    return {out, kExitOk};
}

Outcome model_check(Context& ctx, const std::string& path, std::int64_t box) {
    const auto kappa = json_io::cocycle_from_json(read_document(ctx, path));
    const auto m = SkeletalModel::unchecked(kappa);
    const auto pentagon = check_pentagon(m, box);
    const auto hex = check_hexagons(m, box);
    const auto units = check_units(m, box);
    const auto dom = domain_for(m.objects(), box);
    std::vector<Element> sig;
    for (const auto& x : dom) sig.push_back(signature(m, x));
    const bool ok = pentagon.passed && hex.passed() && units.passed;
    json out = {{"pentagon", json_io::to_json(pentagon)},
                {"hexagon_A", json_io::to_json(hex.first)},
                {"hexagon_A_prime", json_io::to_json(hex.second)},
                {"units", json_io::to_json(units)},
                {"picard", is_picard(m, box)},
                {"pi0", json_io::to_json(pi0(m))},
                {"pi1", json_io::to_json(pi1(m))},
                {"signature_table", json_io::table_to_json(dom, sig)},
                {"passed", ok},
                {"guards", {{"box", box}}}};
    return {out, ok ? kExitOk : kExitNegative};
}

Outcome model_example(const std::string& name) { return {json_io::to_json(builtin_example(name)), kExitOk}; }

void emit(Context& ctx, const json& doc) {
    const auto text = doc.dump(2) + "\n";
    if (ctx.output_path.empty() || ctx.output_path == "-") {
        ctx.out << text;
        return;
    }
    std::ofstream f(ctx.output_path);
    if (!f) throw ParseError("cannot write '" + ctx.output_path + "'");
    f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Context ctx{in, out, err, {}, false};
    CLI::App app{"Quadratic forms, abelian 3-cocycles and braided categorical groups"};
    app.name("bcg");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--output,-o", ctx.output_path, "Write the result document to this path");

    std::int64_t box = 3;
    long long max_candidates = kDefaultMaxCandidates;
    unsigned parallel = 1;
    std::string input = "-";
    std::string other;
    std::string group, coeffs, example_name;
    bool list = false;

    std::function<Outcome()> action;

    auto add_input = [&](CLI::App* cmd, const char* flag) {
        cmd->add_option(std::string(flag), input, "Input document ('-' for standard input)");
        cmd->add_option("input", input, "Input document ('-' for standard input)");
    };
    auto add_search = [&](CLI::App* cmd) {
        cmd->add_option("--max-candidates", max_candidates, "Search budget")->check(CLI::PositiveNumber);
        cmd->add_option("--parallel", parallel, "Worker threads")->check(CLI::Range(1u, 256u));
    };
    auto options = [&] { return SearchOptions{static_cast<std::uint64_t>(max_candidates), parallel}; };

    auto* forms = app.add_subcommand("forms", "Quadratic forms");
    forms->require_subcommand(1);
    auto* f_validate = forms->add_subcommand("validate", "Check a quadratic form document or value table");
    add_input(f_validate, "--form");
    f_validate->callback([&] { action = [&] { return forms_validate(ctx, input); }; });
    auto* f_polar = forms->add_subcommand("is-polar", "Decide polarity and report a witness");
    add_input(f_polar, "--form");
    f_polar->add_option("--max-candidates", max_candidates, "Brute-force budget")->check(CLI::PositiveNumber);
    f_polar->callback([&] {
        action = [&] { return forms_is_polar(ctx, input, static_cast<std::uint64_t>(max_candidates)); };
    });
    auto* f_polarize = forms->add_subcommand("polarize", "Polarization b(x,y) = q(x+y) - q(x) - q(y)");
    add_input(f_polarize, "--form");
    f_polarize->callback([&] { action = [&] { return forms_polarize(ctx, input); }; });

    auto* cocycle = app.add_subcommand("cocycle", "Abelian 3-cocycles");
    cocycle->require_subcommand(1);
    auto* c_validate = cocycle->add_subcommand("validate", "Check the cocycle identities");
    add_input(c_validate, "--cocycle");
    c_validate->add_option("--box", box, "Sample bound for free generators")->check(CLI::NonNegativeNumber);
    c_validate->callback([&] { action = [&] { return cocycle_validate(ctx, input, box); }; });
    auto* c_trace = cocycle->add_subcommand("trace", "The quadratic form x -> c(x,x)");
    add_input(c_trace, "--cocycle");
    c_trace->add_option("--box", box, "Sample bound for free generators")->check(CLI::NonNegativeNumber);
    c_trace->callback([&] { action = [&] { return cocycle_trace(ctx, input, box); }; });
    auto* c_coh = cocycle->add_subcommand("cohomologous", "Compare two cocycles");
    add_input(c_coh, "--cocycle");
    c_coh->add_option("--other", other, "Second cocycle document")->required();
    add_search(c_coh);
    c_coh->callback([&] { action = [&] { return cocycle_cohomologous(ctx, input, other, options()); }; });
    auto* c_enum = cocycle->add_subcommand("enumerate", "All table cocycles on (G, M), grouped by trace");
    c_enum->add_option("--group", group, "Group G (inline JSON or path)")->required();
    c_enum->add_option("--coeffs", coeffs, "Coefficients M (inline JSON or path)")->required();
    c_enum->add_flag("--list", list, "Include every cocycle in the output");
    add_search(c_enum);
    c_enum->callback([&] { action = [&] { return cocycle_enumerate(ctx, group, coeffs, options(), list); }; });

    auto* strictify = app.add_subcommand("strictify", "Cohomologous representative with h = 0, if any");
    add_input(strictify, "--cocycle");
    strictify->callback([&] { action = [&] { return strictify_cmd(ctx, input); }; });

    auto* cover = app.add_subcommand("polar-cover", "Strict cover over the free group on the generators");
    add_input(cover, "--cocycle");
    add_search(cover);
    cover->callback([&] { action = [&] { return polar_cover_cmd(ctx, input, options()); }; });

    auto* model = app.add_subcommand("model", "Skeletal braided categorical groups");
    model->require_subcommand(1);
    auto* m_check = model->add_subcommand("check", "Pentagon, hexagon and unit checks");
    add_input(m_check, "--cocycle");
    m_check->add_option("--box", box, "Sample bound for free generators")->check(CLI::NonNegativeNumber);
    m_check->callback([&] { action = [&] { return model_check(ctx, input, box); }; });
    auto* m_example = model->add_subcommand("example", "Print a built-in cocycle");
    m_example->add_option("name", example_name, "nonpolar | koszul")->required();
    m_example->callback([&] { action = [&] { return model_example(example_name); }; });

    bool selftest = false;
    auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
    self->add_option("--parallel", parallel, "Worker threads")->check(CLI::Range(1u, 256u));
    self->callback([&] { selftest = true; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInvalidInput;
    }

    if (selftest) {
        const auto results = acceptance::run_all(out, parallel);
        for (const auto& r : results)
            if (!r.passed) return kExitNegative;
        return kExitOk;
    }

    try {
        const auto outcome = action();
        emit(ctx, outcome.document);
        return outcome.code;
    } catch (const SearchSpaceTooLarge& e) {
        err << "bcg: guard exceeded: " << e.what() << "\n";
        emit(ctx, {{"error", "guard_exceeded"}, {"message", e.what()}});
        return kExitGuard;
    } catch (const Error& e) {
        err << "bcg: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const json_io::json::exception& e) {
        err << "bcg: malformed document: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}

}  // namespace bcg::cli
