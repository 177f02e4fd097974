// orbitstar: command-line front end for the star-product engine.

#include "orbitstar/cohomology.hpp"
#include "orbitstar/config.hpp"
#include "orbitstar/expr.hpp"
#include "orbitstar/orbit.hpp"
#include "orbitstar/quantize.hpp"
#include "orbitstar/reps.hpp"
#include "orbitstar/suites.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>

using namespace orbitstar;
using nlohmann::json;

namespace {

struct Flags {
    std::string config;
    std::string format;
    int max_degree = -1;
    std::string c;
    std::string lift;
    std::string product;
    unsigned seed = 1;
};

/// Thrown for bad user input; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    RunConfig rc;
    Flags flags;

    bool json_out() const { return rc.format == OutputFormat::json; }

    Orbit orbit() const
    {
        Orbit o = rc.orbit ? load_orbit(*rc.orbit) : Orbit::su2(1);
        if (flags.c.empty() && flags.lift.empty())
            return o;
        if (!o.reduced_variable() || !(*o.algebra() == *predefined("su2")))
            throw UsageError("--c and --lift need an su2 orbit");
        Rational level = o.levels().front();
        if (!flags.c.empty()) {
            Rational c = parse_rational(flags.c);
            level = c * c;
        }
        std::optional<HPoly> lift;
        if (!flags.lift.empty())
            lift = parse_hpoly(flags.lift);
        return Orbit::su2(level, lift);
    }

    StarProduct star() const
    {
        const std::string& p = rc.product;
        if (p == "sym")
            return symmetric_star(rc.algebra);
        if (p == "pbw")
            return pbw_star(rc.algebra);
        if (p == "orbit")
            return orbit_star_product(orbit());
        if (p == "tangential")
            return tangential_star(orbit());
        if (p == "example-psi")
            return example_star(orbit());
        throw UsageError("unknown product '" + p + "'");
    }
};

void emit(const Context& ctx, const json& j, const std::string& text)
{
    if (ctx.json_out())
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

int cmd_algebra(const Context& ctx)
{
    const LieAlgebra& L = *ctx.rc.algebra;
    KillingForm K = killing_form(L);
    json j = algebra_to_json(L);
    j["killing_form"] = K.matrix.to_string();
    j["killing_determinant"] = K.determinant.to_string();
    j["semisimple"] = K.nondegenerate();
    j["jacobi"] = check_jacobi(L);
    std::string text = "generators:";
    for (const auto& n : L.names())
        text += " " + n;
    text += "\ncoordinates:";
    for (const auto& n : L.coords())
        text += " " + n;
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t k = i + 1; k < L.dim(); ++k) {
            NCElement v(ctx.rc.algebra);
            for (const auto& [m, c] : L.bracket(i, k))
                v.add_term({static_cast<std::uint8_t>(m)}, HPoly(c));
            text += "\n[" + L.names()[i] + "," + L.names()[k] + "] = " + v.to_string();
        }
    text += "\nKilling form:\n" + K.matrix.to_string();
    text += "\ndeterminant " + K.determinant.to_string() + (K.nondegenerate() ? " (semisimple)" : " (degenerate)");
    if (ctx.rc.orbit) {
        Orbit o = ctx.orbit();
        j["orbit"] = orbit_to_json(o);
        text += "\norbit: " + orbit_to_json(o).dump();
    }
    emit(ctx, j, text);
    return 0;
}

int cmd_nf(const Context& ctx, const std::string& expr)
{
    NCElement u = normal_form(parse_ncelement(expr, ctx.rc.algebra));
    emit(ctx, {{"input", expr}, {"normal_form", u.to_string()}}, u.to_string());
    return 0;
}

int cmd_star(const Context& ctx, const std::string& fs, const std::string& gs)
{
    StarProduct s = ctx.star();
    const auto& names = s.algebra->coords();
    CPoly f = parse_cpoly(fs, *s.algebra);
    CPoly g = parse_cpoly(gs, *s.algebra);
    CPoly prod = s(f, g);
    json orders = json::array();
    std::string text = prod.to_string(names);
    int top = -1;
    for (const auto& [e, c] : prod.terms())
        top = std::max(top, c.degree());
    for (int n = 0; n <= top; ++n) {
        CPoly b = prod.h_coefficient(static_cast<std::size_t>(n));
        orders.push_back({{"n", n}, {"B", b.to_string(names)}});
        if (!ctx.json_out() && top > 0)
            text += "\n  B_" + std::to_string(n) + " = " + b.to_string(names);
    }
    emit(ctx, {{"product", s.name}, {"f", fs}, {"g", gs}, {"result", prod.to_string(names)}, {"orders", orders}},
         text);
    return 0;
}

int cmd_reduce(const Context& ctx, const std::string& expr, bool deformed)
{
    Orbit o = ctx.orbit();
    if (deformed) {
        IdealReduction r = ideal_divide_h(o, parse_ncelement(expr, o.algebra()));
        json q = json::array();
        for (const auto& x : r.quotients)
            q.push_back(x.to_string());
        emit(ctx, {{"input", expr}, {"remainder", r.remainder.to_string()}, {"quotients", q}},
             r.remainder.to_string());
    } else {
        const auto& names = o.algebra()->coords();
        CPoly f = parse_cpoly(expr, *o.algebra());
        CPoly r = orbit_reduce(o, f);
        emit(ctx, {{"input", expr}, {"remainder", r.to_string(names)}}, r.to_string(names));
    }
    return 0;
}

int cmd_verify(const Context& ctx, std::string suite, bool list)
{
    if (list) {
        json j = json::array();
        std::string text;
        for (const auto& s : suite_list()) {
            j.push_back({{"suite", s.name}, {"version", s.version}, {"default_degree", s.default_degree},
                         {"description", s.description}});
            text += s.name + " v" + s.version + "  " + s.description + "\n";
        }
        text += "all    every suite above";
        emit(ctx, j, text);
        return 0;
    }
    if (suite.empty())
        suite = "all";
    SuiteOptions opt;
    if (ctx.flags.max_degree >= 0)
        opt.max_degree = static_cast<unsigned>(ctx.flags.max_degree);
    opt.seed = ctx.flags.seed;
    if (!ctx.flags.c.empty())
        opt.radius = parse_rational(ctx.flags.c);
    if (!ctx.flags.lift.empty())
        opt.lift = parse_hpoly(ctx.flags.lift);
    std::vector<CaseResult> results;
    try {
        results = run_suite(suite, opt);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    bool ok = true;
    json j = json::array();
    std::string text;
    for (const auto& r : results) {
        ok = ok && r.passed;
        j.push_back(r.to_json());
        text += std::string(r.passed ? "PASS " : "FAIL ") + r.suite + ": " + r.name;
        if (!r.witness.empty() && !r.passed)
            text += "\n     witness: " + r.witness;
        text += "\n";
    }
    text += ok ? "all cases passed" : "some cases failed";
    emit(ctx, j, text);
    return ok ? 0 : 1;
}

int cmd_rep(const Context& ctx, const std::string& lift_a, const std::string& lift_b, unsigned bound)
{
    auto su2 = predefined("su2");
    NCElement P = symmetrize(su2, parse_cpoly("x^2 + y^2 + z^2", *su2));
    Scalar def = casimir_scalar(P, su2_defining_rep(), 1);
    Scalar adj = casimir_scalar(P, adjoint_rep(*su2), 1);
    CPoly hw = highest_weight_casimir(sl2_omega(predefined("sl2")));
    NonisomorphismReport w = nonisomorphism_witness(parse_hpoly(lift_a), parse_hpoly(lift_b), bound);
    json j = {{"casimir_defining", def.to_string()},
              {"casimir_adjoint", adj.to_string()},
              {"omega_highest_weight", hw.to_string({"l"})},
              {"spectra", w.to_json()}};
    auto list = [](const std::vector<unsigned>& v) {
        std::string s = "{";
        for (std::size_t k = 0; k < v.size(); ++k)
            s += (k ? ", " : "") + std::to_string(v[k]);
        return s + "}";
    };
    std::string text = "P on defining rep: " + def.to_string() + "\nP on adjoint rep: " + adj.to_string() +
                       "\nOmega on highest weight l: " + hw.to_string({"l"}) + "\nweights <= " +
                       std::to_string(bound) + " for c = " + w.c.to_string() + ": " + list(w.spectrum_c) +
                       "\nweights <= " + std::to_string(bound) + " for c' = " + w.c_prime.to_string() + ": " +
                       list(w.spectrum_c_prime) + "\n" +
                       (w.witness ? "spectra differ: the specialized quotients are not isomorphic"
                                  : "no witness within the bound");
    emit(ctx, j, text);
    return 0;
}

int cmd_cohomology(const Context& ctx)
{
    const LieAlgebra& L = *ctx.rc.algebra;
    const unsigned top = ctx.flags.max_degree >= 0 ? static_cast<unsigned>(ctx.flags.max_degree) : ctx.rc.max_degree;
    json rows = json::array();
    std::string text = "degree  dim H^2";
    for (unsigned d = 0; d <= top; ++d) {
        std::size_t h2 = h2_dimension(L, static_cast<int>(d));
        rows.push_back({{"degree", d}, {"h2", h2}});
        text += "\n" + std::to_string(d) + "       " + std::to_string(h2);
    }
    emit(ctx, {{"algebra", algebra_to_json(L)}, {"h2", rows}}, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Star products on coadjoint orbits: enveloping algebras, orbit quantization, checks"};
    app.require_subcommand(1);
    Flags flags;
    app.add_option("--config", flags.config, "JSON run configuration");
    app.add_option("--format", flags.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-degree", flags.max_degree, "degree bound")->check(CLI::NonNegativeNumber);
    app.add_option("--c", flags.c, "orbit radius c (the orbit is p = c^2)");
    app.add_option("--lift", flags.lift, "lift c(h) of the level, a polynomial in h");
    app.add_option("--product", flags.product, "sym | pbw | orbit | tangential | example-psi");
    app.add_option("--seed", flags.seed, "seed for randomized cases");
    app.fallthrough();

    auto* algebra = app.add_subcommand("algebra", "validate and describe the algebra (and orbit) of the config");
    auto* nf = app.add_subcommand("nf", "PBW normal form of a noncommutative expression");
    std::string nf_expr;
    nf->add_option("expr", nf_expr, "expression in the generators")->required();
    auto* star = app.add_subcommand("star", "star product of two polynomials");
    std::string sf, sg;
    star->add_option("f", sf)->required();
    star->add_option("g", sg)->required();
    auto* red = app.add_subcommand("reduce", "reduce modulo the orbit ideal");
    std::string red_expr;
    bool deformed = false;
    red->add_option("expr", red_expr)->required();
    red->add_flag("--deformed", deformed, "reduce a noncommutative expression modulo (P - c(h))");
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    bool list = false;
    verify->add_option("suite", suite);
    verify->add_flag("--list", list, "list the suites");
    auto* rep = app.add_subcommand("rep", "Casimir scalars and highest-weight spectra of two lifts");
    std::string lift_a = "-4", lift_b = "-4 + 1/3*h";
    unsigned lambda_bound = 20;
    rep->add_option("--lift-a", lift_a, "first lift c(h) of -Omega");
    rep->add_option("--lift-b", lift_b, "second lift c(h) of -Omega");
    rep->add_option("--lambda-bound", lambda_bound, "largest highest weight scanned");
    auto* coh = app.add_subcommand("cohomology", "dimension of H^2 per polynomial degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Context ctx;
        ctx.flags = flags;
        ctx.rc = flags.config.empty() ? load_run_config(json::object()) : load_run_config_file(flags.config);
        if (!flags.format.empty())
            ctx.rc.format = flags.format == "json" ? OutputFormat::json : OutputFormat::text;
        if (!flags.product.empty()) {
            if (!is_product_name(flags.product))
                throw UsageError("unknown product '" + flags.product + "'");
            ctx.rc.product = flags.product;
        }
        if (flags.max_degree >= 0)
            ctx.rc.max_degree = static_cast<unsigned>(flags.max_degree);

        if (*algebra)
            return cmd_algebra(ctx);
        if (*nf)
            return cmd_nf(ctx, nf_expr);
        if (*star)
            return cmd_star(ctx, sf, sg);
        if (*red)
            return cmd_reduce(ctx, red_expr, deformed);
        if (*verify)
            return cmd_verify(ctx, suite, list);
        if (*rep)
            return cmd_rep(ctx, lift_a, lift_b, lambda_bound);
        if (*coh)
            return cmd_cohomology(ctx);
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
