#include "orbitstar/config.hpp"

#include "orbitstar/expr.hpp"

#include <fstream>

namespace orbitstar {

namespace {

std::string as_text(const nlohmann::json& v, const char* what)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    throw ConfigError(std::string(what) + " entries must be strings or integers");
}

LieAlgebraPtr algebra_from(const nlohmann::json& v)
{
    try {
        return load_algebra(v);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad algebra: ") + e.what());
    }
}

}  // namespace

Orbit load_orbit(const nlohmann::json& j)
{
    if (!j.is_object())
        throw ConfigError("orbit must be an object");
    LieAlgebraPtr L = algebra_from(j.value("algebra", nlohmann::json("su2")));
    const std::size_t n = L->dim();
    try {
        std::vector<CPoly> invariants;
        for (const auto& v : j.at("invariants"))
            invariants.push_back(parse_cpoly(as_text(v, "invariants"), *L));
        std::vector<Rational> levels;
        for (const auto& v : j.at("constants"))
            levels.push_back(parse_rational(as_text(v, "constants")));
        std::vector<HPoly> lifts;
        if (j.contains("lifts")) {
            for (const auto& v : j.at("lifts"))
                lifts.push_back(parse_hpoly(as_text(v, "lifts")));
        } else {
            for (const auto& c : levels)
                lifts.emplace_back(Scalar(c));
        }
        std::vector<std::size_t> priority;
        if (j.contains("order")) {
            for (const auto& v : j.at("order"))
                priority.push_back(L->coord_index(v.get<std::string>()));
            if (priority.size() != n)
                throw ConfigError("order must list every coordinate once");
        } else {
            for (std::size_t k = n; k-- > 0;)
                priority.push_back(k);
        }
        return Orbit(L, std::move(invariants), std::move(levels), std::move(lifts), MonomialOrder(priority));
    } catch (const ConfigError&) {
        throw;
    } catch (const ParseError& e) {
        throw ConfigError(std::string("bad orbit expression at ") + e.what());
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad orbit: ") + e.what());
    }
}

nlohmann::json orbit_to_json(const Orbit& o)
{
    const auto& names = o.algebra()->coords();
    nlohmann::json inv = nlohmann::json::array(), lev = nlohmann::json::array(), lifts = nlohmann::json::array(),
                   order = nlohmann::json::array();
    for (const auto& p : o.invariants())
        inv.push_back(p.to_string(names));
    for (const auto& c : o.levels())
        lev.push_back(to_string(c));
    for (const auto& c : o.lifts())
        lifts.push_back(c.to_string());
    for (auto v : o.basis_rule().order().priority())
        order.push_back(names[v]);
    return {{"algebra", algebra_to_json(*o.algebra())},
            {"invariants", inv},
            {"constants", lev},
            {"lifts", lifts},
            {"order", order}};
}

bool is_product_name(const std::string& name)
{
    return name == "sym" || name == "pbw" || name == "orbit" || name == "tangential" || name == "example-psi";
}

RunConfig load_run_config(const nlohmann::json& j)
{
    if (!j.is_object())
        throw ConfigError("config must be a JSON object");
    RunConfig rc;
    rc.algebra = algebra_from(j.value("algebra", nlohmann::json("su2")));
    if (j.contains("orbit"))
        rc.orbit = j.at("orbit");
    if (j.contains("product")) {
        rc.product = j.at("product").get<std::string>();
        if (!is_product_name(rc.product))
            throw ConfigError("unknown product '" + rc.product + "'");
    }
    if (j.contains("max_degree")) {
        const auto& v = j.at("max_degree");
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw ConfigError("max_degree must be a natural number");
        rc.max_degree = static_cast<unsigned>(v.get<long long>());
    }
    if (j.contains("format")) {
        std::string f = j.at("format").get<std::string>();
        if (f == "text")
            rc.format = OutputFormat::text;
        else if (f == "json")
            rc.format = OutputFormat::json;
        else
            throw ConfigError("format must be text or json");
    }
    return rc;
}

RunConfig load_run_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    try {
        return load_run_config(j);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    }
}

}  // namespace orbitstar
