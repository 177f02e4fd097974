#pragma once

#include "orbitstar/lie.hpp"
#include "orbitstar/orbit.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace orbitstar {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"algebra": "su2", "invariants": ["x^2+y^2+z^2"], "constants": ["1"], "lifts": ["1"]}
/// with optional "order": coordinate names from highest to lowest priority
/// (default: last coordinate first).  Constants are the levels p_i = c_i.
Orbit load_orbit(const nlohmann::json& j);
nlohmann::json orbit_to_json(const Orbit& o);

enum class OutputFormat { text, json };

struct RunConfig {
    LieAlgebraPtr algebra;
    std::optional<nlohmann::json> orbit;  // parsed lazily, it depends on flags
    std::string product = "sym";
    unsigned max_degree = 4;
    OutputFormat format = OutputFormat::text;
};

/// {"algebra": name or object, "orbit": {...}, "product": "...",
///  "max_degree": n, "format": "text" | "json"}; every key optional.
RunConfig load_run_config(const nlohmann::json& j);
RunConfig load_run_config_file(const std::string& path);

/// Accepted product names: sym, pbw, orbit, tangential, example-psi.
bool is_product_name(const std::string& name);

}  // namespace orbitstar
