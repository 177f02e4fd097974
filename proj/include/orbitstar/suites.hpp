#pragma once

#include "orbitstar/scalar.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbitstar {

struct CaseResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string witness;  // empty when there is nothing to report

    nlohmann::json to_json() const;
};

struct SuiteOptions {
    std::optional<unsigned> max_degree;  // overrides the suite's main bound
    unsigned seed = 1;
    Rational radius = 1;                 // orbit p = radius^2
    std::optional<HPoly> lift;           // c(h); defaults to the constant level
};

struct SuiteInfo {
    std::string name;
    std::string version;
    unsigned default_degree;
    std::string description;
};

const std::vector<SuiteInfo>& suite_list();
/// Throws std::invalid_argument for an unknown suite name.  "all" runs every suite.
std::vector<CaseResult> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace orbitstar
