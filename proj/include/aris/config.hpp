#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "aris/scenario.hpp"
#include "aris/schemes.hpp"

namespace aris {

inline constexpr const char* kToolName = "arisim";
inline constexpr const char* kToolVersion = "0.1.0";

/// Everything one experiment needs: world, solver, schemes, seeds. The
/// default-constructed value reproduces the reference setup; a config file
/// only overrides what it mentions.
struct AppConfig {
    ScenarioConfig scenario;
    RunOptions run;
    std::vector<SchemeSpec> schemes = {
        {SchemeKind::Plo}, {SchemeKind::Pl}, {SchemeKind::Po}};
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};

    void validate() const;
};

/// Parses a config JSON object. Unknown keys and malformed values raise
/// std::invalid_argument naming the offending entry.
AppConfig config_from_json(const nlohmann::json& j);

/// Reads and parses a config file; an empty path yields the defaults.
AppConfig load_config(const std::string& path);

/// Full resolved snapshot, sufficient to reproduce the run bit-for-bit on
/// the same build. config_from_json(config_to_json(c)) is the identity.
nlohmann::json config_to_json(const AppConfig& config);

}  // namespace aris
