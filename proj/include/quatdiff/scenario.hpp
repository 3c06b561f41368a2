#ifndef QUATDIFF_SCENARIO_HPP
#define QUATDIFF_SCENARIO_HPP

#include <string>

#include "quatdiff/sim.hpp"

namespace qd {

// Scenario document: versioned JSON with unit-suffixed keys; unknown keys rejected.
struct ScenarioFile {
    int version = 1;
    SimConfig config;
    std::string resolved;  // canonical re-serialization for output headers
};

ScenarioFile parse_scenario(const std::string& json_text);
ScenarioFile load_scenario(const std::string& path);

}  // namespace qd

#endif
