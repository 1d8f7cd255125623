#pragma once

#include <string>

#include "airstack/netsim/floor_scenario.hpp"
#include "airstack/netsim/scenario.hpp"

namespace airstack::cli {

/// Strict JSON decoding: unknown keys are rejected at every level and
/// diagnostics name the offending field path ("vehicles[2].speed_mps").
/// Throws core::Error("ParseError") on malformed input and
/// core::Error("IoError") when the file cannot be read. Omitted keys fall
/// back to the documented defaults; an omitted "rules" array means the stock
/// rule set.
netsim::Scenario parse_scenario_text(const std::string& text);
netsim::Scenario load_scenario(const std::string& path);

netsim::FloorConfig parse_floor_config_text(const std::string& text);
netsim::FloorConfig load_floor_config(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace airstack::cli
