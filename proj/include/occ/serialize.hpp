#pragma once

#include <string>

#include <json.hpp>

#include "occ/build.hpp"
#include "occ/gw.hpp"

namespace occ {

nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

// k digits after the point, rounded half away from zero.
std::string decimal(const Rat& r, int k);

std::string csv_field(const std::string& s);
std::string class_str(const CurveClass& c);

// InvalidSpec on any schema violation.
RawSpec parse_fan_spec(const nlohmann::json& j);
RawSpec load_fan_spec(const std::string& path);
nlohmann::json fan_spec_to_json(const RawSpec& spec);

nlohmann::json report_to_json(const InvariantReport& r);

}  // namespace occ
