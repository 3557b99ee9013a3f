#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sncdp/setup_io.hpp"
#include "sncdp/snc_delpezzo.hpp"

namespace sncdp {

using Json = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "0.1.0";

// {"schema": 1, "engine_version", "command", "inputs"}; callers append the rest.
Json report_header(const std::string& command, Json inputs);

struct Evaluation {
  Json results;
  Json intermediates;
  Json checks;
};

// Runs the full genus-0 pipeline plus BPS data when the document declares a
// sheaf moduli space. Throws DomainError on inconsistent input.
Evaluation evaluate(const SetupDocument& doc);

Json classification_results(const Classification& c);

// Two-space indentation, trailing newline.
std::string dump_report(const Json& report);

}  // namespace sncdp
