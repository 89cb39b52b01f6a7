#pragma once

#include "contractad/graph.hpp"
#include "contractad/power_series.hpp"
#include "contractad/qpoly.hpp"
#include "contractad/young.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace contractad::cli {

enum ExitCode { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

// Environment variable holding the per-table memo cap (entries).
inline constexpr const char* kMemoLimitEnv = "CONTRACTAD_MEMO_LIMIT";

// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// K4, P7, C6, St5 (five leaves), K[2,2,1].
Graph parse_family_spec(const std::string& spec);
// "0-1,1-2,2-3"; the vertex count is one more than the largest label.
Graph parse_edge_list(const std::string& text);
// Text format when the content starts with "n=", graph6 otherwise.
Graph parse_graph_file_content(const std::string& content);

// Polynomials as {"half exponent": [num, den]}; numerators and denominators
// are JSON integers when they fit in 64 bits and decimal strings otherwise.
nlohmann::json to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);
// {"variable": "t", "order": N, "coefficients": [poly, ...]}
nlohmann::json to_json(const PowerSeries& s);
PowerSeries series_from_json(const nlohmann::json& j);
// {"degree": D, "terms": [{"z": n, "m": [parts], "coeff": poly}, ...]}
nlohmann::json to_json(const YoungSeries& y);
YoungSeries young_from_json(const nlohmann::json& j);

}  // namespace contractad::cli
