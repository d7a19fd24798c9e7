#pragma once

#include "berezin/chain.hpp"
#include "berezin/spectrum.hpp"

#include <json.hpp>

#include <string>

namespace berezin {

inline constexpr const char* kToolVersion = "0.1.0";

// Exact values always travel as "p/q" strings; JSON numbers are reserved
// for genuinely floating quantities.
nlohmann::json spectrum_to_json(const SpectrumTable& table, bool includeFloat);
SpectrumTable spectrum_table_from_json(const nlohmann::json& j);
std::string spectrum_to_csv(const SpectrumTable& table, bool includeFloat);

nlohmann::json gap_estimate_to_json(const GapEstimate& est);

nlohmann::json envelope(const std::string& command, nlohmann::json parameters,
                        nlohmann::json results);

// 15 significant digits, the precision the CLI promises for floats.
std::string format_float(double v);

}
