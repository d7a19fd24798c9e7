#include "berezin/serialization.hpp"

#include <cstdio>
#include <stdexcept>

namespace berezin {

std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

nlohmann::json spectrum_to_json(const SpectrumTable& table, bool includeFloat) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : table.entries) {
        nlohmann::json row{{"J", e.J}, {"lambda", e.lambda.str()}, {"multiplicity", e.multiplicity}};
        if (includeFloat) row["lambda_float"] = e.lambda.to_double();
        entries.push_back(std::move(row));
    }
    return nlohmann::json{{"j", table.j.str()}, {"m", table.m.str()}, {"entries", std::move(entries)}};
}

SpectrumTable spectrum_table_from_json(const nlohmann::json& j) {
    SpectrumTable table;
    table.j = HalfInt::parse(j.at("j").get<std::string>());
    table.m = HalfInt::parse(j.at("m").get<std::string>());
    for (const auto& row : j.at("entries")) {
        SpectrumEntry e;
        e.J = row.at("J").get<int>();
        e.lambda = Rational::parse(row.at("lambda").get<std::string>());
        e.multiplicity = row.at("multiplicity").get<int>();
        table.entries.push_back(std::move(e));
    }
    return table;
}

std::string spectrum_to_csv(const SpectrumTable& table, bool includeFloat) {
    std::string out = includeFloat ? "J,lambda,multiplicity,lambda_float\n" : "J,lambda,multiplicity\n";
    for (const auto& e : table.entries) {
        out += std::to_string(e.J) + "," + e.lambda.str() + "," + std::to_string(e.multiplicity);
        if (includeFloat) out += "," + format_float(e.lambda.to_double());
        out += "\n";
    }
    return out;
}

nlohmann::json gap_estimate_to_json(const GapEstimate& est) {
    return nlohmann::json{{"lambda1Hat", est.lambda1Hat},
                          {"stdError", est.stdError},
                          {"acceptanceRate", est.acceptanceRate},
                          {"samples", est.samples}};
}

nlohmann::json envelope(const std::string& command, nlohmann::json parameters,
                        nlohmann::json results) {
    return nlohmann::json{{"command", command},
                          {"parameters", std::move(parameters)},
                          {"results", std::move(results)},
                          {"toolVersion", kToolVersion}};
}

}
