#include "berezin/chain.hpp"
#include "berezin/parallel.hpp"
#include "berezin/serialization.hpp"
#include "berezin/spectrum.hpp"
#include "berezin/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using berezin::HalfInt;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitIo = 3;

// Spins arrive either as strings ("7/2", "3.5", "2") or as doubled integers
// through the --jj / --mm forms.
HalfInt resolve_spin(const std::string& text, std::optional<int> twice, const char* what) {
    if (twice && !text.empty())
        throw std::invalid_argument(std::string("give ") + what + " either as a value or as a twice-value, not both");
    if (twice) return HalfInt::from_twice(*twice);
    if (text.empty()) throw std::invalid_argument(std::string("missing ") + what);
    return HalfInt::parse(text);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(std::stoi(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

int cmd_spectrum(const std::string& jText, const std::string& mText, std::optional<int> jj,
                 std::optional<int> mm, const std::string& format, bool withFloat) {
    HalfInt j = resolve_spin(jText, jj, "--j");
    HalfInt m = resolve_spin(mText, mm, "--m");
    berezin::SpectrumTable table = berezin::spectrum(j, m);
    if (format == "csv") {
        std::cout << berezin::spectrum_to_csv(table, withFloat);
    } else {
        nlohmann::json params{{"j", j.str()}, {"m", m.str()}, {"float", withFloat}};
        std::cout << berezin::envelope("spectrum", params,
                                       berezin::spectrum_to_json(table, withFloat))
                  << "\n";
    }
    return 0;
}

int cmd_scan(const std::string& jMaxText, std::optional<int> jjMax, const std::string& dList,
             const std::string& format) {
    HalfInt jMax = resolve_spin(jMaxText, jjMax, "--j-max");
    if (jMax.twice() < 1 || jMax.twice() > 800)
        throw std::invalid_argument("--j-max must lie in [1/2, 400]");
    std::vector<int> ds = parse_int_list(dList);
    for (int d : ds)
        if (d < 0) throw std::invalid_argument("d must be nonnegative");

    // one fragment per spin; rows merge in spin order whatever the schedule
    const int tjMax = jMax.twice();
    std::vector<std::string> csvParts(tjMax + 1);
    std::vector<nlohmann::json> rowParts(tjMax + 1, nlohmann::json::array());
    berezin::parallel_for(1, tjMax + 1, [&](int tj) {
        berezin::SpectrumCalculator calc(HalfInt::from_twice(tj));
        for (int d : ds) {
            if (2 * d > tj) continue;
            HalfInt m = HalfInt::from_twice(tj - 2 * d);
            berezin::SpectrumTable table = calc.table(m);
            berezin::OscillationProfile profile = berezin::oscillation_profile(table);
            // vacuously true at 2j = 1, where no J >= 2 exists
            bool dominant = tj >= 2 ? berezin::dominance(table) : true;

            berezin::Rational best = table.entries[1].lambda;
            for (std::size_t i = 2; i < table.entries.size(); ++i)
                if (table.entries[i].lambda > best) best = table.entries[i].lambda;
            berezin::Rational gap = berezin::Rational(1) - best;

            auto joined = [](const std::vector<int>& v) {
                std::string s;
                for (std::size_t i = 0; i < v.size(); ++i)
                    s += (i ? ";" : "") + std::to_string(v[i]);
                return s;
            };
            csvParts[tj] += HalfInt::from_twice(tj).str() + "," + std::to_string(d) + "," +
                            gap.str() + "," + (dominant ? "true" : "false") + "," +
                            std::to_string(profile.minima.size()) + "," +
                            std::to_string(profile.maxima.size()) + "," + joined(profile.minima) +
                            "," + joined(profile.maxima) + "," +
                            (profile.plateaus.empty() ? "false" : "true") + "\n";
            rowParts[tj].push_back({{"j", HalfInt::from_twice(tj).str()},
                                    {"d", d},
                                    {"gap", gap.str()},
                                    {"dominant", dominant},
                                    {"minima", profile.minima},
                                    {"maxima", profile.maxima},
                                    {"plateaus", profile.plateaus}});
        }
    });

    if (format == "csv") {
        std::cout << "j,d,gap,dominant,n_minima,n_maxima,minima,maxima,plateau\n";
        for (const auto& part : csvParts) std::cout << part;
    } else {
        nlohmann::json rows = nlohmann::json::array();
        for (auto& part : rowParts)
            for (auto& row : part) rows.push_back(std::move(row));
        nlohmann::json params{{"jMax", jMax.str()}, {"dList", ds}};
        std::cout << berezin::envelope("scan", params, {{"rows", std::move(rows)}}) << "\n";
    }
    return 0;
}

int cmd_figure1(const std::string& jText, std::optional<int> jj, const std::string& dList,
                const std::string& outDir) {
    HalfInt j = resolve_spin(jText, jj, "--j");
    std::vector<int> ds = parse_int_list(dList);
    std::filesystem::path dir(outDir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);

    berezin::SpectrumCalculator calc(j);
    for (int d : ds) {
        if (2 * d > j.twice()) throw std::invalid_argument("d exceeds 2j");
        berezin::SpectrumTable table = calc.table(HalfInt::from_twice(j.twice() - 2 * d));

        std::string jName = j.str();
        for (auto& c : jName)
            if (c == '/') c = '_';
        std::filesystem::path file = dir / ("spectrum_j" + jName + "_d" + std::to_string(d) + ".csv");
        std::ofstream out(file);
        if (!out) {
            std::cerr << "cannot open " << file << " for writing\n";
            return kExitIo;
        }
        out << "J,lambda_exact,lambda_float\n";
        for (const auto& e : table.entries)
            out << e.J << "," << e.lambda.str() << "," << berezin::format_float(e.lambda.to_double())
                << "\n";
        if (!out.good()) {
            std::cerr << "write failed for " << file << "\n";
            return kExitIo;
        }
    }
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& jMaxText, std::optional<int> jjMax,
               const std::string& group) {
    std::optional<berezin::SuiteResult> result;
    if (suite == "exact") {
        HalfInt jMax = jMaxText.empty() && !jjMax ? HalfInt::from_int(100)
                                                  : resolve_spin(jMaxText, jjMax, "--j-max");
        result = berezin::verify_exact_identities(jMax.twice());
    } else if (suite == "funk-hecke") {
        HalfInt jMax = jMaxText.empty() && !jjMax ? HalfInt::from_int(15)
                                                  : resolve_spin(jMaxText, jjMax, "--j-max");
        result = berezin::verify_funk_hecke(jMax.twice(), 200);
    } else if (suite == "su2-characters") {
        HalfInt jMax = jMaxText.empty() && !jjMax ? HalfInt::from_int(5)
                                                  : resolve_spin(jMaxText, jjMax, "--j-max");
        result = berezin::verify_characters(jMax.twice());
    } else if (suite == "finite") {
        result = berezin::verify_finite(group);
    } else if (suite == "chain") {
        result = berezin::verify_chain();
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }

    nlohmann::json params{{"suite", suite}};
    if (!group.empty()) params["group"] = group;
    nlohmann::json results{{"pass", result->pass},
                           {"maxDeviation", result->maxDeviation},
                           {"failures", result->failures},
                           {"cases", result->cases}};
    std::cout << berezin::envelope("verify", params, std::move(results)) << "\n";
    return result->pass ? 0 : kExitVerifyFailed;
}

int cmd_chain(const std::string& jText, const std::string& mText, std::optional<int> jj,
              std::optional<int> mm, std::int64_t steps, std::uint64_t seed,
              std::optional<std::int64_t> burnIn, const std::string& exportPath) {
    berezin::ChainConfig config;
    config.j = resolve_spin(jText, jj, "--j");
    config.m = resolve_spin(mText, mm, "--m");
    config.steps = steps;
    config.burnIn = burnIn.value_or(steps / 100);
    config.seed = seed;

    std::ofstream exportFile;
    std::function<void(std::int64_t, const berezin::SpherePoint&)> observer;
    if (!exportPath.empty()) {
        exportFile.open(exportPath);
        if (!exportFile) {
            std::cerr << "cannot open " << exportPath << " for writing\n";
            return kExitIo;
        }
        exportFile << "step,x,y,z\n";
        observer = [&exportFile](std::int64_t step, const berezin::SpherePoint& p) {
            exportFile << step << "," << berezin::format_float(p.x) << ","
                       << berezin::format_float(p.y) << "," << berezin::format_float(p.z) << "\n";
        };
    }

    berezin::GapEstimate est = berezin::estimate_lambda1(config, observer);
    if (!exportPath.empty() && !exportFile.good()) {
        std::cerr << "write failed for " << exportPath << "\n";
        return kExitIo;
    }

    nlohmann::json params{{"j", config.j.str()},
                          {"m", config.m.str()},
                          {"steps", config.steps},
                          {"burnIn", config.burnIn},
                          {"seed", config.seed}};
    std::cout << berezin::envelope("chain", params, berezin::gap_estimate_to_json(est)) << "\n";
    return 0;
}

}

int main(int argc, char** argv) {
    CLI::App app{"Exact and numerical spectra of coherent-state measurement transforms"};
    app.require_subcommand(1);

    std::string jText, mText, jMaxText, format = "json", dList = "1", outDir = ".";
    std::string suite, group, exportPath;
    std::optional<int> jj, mm, jjMax;
    std::optional<std::int64_t> burnIn;
    bool withFloat = false;
    std::int64_t steps = 100000;
    std::uint64_t seed = 0;

    auto* spectrum = app.add_subcommand("spectrum", "Exact spectrum table for one (j, m)");
    spectrum->add_option("--j", jText, "spin j (\"7/2\", \"3.5\", \"2\")");
    spectrum->add_option("--m", mText, "weight m");
    spectrum->add_option("--jj", jj, "spin as twice-value");
    spectrum->add_option("--mm", mm, "weight as twice-value");
    spectrum->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    spectrum->add_flag("--float", withFloat, "include 15-digit decimal approximations");

    auto* scan = app.add_subcommand("scan", "Gap, dominance and oscillation scan over j");
    scan->add_option("--j-max", jMaxText, "largest spin");
    scan->add_option("--jj-max", jjMax, "largest spin as twice-value");
    scan->add_option("--d-list", dList, "comma-separated offsets d = j - m");
    scan->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* figure = app.add_subcommand("figure1", "Per-J eigenvalue CSV files for plotting");
    figure->add_option("--j", jText, "spin j");
    figure->add_option("--jj", jj, "spin as twice-value");
    figure->add_option("--d-list", dList, "comma-separated offsets d = j - m");
    figure->add_option("--out", outDir, "output directory");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"exact", "funk-hecke", "finite", "su2-characters", "chain"}));
    verify->add_option("--j-max", jMaxText, "largest spin for the spin-indexed suites");
    verify->add_option("--jj-max", jjMax, "largest spin as twice-value");
    verify->add_option("--group", group, "restrict the finite suite to one group");

    auto* chain = app.add_subcommand("chain", "Monte-Carlo estimate of the subleading eigenvalue");
    chain->add_option("--j", jText, "spin j");
    chain->add_option("--m", mText, "weight m");
    chain->add_option("--jj", jj, "spin as twice-value");
    chain->add_option("--mm", mm, "weight as twice-value");
    chain->add_option("--steps", steps, "chain length after burn-in");
    chain->add_option("--seed", seed, "RNG seed");
    chain->add_option("--burn-in", burnIn, "burn-in steps (default steps/100)");
    chain->add_option("--export", exportPath, "write the trajectory as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitBadArguments;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(jText, mText, jj, mm, format, withFloat);
        if (scan->parsed()) return cmd_scan(jMaxText, jjMax, dList, format);
        if (figure->parsed()) return cmd_figure1(jText, jj, dList, outDir);
        if (verify->parsed()) return cmd_verify(suite, jMaxText, jjMax, group);
        if (chain->parsed()) return cmd_chain(jText, mText, jj, mm, steps, seed, burnIn, exportPath);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitBadArguments;
}
