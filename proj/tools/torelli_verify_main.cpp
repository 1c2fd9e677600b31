// Command-line front end for the Torelli verification library. Talks to the
// core exclusively through the C API in torelli.h.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "torelli.h"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_inconclusive = 3;

// line-oriented key=value configuration with # comments; flags override
std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> out;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot read config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config", "line " + std::to_string(lineno) + " is not key=value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

struct Common {
    std::string config_path;
    long long budget = 0;     // 0 = library default
    double time_cap = 0.0;
    bool mirror = false;
};

void apply_config(const std::map<std::string, std::string>& cfg, Common& c, const CLI::App* cmd) {
    auto unset = [&](const std::string& flag) {
        const CLI::Option* o = cmd->get_option_no_throw(flag);
        return o == nullptr || o->count() == 0;
    };
    if (cfg.count("budget") && unset("--budget")) c.budget = std::stoll(cfg.at("budget"));
    if (cfg.count("time-cap") && unset("--time-cap")) c.time_cap = std::stod(cfg.at("time-cap"));
    if (cfg.count("mirror-twists") && unset("--mirror-twists"))
        c.mirror = cfg.at("mirror-twists") == "true" || cfg.at("mirror-twists") == "1";
}

int report_error(torelli_status st) {
    std::cerr << "error: " << torelli_last_error() << "\n";
    switch (st) {
        case TORELLI_E_USAGE:
        case TORELLI_E_PARAMS: return exit_usage;
        default: return exit_fail;
    }
}

int verdict_code(const std::string& verdict) {
    if (verdict == "pass") return exit_pass;
    if (verdict == "inconclusive") return exit_inconclusive;
    return exit_fail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification certificates for Torelli-group propositions"};
    app.set_version_flag("--version", std::string(torelli_version()));
    app.require_subcommand(0, 1);

    Common common;

    // --- verify ------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run one proposition verifier");
    std::string proposition, surface, json_path;
    int genus = 0, k = 0;
    verify->add_option("proposition", proposition, "proposition id")->required();
    verify->add_option("--genus", genus, "surface genus (g >= 3)");
    verify->add_option("--k", k, "bounding-pair genus (1 <= k < g-1)");
    verify->add_option("--surface", surface, "closed|punctured|bordered");
    verify->add_option("--budget", common.budget, "orbit budget (vectors examined)");
    verify->add_option("--time-cap", common.time_cap, "soft wall-clock cap in seconds");
    verify->add_option("--json", json_path, "write the certificate to this path");
    verify->add_flag("--mirror-twists", common.mirror, "invert all seven lantern twists");
    verify->add_option("--config", common.config_path, "key=value configuration file");

    // --- sweep -------------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "run all applicable parameter combinations");
    int gmin = 3, gmax = 4, fixed_k = 0;
    std::string kinds = "closed,punctured,bordered", props, out_dir = "certificates";
    sweep->add_option("--gmin", gmin, "smallest genus")->required();
    sweep->add_option("--gmax", gmax, "largest genus")->required();
    sweep->add_option("--kinds", kinds, "comma-separated surface kinds");
    sweep->add_option("--props", props, "comma-separated proposition ids (default: all)");
    sweep->add_option("--k", fixed_k, "pin k instead of sweeping all valid values");
    sweep->add_option("--out", out_dir, "directory for certificate files");
    sweep->add_option("--budget", common.budget, "orbit budget (vectors examined)");
    sweep->add_option("--time-cap", common.time_cap, "soft wall-clock cap in seconds");
    sweep->add_option("--config", common.config_path, "key=value configuration file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            if (!common.config_path.empty()) {
                const auto cfg = read_config(common.config_path);
                apply_config(cfg, common, verify);
            }
            torelli_cert* cert = nullptr;
            const torelli_status st =
                torelli_run(proposition.c_str(), genus, k, surface.empty() ? nullptr : surface.c_str(),
                            common.budget, common.time_cap, common.mirror ? 1 : 0, &cert);
            if (st != TORELLI_OK) return report_error(st);
            std::cout << torelli_cert_json(cert);
            std::cerr << proposition << ": " << torelli_cert_verdict(cert) << " ("
                      << torelli_cert_elapsed_ms(cert) << " ms)\n";
            int code = verdict_code(torelli_cert_verdict(cert));
            if (!json_path.empty()) {
                const torelli_status wst = torelli_cert_write(cert, json_path.c_str());
                if (wst != TORELLI_OK) code = report_error(wst);
            }
            torelli_cert_free(cert);
            return code;
        }

        if (sweep->parsed()) {
            if (!common.config_path.empty()) {
                const auto cfg = read_config(common.config_path);
                apply_config(cfg, common, sweep);
                if (cfg.count("out") && sweep->get_option("--out")->count() == 0) out_dir = cfg.at("out");
                if (cfg.count("kinds") && sweep->get_option("--kinds")->count() == 0) kinds = cfg.at("kinds");
            }
            torelli_sweep_result* result = nullptr;
            const torelli_status st =
                torelli_sweep(gmin, gmax, kinds.c_str(), props.empty() ? nullptr : props.c_str(), fixed_k,
                              common.budget, common.time_cap, &result);
            if (st != TORELLI_OK) return report_error(st);

            std::error_code ec;
            std::filesystem::create_directories(out_dir, ec);
            int code = exit_pass;
            for (size_t i = 0; i < torelli_sweep_count(result); ++i) {
                const std::string path = out_dir + "/" + torelli_sweep_filename(result, i);
                const torelli_status wst = torelli_cert_write(torelli_sweep_cert(result, i), path.c_str());
                if (wst != TORELLI_OK) {
                    code = report_error(wst);
                    break;
                }
            }
            std::cout << torelli_sweep_summary(result);
            if (code == exit_pass) {
                if (torelli_sweep_failed(result) > 0)
                    code = exit_fail;
                else if (torelli_sweep_inconclusive(result) > 0)
                    code = exit_inconclusive;
            }
            torelli_sweep_free(result);
            return code;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    std::cout << app.help();
    return exit_usage;
}
