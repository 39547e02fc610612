// verify <suite> [options]: run checks and write a JSON or text report.
// Exit status: 0 all pass, 1 some check failed, 2 usage error, 3 I/O error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hv/verify.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

hv::RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot read config " + path);
    hv::json j;
    try {
        in >> j;
    } catch (const hv::json::exception& e) {
        throw hv::DomainError(std::string("bad config: ") + e.what());
    }
    hv::RunConfig cfg;
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
    if (j.contains("precision")) cfg.precision_bits = j["precision"].get<int>();
    if (j.contains("m")) cfg.m = j["m"].get<int>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("out")) cfg.output_path = j["out"].get<std::string>();
    if (j.contains("sextic")) cfg.sextic = hv::parse_coefficients(j["sextic"].get<std::string>());
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Run verification suites"};
    std::string suite, config_path, sextic, format, out;
    std::uint64_t seed = 0;
    int trials = 0, precision = 0, m = 0;
    app.add_option("suite", suite, "moment, exotic, appendix, trope, kummer, c4c6 or all")->required();
    auto* o_seed = app.add_option("--seed", seed, "random seed");
    auto* o_trials = app.add_option("--trials", trials, "random cases per check")->check(CLI::PositiveNumber);
    auto* o_prec = app.add_option("--precision", precision, "working precision in bits")->check(CLI::Range(64, 1 << 16));
    auto* o_m = app.add_option("--m", m, "extra odd degree for the moment suite");
    auto* o_sextic = app.add_option("--sextic", sextic, "c0,c1,...,c6");
    auto* o_format = app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    auto* o_out = app.add_option("--out", out, "report path (default stdout)");
    app.add_option("--config", config_path, "JSON config; flags override it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    hv::RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = load_config(config_path);
        if (*o_seed) cfg.seed = seed;
        if (*o_trials) cfg.trials = trials;
        if (*o_prec) cfg.precision_bits = precision;
        if (*o_m) cfg.m = m;
        if (*o_sextic) cfg.sextic = hv::parse_coefficients(sextic);
        if (*o_format) cfg.format = format;
        if (*o_out) cfg.output_path = out;
        cfg.suites = {suite};
        hv::expand_suites(cfg.suites);
        if (cfg.format != "json" && cfg.format != "text") throw hv::DomainError("format must be json or text");
        if (cfg.m && (*cfg.m < 1 || *cfg.m % 2 == 0)) throw hv::DomainError("--m must be a positive odd integer");
    } catch (const std::ios_base::failure& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitUsage;
    }

    auto report = hv::run(cfg);
    std::string body = cfg.format == "json" ? hv::to_json(report).dump(2) + "\n" : hv::to_text(report);
    if (cfg.output_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(cfg.output_path, std::ios::binary);
        if (!(f << body)) {
            std::cerr << "verify: cannot write " << cfg.output_path << "\n";
            return kExitIo;
        }
    }
    return report.passed() ? 0 : kExitFail;
}
