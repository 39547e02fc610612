#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "hv/verify.hpp"

using namespace hv;

namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "hv_test_verify";
    fs::create_directories(dir);
    return dir / name;
}

int exit_code(const std::string& command) {
    int status = std::system((command + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const std::string kVerify = VERIFY_EXE;
const std::string kPlot = PLOT_EXE;

}  // namespace

TEST(Library, CriteriaTable) {
    const auto& all = criteria();
    ASSERT_EQ(all.size(), 15u);
    for (std::size_t k = 0; k < all.size(); ++k) {
        EXPECT_EQ(all[k].id, static_cast<int>(k) + 1);
        EXPECT_NE(std::find(suite_names().begin(), suite_names().end(), all[k].suite), suite_names().end());
    }
    EXPECT_THROW(run_criterion(16, RunConfig{}), DomainError);
}

TEST(Library, ExpandSuites) {
    EXPECT_EQ(expand_suites({"all"}).size(), suite_names().size());
    EXPECT_EQ(expand_suites({"kummer"}), std::set<std::string>{"kummer"});
    EXPECT_THROW(expand_suites({"nope"}), DomainError);
}

TEST(Library, ParseCoefficients) {
    auto p = parse_coefficients("1,0,-2/4,3");
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(p.coeff(2), ExactScalar(mpq_class(-1, 2)));
    EXPECT_THROW(parse_coefficients("1,x"), DomainError);
}

TEST(Library, ReportShape) {
    RunConfig cfg;
    cfg.suites = {"kummer", "exotic"};
    auto rep = run(cfg);
    ASSERT_EQ(rep.results.size(), 2u);
    EXPECT_EQ(rep.results[0].suite, "exotic");
    EXPECT_EQ(rep.results[1].suite, "kummer");
    EXPECT_TRUE(rep.passed());
    json j = to_json(rep);
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["summary"]["passed"], 2);
    for (const auto& r : j["results"]) {
        EXPECT_FALSE(r.contains("wall_time_ms"));
        EXPECT_FALSE(r["anchor"].get<std::string>().empty());
    }
    EXPECT_NE(to_text(rep).find("2/2 passed"), std::string::npos);
}

TEST(Library, SelectedMAddsAResult) {
    RunConfig cfg;
    cfg.suites = {"moment"};
    cfg.m = 3;
    cfg.trials = 20;
    auto rep = run(cfg);
    const auto& last = rep.results.back();
    EXPECT_EQ(last.name, "selected_m");
    EXPECT_TRUE(last.pass);
    // the transvectant is 8 times the coefficient formula, whose ratio is 3/4
    EXPECT_EQ(last.witness["transvectant_det_over_discriminant"], "48");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(exit_code(kVerify + " kummer"), 0);
    EXPECT_EQ(exit_code(kVerify + " nope"), 2);
    EXPECT_EQ(exit_code(kVerify + " kummer --format yaml"), 2);
    EXPECT_EQ(exit_code(kVerify + " moment --m 4"), 2);
    EXPECT_EQ(exit_code(kVerify + " kummer --out /nonexistent/dir/report.json"), 3);
    EXPECT_EQ(exit_code(kVerify + " kummer --config /nonexistent/config.json"), 3);
}

TEST(Cli, FailingSuiteExitsOne) {
    // The trope-sextic criterion carries a known failing clause.
    EXPECT_EQ(exit_code(kVerify + " trope"), 1);
}

TEST(Cli, JsonIsDeterministic) {
    auto a = scratch("a.json"), b = scratch("b.json");
    ASSERT_EQ(exit_code(kVerify + " moment --seed 11 --trials 20 --out " + a.string()), 0);
    ASSERT_EQ(exit_code(kVerify + " moment --seed 11 --trials 20 --out " + b.string()), 0);
    std::string sa = slurp(a);
    EXPECT_FALSE(sa.empty());
    EXPECT_EQ(sa, slurp(b));
    json j = json::parse(sa);
    EXPECT_EQ(j["config"]["seed"], 11);
}

TEST(Cli, FlagsOverrideConfigFile) {
    auto cfg = scratch("config.json"), out = scratch("override.json");
    std::ofstream(cfg) << R"({"seed": 3, "trials": 10, "format": "text"})";
    ASSERT_EQ(exit_code(kVerify + " kummer --config " + cfg.string() + " --seed 5 --format json --out " +
                        out.string()),
              0);
    json j = json::parse(slurp(out));
    EXPECT_EQ(j["config"]["seed"], 5);
    EXPECT_EQ(j["config"]["trials"], 10);
}

TEST(Cli, TextFormat) {
    auto out = scratch("report.txt");
    ASSERT_EQ(exit_code(kVerify + " kummer --format text --out " + out.string()), 0);
    std::string s = slurp(out);
    EXPECT_EQ(s.rfind("PASS", 0), 0u);
    EXPECT_NE(s.find("1/1 passed"), std::string::npos);
}

TEST(Plot, WritesSvg) {
    for (std::string curve : {"conic", "sextic", "both"}) {
        auto out = scratch("plot_" + curve + ".svg");
        ASSERT_EQ(exit_code(kPlot + " --sextic 1,0,-3,2,0,1,1 --curve " + curve + " --out " + out.string()), 0);
        std::string s = slurp(out);
        EXPECT_NE(s.find("<svg"), std::string::npos);
        EXPECT_NE(s.find("<path"), std::string::npos);
    }
}

TEST(Plot, Errors) {
    EXPECT_EQ(exit_code(kPlot + " --curve conic"), 2);
    EXPECT_EQ(exit_code(kPlot + " --curve circle --out x.svg"), 2);
    EXPECT_EQ(exit_code(kPlot + " --sextic 1,0,0,0,0,0,1 --curve conic --out /nonexistent/dir/x.svg"), 3);
}
