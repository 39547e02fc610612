// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hv/verify.hpp"

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Two full runs with the same seed must produce byte-identical JSON.
bool deterministic_report(std::string& detail) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "hv_acceptance";
    fs::create_directories(dir);
    fs::path a = dir / "run_a.json", b = dir / "run_b.json";
    const std::string base = std::string(VERIFY_EXE) + " all --seed 7 --format json --out ";
    int ra = std::system((base + a.string() + " >/dev/null 2>&1").c_str());
    int rb = std::system((base + b.string() + " >/dev/null 2>&1").c_str());
    std::string sa = slurp(a), sb = slurp(b);
    detail = "bytes=" + std::to_string(sa.size()) + " status=" + std::to_string(ra) + "," + std::to_string(rb);
    return !sa.empty() && sa == sb && ra == rb;
}

}  // namespace

int main() {
    int failed = 0;
    hv::RunConfig cfg;
    for (const auto& c : hv::criteria()) {
        auto r = hv::run_criterion(c.id, cfg);
        failed += !r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " " << r.suite << "/" << r.name << " "
                  << r.witness.dump() << "\n";
    }
    std::string detail;
    bool det = deterministic_report(detail);
    failed += !det;
    std::cout << (det ? "PASS" : "FAIL") << " criterion 16 verify/deterministic_json " << detail << "\n";
    std::cout << (16 - failed) << "/16 criteria passed\n";
    return failed == 0 ? 0 : 1;
}
