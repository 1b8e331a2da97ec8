// Acceptance suites: one PASS/FAIL line per criterion, checks indented below.
//   acceptance            all criteria
//   acceptance 3 7        selected criteria
//   acceptance shape      supplementary shape checks
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "porism/verify.hpp"

namespace {

void print(const porism::verify::Report& r, double seconds) {
    std::printf("%s criterion %s: %s (%.2fs)\n", r.pass() ? "PASS" : "FAIL",
                r.id ? std::to_string(r.id).c_str() : "shape", r.title.c_str(), seconds);
    for (const auto& c : r.checks)
        std::printf("    %s %s value=%.6g bound=%.6g\n", c.pass ? "ok  " : "FAIL", c.name.c_str(), c.value, c.bound);
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty())
        for (int id : porism::verify::criterion_ids()) args.push_back(std::to_string(id));
    bool ok = true;
    for (const auto& a : args) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = a == "shape" ? porism::verify::run_shape_checks() : porism::verify::run_criterion(std::stoi(a));
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        print(r, dt.count());
        ok = ok && r.pass();
    }
    std::fflush(stdout);
    return ok ? 0 : 1;
}
