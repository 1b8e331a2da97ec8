#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace porism::verify {

struct Check {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct Report {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    bool pass() const;
};

/// Criterion ids 1..11.
std::vector<int> criterion_ids();
std::string criterion_title(int id);
/// Runs one criterion. Exceptions inside a check are recorded as failures.
Report run_criterion(int id, std::uint64_t seed = 20240611);
std::vector<Report> run_all(std::uint64_t seed = 20240611);

/// One-sided shape checks that complement the criteria: C_1 convex for
/// a = 0.3 and a sign change of the turning angle along the sampled C_2 poles
/// for a = 0.9, with foci {0,0,0,a}.
Report run_shape_checks();

}  // namespace porism::verify
