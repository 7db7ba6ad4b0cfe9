#ifndef GGPINT_SELFTEST_HPP
#define GGPINT_SELFTEST_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ggpint {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full acceptance grid (exact checks, tolerance 0) and returns
/// one result per criterion. Progress lines go to `out` when non-null.
std::vector<CriterionResult> run_acceptance(std::ostream* out, uint64_t seed = 2024);

bool acceptance_passed(const std::vector<CriterionResult>& rs);

}  // namespace ggpint

#endif
