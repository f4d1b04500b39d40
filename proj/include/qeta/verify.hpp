#ifndef QETA_VERIFY_HPP
#define QETA_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace qeta {

/// One independent identity check; pure and safe to run concurrently.
struct Check {
  std::string label;
  std::function<bool()> run;
};

/// A theorem family: a named batch of checks reported as one line.
struct Family {
  std::string name;
  std::vector<Check> checks;
};

struct FamilyResult {
  std::string name;
  int total = 0;
  int failed = 0;
  std::vector<std::string> failures;  // labels of failing checks (capped)
};

/// The selectable verification suites.
const std::vector<std::string>& suite_names();

/// Builds the check families of one suite, bounded by maxdeg.
/// "all" concatenates every suite.
std::vector<Family> build_suite(const std::string& suite, int maxdeg);

/// Runs every check.  The parallel path distributes the flattened check
/// list over OpenMP threads; the serial path is the reference
/// implementation.  Results are aggregated in family order either way.
std::vector<FamilyResult> run_families(const std::vector<Family>& families,
                                       bool parallel);

}  // namespace qeta

#endif
