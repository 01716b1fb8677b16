#ifndef HYPNORM_VERIFY_HPP_
#define HYPNORM_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypnorm/bound.hpp"
#include "hypnorm/metric.hpp"

namespace hypnorm {

  struct FamilyResult {
    enum class Outcome { pass, fail, skip };

    std::string name;
    Outcome     outcome;
    std::size_t cases    = 0;
    std::size_t failures = 0;
    // skip reason, or the first failing case
    std::string detail;
  };

  struct SuiteConfig {
    std::uint64_t                         seed = 0;
    std::size_t                           N    = 10;
    std::optional<LocalGeodesicConstants> constants;
  };

  // Runs every invariant family on the metric's presentation. Sample sizes
  // and word lengths are scaled to R_max for Dehn presentations so that all
  // lengths queried stay within the ball limit. Deterministic in the seed.
  std::vector<FamilyResult> run_invariant_suites(Metric const&      metric,
                                                 SuiteConfig const& config);

  // "PASS <name> <cases>", "FAIL <name> <cases> failures=<n> first=<case>" or
  // "SKIP <name> <reason>".
  std::string format_family(FamilyResult const& r);

}  // namespace hypnorm

#endif  // HYPNORM_VERIFY_HPP_
