#ifndef HYPNORM_CLI_HPP_
#define HYPNORM_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypnorm/bound.hpp"

namespace hypnorm::cli {

  // Exit codes, stable across releases.
  enum ExitCode : int {
    kSuccess      = 0,
    kInputError   = 2,  // parse, configuration or resource errors
    kFiniteOrder  = 3,
    kDegenerate   = 4,  // certificate degenerate or iteration cap exceeded
    kVerifyFailed = 5,
  };

  enum class OutputMode { text, report };

  struct RunConfig {
    std::string                 group = "F2";
    std::size_t                 r_max = 8;
    std::size_t                 N     = 10;
    std::optional<std::string>  delta;
    std::optional<std::string>  constants;  // "k,lambda,eps"
    OutputMode                  mode = OutputMode::text;
    std::uint64_t               seed = 0;
  };

  // nullopt when neither --delta nor --constants was given.
  std::optional<LocalGeodesicConstants> resolve_constants(RunConfig const& config);

  int cmd_reduce(RunConfig const& config, std::string const& word_text,
                 std::ostream& out, std::ostream& err);
  int cmd_stable_norm(RunConfig const& config, std::string const& word_text,
                      std::ostream& out, std::ostream& err);
  int cmd_bound(RunConfig const& config, std::ostream& out, std::ostream& err);
  int cmd_verify(RunConfig const& config, std::ostream& out, std::ostream& err);

  // Full argument parsing and dispatch; args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace hypnorm::cli

#endif  // HYPNORM_CLI_HPP_
