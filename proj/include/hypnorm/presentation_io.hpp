#ifndef HYPNORM_PRESENTATION_IO_HPP_
#define HYPNORM_PRESENTATION_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "hypnorm/group.hpp"

namespace hypnorm {

  // Line-based presentation files:
  //
  //   # comment
  //   generators: ab
  //   relators: abAB,cdCD
  //   strategy: free|dehn
  //   delta: 0.0
  //
  // `relators` and `delta` are optional.
  GroupPresentation parse_presentation(std::string_view text);
  std::string       format_presentation(GroupPresentation const& p);

  // "F1", "F2", "F3" and "surface2"; nullopt for any other name.
  std::optional<GroupPresentation> builtin_presentation(std::string_view name);

  // Built-in name first, otherwise a path to a presentation file.
  GroupPresentation load_presentation(std::string const& source);

}  // namespace hypnorm

#endif  // HYPNORM_PRESENTATION_IO_HPP_
