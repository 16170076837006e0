#pragma once

#include <optional>
#include <string_view>

namespace normargue {

// Class-level argument orderings.
//   Universal     every argument ties with every other
//   RuleBased     strict arguments beat defeasible ones
//   PremiseBased  firm arguments beat plausible ones
enum class Ordering { Universal, RuleBased, PremiseBased };

const char* to_string(Ordering ordering);
std::optional<Ordering> ordering_from_string(std::string_view name);

// Which ordering gates each kind of attack. An unset undercut ordering makes
// undercutting preference-free.
struct DefeatConfig {
  Ordering rebut = Ordering::RuleBased;
  Ordering undermine = Ordering::PremiseBased;
  std::optional<Ordering> undercut;

  friend bool operator==(const DefeatConfig&, const DefeatConfig&) = default;
};

}  // namespace normargue
