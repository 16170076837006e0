// ============================================================================
// semantics.hpp: defeats, abstract frameworks and extension semantics
// ============================================================================
//
// Each kernel has an OpenMP version and a `_serial` reference that returns
// identical output; tests compare the two.
// ============================================================================

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "normargue/arguments.hpp"
#include "normargue/config.hpp"
#include "normargue/theory.hpp"

namespace normargue {

enum class DefeatKind { Rebut, Undermine, Undercut };

const char* to_string(DefeatKind kind);

// Rebut: the attacked sub-argument. Undermine: a premise id. Undercut: a rule id.
using Locus = std::variant<ArgId, std::string>;

struct Defeat {
  ArgId attacker;
  ArgId target;
  DefeatKind kind;
  Locus locus;

  friend bool operator==(const Defeat&, const Defeat&) = default;
  friend auto operator<=>(const Defeat&, const Defeat&) = default;
};

std::string locus_text(const Locus& locus);

// Sorted and free of duplicates. A defeat on a sub-argument is repeated on
// every super-argument, with the same locus.
std::vector<Defeat> compute_defeats(const ArgumentSet& args, const Theory& t,
                                    const DefeatConfig& config);
std::vector<Defeat> compute_defeats_serial(const ArgumentSet& args, const Theory& t,
                                           const DefeatConfig& config);

class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;
  // Throws Error(InvalidArgument) for ids outside [0, n).
  ArgumentationFramework(std::size_t n, std::vector<Defeat> defeats);
  // Plain attack graph; each edge becomes an undercut with an empty locus.
  static ArgumentationFramework from_edges(std::size_t n,
                                           const std::vector<std::pair<ArgId, ArgId>>& edges);

  std::size_t size() const noexcept { return n_; }
  const std::vector<Defeat>& defeats() const noexcept { return defeats_; }
  // Distinct attackers / targets, ascending.
  const std::vector<ArgId>& attackers_of(ArgId a) const { return attackers_[a]; }
  const std::vector<ArgId>& targets_of(ArgId a) const { return targets_[a]; }
  bool attacks(ArgId a, ArgId b) const;

  friend bool operator==(const ArgumentationFramework& a, const ArgumentationFramework& b) {
    return a.n_ == b.n_ && a.defeats_ == b.defeats_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Defeat> defeats_;
  std::vector<std::vector<ArgId>> attackers_;
  std::vector<std::vector<ArgId>> targets_;
};

// Ascending member ids.
using Extension = std::vector<ArgId>;

// All stable extensions, sorted lexicographically by member sequence.
std::vector<Extension> stable_extensions(const ArgumentationFramework& af);
std::vector<Extension> stable_extensions_serial(const ArgumentationFramework& af);

Extension grounded_extension(const ArgumentationFramework& af);

bool verify_extension(const ArgumentationFramework& af, const Extension& s);

inline constexpr std::size_t kBruteForceLimit = 20;

// Exhaustive check of every subset; throws Error(TooLarge) above the limit.
std::vector<Extension> brute_force_stable(const ArgumentationFramework& af);

enum class AcceptanceMode { Credulous, Skeptical };

// Skeptical acceptance over zero extensions is false.
bool acceptance(const ArgumentSet& args, const std::vector<Extension>& extensions,
                const Formula& conclusion, AcceptanceMode mode);

}  // namespace normargue
