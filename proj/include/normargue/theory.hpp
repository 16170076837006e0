// ============================================================================
// theory.hpp: knowledge base, theory-file loader and deontic rule schemes
// ============================================================================
//
// A theory file is line oriented; `#` at the start of a line or after
// whitespace begins a comment.
//
//   AGENTS: a, b, c
//   PREMISE axiom <id>: <formula>          strict knowledge
//   PREMISE prem <id>: <formula>           defeasible knowledge
//   RULE strict <id>: <f1>; <f2> |- <g>
//   RULE defeasible <id>: <f1> |~ <g>
//   CONTRARY: <formula> ~ <formula>        either side may be @rule
//   SCHEME fcp|owp|weak_closure|k_truth on|off
//   POSITION <kind>(<holder>,<counterparty>) [<id>]: <formula> [axiom|prem]
//   OPTION weak_mode on|off
//   OPTION max_depth <n>
//   OPTION rebut|undermine universal|rule_based|premise_based
//   OPTION undercut none|universal|rule_based|premise_based
//
// The separators `|-` and `|~` are taken literally, so a disjunction with a
// negated right side is written `p | ~q` inside rules.
// ============================================================================

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normargue/config.hpp"
#include "normargue/error.hpp"
#include "normargue/formula.hpp"

namespace normargue {

enum class PremiseStrength { Axiom, Ordinary };
enum class RuleKind { Strict, Defeasible };

struct Premise {
  std::string id;
  Formula formula;
  PremiseStrength strength = PremiseStrength::Axiom;
  SourceLocation where;
};

struct Rule {
  std::string id;
  std::vector<Formula> antecedents;
  Formula consequent;
  RuleKind kind = RuleKind::Defeasible;
  SourceLocation where;
  // Name of the scheme that generated the rule; empty for declared rules.
  std::string scheme;
};

struct SchemeToggles {
  bool fcp = true;
  bool owp = true;
  bool weak_closure = false;
  bool k_truth = false;

  bool any() const noexcept { return fcp || owp || weak_closure || k_truth; }
  friend bool operator==(const SchemeToggles&, const SchemeToggles&) = default;
};

struct Theory {
  std::vector<AgentId> agents;
  std::vector<Premise> premises;
  std::vector<Rule> rules;
  ContraryTable contraries;
  SchemeToggles schemes;
  bool weak_mode = false;
  int max_depth = 3;
  DefeatConfig defeat;
  // Non-fatal findings from validation, e.g. miswired normative positions.
  std::vector<std::string> warnings;
  // Cleared by instantiate_schemes when max_depth rounds did not reach a fixpoint.
  bool schemes_saturated = true;

  const Premise* find_premise(std::string_view id) const;
  const Rule* find_rule(std::string_view id) const;
  std::size_t generated_rule_count() const;
};

struct LoadOptions {
  // Override the corresponding OPTION lines of the file.
  std::optional<bool> weak_mode;
  std::optional<int> max_depth;
};

// Parses and validates a theory; every formula is normalized under the final
// weak_mode. Throws Error with kind Syntax, UnknownOperator, UnknownAgent,
// DuplicateId or DanglingRuleAtom and the offending line and column.
//
// Rule atoms of the form <scheme>#<k> may name rules that only exist after
// instantiate_schemes; check_rule_atoms() verifies them afterwards.
Theory load_theory(std::string_view text, const LoadOptions& options = {});
Theory load_theory_file(const std::filesystem::path& path, const LoadOptions& options = {});

// Throws DanglingRuleAtom when a rule atom anywhere in the theory does not
// name a defeasible rule.
void check_rule_atoms(const Theory& t);

// Extends the theory with ground instances of the enabled schemes, matched
// against the subformulas already present (never inventing atoms):
//   fcp           P_a f, [](g -> f)  =>  P_a g
//                 P_a f              =>  P_a (f & h)   when <>(f & h) occurs
//   owp           P_a f, O_a ~g      =>  [](f -> ~g)
//                 O_a ~g, <>(f & g)  =>  ~P_a (f & g)
//   weak_closure  P_a f, [](f -> g)  =>  P_a g
//   k_truth       K_a f              ->  f            (strict)
// Rounds repeat until nothing new appears or max_depth rounds have run.
// Generated ids are <scheme>#<k>, numbered in generation order.
Theory instantiate_schemes(Theory t);

bool contrary(const Formula& f, const Formula& g, const Theory& t);

const char* to_string(PremiseStrength s);
const char* to_string(RuleKind k);

}  // namespace normargue
