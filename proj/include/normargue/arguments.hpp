#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "normargue/config.hpp"
#include "normargue/formula.hpp"
#include "normargue/theory.hpp"

namespace normargue {

using ArgId = std::size_t;

struct Argument {
  ArgId id;
  // Premises used anywhere in the tree.
  std::set<std::string> premise_ids;
  std::vector<ArgId> sub_args;
  // Absent for premise-arguments.
  std::optional<std::string> top_rule;
  Formula conclusion;
  bool defeasible = false;
  bool plausible = false;
  int depth = 0;
  // Set for premise-arguments only.
  std::optional<std::string> premise;
  // Kind of the top rule; Strict for premise-arguments.
  RuleKind top_kind = RuleKind::Strict;
  // All arguments in the tree, this one included, ascending.
  std::vector<ArgId> subtree;

  bool is_premise() const noexcept { return premise.has_value(); }
};

struct ArgumentSet {
  std::vector<Argument> arguments;
  // Some rule could still fire beyond max_depth.
  bool truncated = false;

  std::size_t size() const noexcept { return arguments.size(); }
  const Argument& operator[](ArgId id) const { return arguments[id]; }
  // The premise-argument of a premise, if any.
  std::optional<ArgId> premise_argument(const std::string& premise_id) const;
};

// Premise-arguments first in file order, then breadth-first by depth; within a
// depth by rule order and then by the tuple of sub-argument ids. Each rule
// application is unique per (rule, sub-arguments).
ArgumentSet construct_arguments(const Theory& t);

enum class Strength { Strict, Defeasible };
enum class Firmness { Firm, Plausible };

std::pair<Strength, Firmness> classify(const Argument& a);

enum class Preference { Preferred, Dispreferred, Equal };

Preference compare(const Argument& a, const Argument& b, Ordering ordering);

const char* to_string(Strength s);
const char* to_string(Firmness f);
const char* to_string(Preference p);

}  // namespace normargue
