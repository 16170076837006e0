#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "normargue/arguments.hpp"
#include "normargue/semantics.hpp"
#include "normargue/theory.hpp"

namespace normargue {

enum class Semantics { Stable, Grounded };

struct QueryVerdict {
  std::string text;
  Formula formula;
  bool credulous = false;
  bool skeptical = false;
};

struct RunReport {
  std::size_t agents = 0;
  std::size_t premises = 0;
  std::size_t rules = 0;
  std::size_t generated_rules = 0;
  std::size_t contraries = 0;
  bool schemes_saturated = true;
  std::vector<std::string> warnings;

  ArgumentSet arguments;
  ArgumentationFramework framework;
  Semantics semantics = Semantics::Stable;
  std::vector<Extension> extensions;
  std::vector<QueryVerdict> queries;
};

// Instantiates schemes, builds arguments and defeats, and evaluates the
// queries under the chosen semantics. Queries are parsed and normalized with
// the theory's weak_mode.
RunReport run_pipeline(const Theory& loaded, const std::vector<std::string>& queries = {},
                       Semantics semantics = Semantics::Stable);

// Human-readable argument label: premise or rule id, with `*` on premises.
std::string argument_label(const Argument& a);

nlohmann::json to_json(const RunReport& report);
std::string to_text(const RunReport& report, bool color);
std::string to_dot(const RunReport& report);

// Graph-only export and its inverse.
nlohmann::json graph_to_json(const ArgumentSet& args, const ArgumentationFramework& af);
ArgumentationFramework af_from_json(const nlohmann::json& j);

}  // namespace normargue
