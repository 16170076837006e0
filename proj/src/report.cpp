#include "normargue/report.hpp"

#include <sstream>

namespace normargue {

RunReport run_pipeline(const Theory& loaded, const std::vector<std::string>& queries,
                       Semantics semantics) {
  Theory t = instantiate_schemes(loaded);
  check_rule_atoms(t);

  RunReport r;
  r.agents = t.agents.size();
  r.premises = t.premises.size();
  r.rules = t.rules.size();
  r.generated_rules = t.generated_rule_count();
  r.contraries = t.contraries.size();
  r.schemes_saturated = t.schemes_saturated;
  r.warnings = t.warnings;

  r.arguments = construct_arguments(t);
  r.framework = ArgumentationFramework(r.arguments.size(), compute_defeats(r.arguments, t, t.defeat));
  r.semantics = semantics;
  if (semantics == Semantics::Stable) {
    r.extensions = stable_extensions(r.framework);
  } else {
    r.extensions = {grounded_extension(r.framework)};
  }
  for (const auto& text : queries) {
    Formula f = parse(text, {.normalize = true, .weak_mode = t.weak_mode});
    r.queries.push_back({text, f,
                         acceptance(r.arguments, r.extensions, f, AcceptanceMode::Credulous),
                         acceptance(r.arguments, r.extensions, f, AcceptanceMode::Skeptical)});
  }
  return r;
}

std::string argument_label(const Argument& a) {
  if (a.premise) return *a.premise + "*";
  return *a.top_rule;
}

namespace {

nlohmann::json locus_json(const Locus& locus) {
  if (const auto* id = std::get_if<ArgId>(&locus)) return *id;
  return std::get<std::string>(locus);
}

nlohmann::json arguments_json(const ArgumentSet& args) {
  auto out = nlohmann::json::array();
  for (const auto& a : args.arguments) {
    auto [strength, firmness] = classify(a);
    out.push_back({
        {"id", a.id},
        {"label", argument_label(a)},
        {"conclusion", print(a.conclusion)},
        {"premise", a.premise ? nlohmann::json(*a.premise) : nlohmann::json(nullptr)},
        {"top_rule", a.top_rule ? nlohmann::json(*a.top_rule) : nlohmann::json(nullptr)},
        {"sub_args", a.sub_args},
        {"premises", a.premise_ids},
        {"strength", to_string(strength)},
        {"firmness", to_string(firmness)},
        {"depth", a.depth},
    });
  }
  return out;
}

nlohmann::json defeats_json(const ArgumentationFramework& af) {
  auto out = nlohmann::json::array();
  for (const auto& d : af.defeats()) {
    out.push_back({{"attacker", d.attacker},
                   {"target", d.target},
                   {"kind", to_string(d.kind)},
                   {"locus", locus_json(d.locus)}});
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

const char* edge_style(DefeatKind kind) {
  switch (kind) {
    case DefeatKind::Rebut: return "solid";
    case DefeatKind::Undermine: return "dashed";
    case DefeatKind::Undercut: return "dotted";
  }
  return "solid";
}

}  // namespace

nlohmann::json graph_to_json(const ArgumentSet& args, const ArgumentationFramework& af) {
  return {{"schema", 1}, {"arguments", arguments_json(args)}, {"defeats", defeats_json(af)}};
}

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j = graph_to_json(r.arguments, r.framework);
  j["theory"] = {{"agents", r.agents},
                 {"premises", r.premises},
                 {"rules", r.rules},
                 {"generated_rules", r.generated_rules},
                 {"contraries", r.contraries},
                 {"schemes_saturated", r.schemes_saturated}};
  j["warnings"] = r.warnings;
  j["truncated"] = r.arguments.truncated;
  j["semantics"] = r.semantics == Semantics::Stable ? "stable" : "grounded";
  j["extensions"] = r.extensions;
  auto queries = nlohmann::json::array();
  for (const auto& q : r.queries) {
    queries.push_back({{"query", q.text},
                       {"formula", print(q.formula)},
                       {"credulous", q.credulous},
                       {"skeptical", q.skeptical}});
  }
  j["queries"] = queries;
  return j;
}

ArgumentationFramework af_from_json(const nlohmann::json& j) {
  std::vector<Defeat> defeats;
  for (const auto& d : j.at("defeats")) {
    std::string kind = d.at("kind").get<std::string>();
    DefeatKind k = kind == "rebut" ? DefeatKind::Rebut
                   : kind == "undermine" ? DefeatKind::Undermine
                                         : DefeatKind::Undercut;
    const auto& l = d.at("locus");
    Locus locus = l.is_number() ? Locus(l.get<ArgId>()) : Locus(l.get<std::string>());
    defeats.push_back({d.at("attacker").get<ArgId>(), d.at("target").get<ArgId>(), k, locus});
  }
  return ArgumentationFramework(j.at("arguments").size(), std::move(defeats));
}

std::string to_text(const RunReport& r, bool color) {
  auto paint = [&](bool ok) -> std::string {
    std::string word = ok ? "true" : "false";
    if (!color) return word;
    return (ok ? "\033[32m" : "\033[31m") + word + "\033[0m";
  };
  std::ostringstream os;
  os << "theory: " << r.agents << " agents, " << r.premises << " premises, " << r.rules << " rules ("
     << r.generated_rules << " generated), " << r.contraries << " declared contraries\n";
  if (!r.schemes_saturated) os << "note: scheme instantiation stopped at max_depth\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";

  os << "arguments: " << r.arguments.size() << (r.arguments.truncated ? " (truncated at max_depth)" : "")
     << "\n";
  for (const auto& a : r.arguments.arguments) {
    auto [strength, firmness] = classify(a);
    os << "  " << a.id << "  " << argument_label(a) << "  [" << to_string(strength) << ", "
       << to_string(firmness) << "]  " << print(a.conclusion) << "\n";
  }
  os << "defeats: " << r.framework.defeats().size() << "\n";
  for (const auto& d : r.framework.defeats()) {
    os << "  " << d.attacker << " -> " << d.target << "  " << to_string(d.kind) << " at "
       << locus_text(d.locus) << "\n";
  }

  const char* name = r.semantics == Semantics::Stable ? "stable" : "grounded";
  if (r.extensions.empty()) {
    os << "no stable extension\n";
  }
  for (std::size_t i = 0; i < r.extensions.size(); ++i) {
    os << name << " extension " << i + 1 << ": {";
    for (std::size_t k = 0; k < r.extensions[i].size(); ++k) {
      os << (k ? ", " : "") << r.extensions[i][k];
    }
    os << "}\n";
    for (ArgId a : r.extensions[i]) {
      os << "  " << argument_label(r.arguments[a]) << ": " << print(r.arguments[a].conclusion) << "\n";
    }
  }
  for (const auto& q : r.queries) {
    os << "query " << print(q.formula) << ": credulous=" << paint(q.credulous)
       << " skeptical=" << paint(q.skeptical) << "\n";
  }
  return os.str();
}

std::string to_dot(const RunReport& r) {
  std::ostringstream os;
  os << "digraph arguments {\n  node [shape=box];\n";
  for (const auto& a : r.arguments.arguments) {
    os << "  a" << a.id << " [label=\"" << a.id << ": " << dot_escape(argument_label(a)) << "\\n"
       << dot_escape(print(a.conclusion)) << "\"];\n";
  }
  for (const auto& d : r.framework.defeats()) {
    os << "  a" << d.attacker << " -> a" << d.target << " [style=" << edge_style(d.kind) << ", label=\""
       << to_string(d.kind) << " " << dot_escape(locus_text(d.locus)) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace normargue
