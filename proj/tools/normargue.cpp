// normargue: load a theory file, build the argumentation framework and report
// extensions, acceptance verdicts or the argument graph.
//
// Exit codes: 0 ok, 1 unexpected failure, 2 parse or validation error,
// 3 framework too large for --oracle, 4 solver and oracle disagree.

#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "normargue/report.hpp"

namespace {

using namespace normargue;

struct Flags {
  std::string path;
  bool json = false;
  std::vector<std::string> queries;
  std::string semantics = "stable";
  bool oracle = false;
  std::optional<int> max_depth;
  bool undercut_gated = false;
  bool weak_mode = false;
  std::string format = "dot";
};

bool use_color() {
  const char* env = std::getenv("NORMARGUE_COLOR");
  if (env && std::string(env) == "0") return false;
  return isatty(STDOUT_FILENO) != 0;
}

Theory load(const Flags& f) {
  LoadOptions opts;
  if (f.weak_mode) opts.weak_mode = true;
  opts.max_depth = f.max_depth;
  Theory t = load_theory_file(f.path, opts);
  if (f.undercut_gated) t.defeat.undercut = Ordering::RuleBased;
  return t;
}

int cmd_run(const Flags& f) {
  Theory t = load(f);
  auto semantics = f.semantics == "grounded" ? Semantics::Grounded : Semantics::Stable;
  RunReport report = run_pipeline(t, f.queries, semantics);
  if (f.oracle) {
    auto expected = brute_force_stable(report.framework);
    auto got = semantics == Semantics::Stable ? report.extensions : stable_extensions(report.framework);
    if (expected != got) {
      std::cerr << "error: solver and brute-force oracle disagree (" << got.size() << " vs "
                << expected.size() << " stable extensions)\n";
      return 4;
    }
  }
  if (f.json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << to_text(report, use_color());
  }
  return 0;
}

int cmd_export(const Flags& f) {
  RunReport report = run_pipeline(load(f));
  if (f.format == "json") {
    std::cout << graph_to_json(report.arguments, report.framework).dump(2) << "\n";
  } else {
    std::cout << to_dot(report);
  }
  return 0;
}

int cmd_check(const Flags& f) {
  Theory t = instantiate_schemes(load(f));
  check_rule_atoms(t);
  for (const auto& w : t.warnings) std::cout << "warning: " << w << "\n";
  std::cout << "ok: " << t.premises.size() << " premises, " << t.rules.size() << " rules ("
            << t.generated_rule_count() << " generated)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structured argumentation over a modal deontic language"};
  app.require_subcommand(1);
  Flags flags;

  auto common = [&](CLI::App* sub) {
    sub->add_option("theory", flags.path, "Theory file")->required()->check(CLI::ExistingFile);
    sub->add_option("--max-depth", flags.max_depth, "Maximum rule-chain depth")->check(CLI::PositiveNumber);
    sub->add_flag("--undercut-gated", flags.undercut_gated, "Gate undercuts by the rule-based ordering");
    sub->add_flag("--weak-mode", flags.weak_mode, "Read P_a f as ~O_a ~f");
  };

  auto* run = app.add_subcommand("run", "Compute extensions and acceptance");
  common(run);
  run->add_flag("--json", flags.json, "Print the report as JSON");
  run->add_option("--query", flags.queries, "Conclusion to test (repeatable)");
  run->add_option("--semantics", flags.semantics, "stable or grounded")
      ->check(CLI::IsMember({"stable", "grounded"}));
  run->add_flag("--oracle", flags.oracle, "Cross-check against brute-force enumeration");

  auto* exp = app.add_subcommand("export", "Print the argument graph");
  common(exp);
  exp->add_option("--format", flags.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* check = app.add_subcommand("check", "Validate a theory file");
  common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (run->parsed()) return cmd_run(flags);
    if (exp->parsed()) return cmd_export(flags);
    return cmd_check(flags);
  } catch (const Error& e) {
    std::cerr << flags.path << ": error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return e.kind() == ErrorKind::TooLarge ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
