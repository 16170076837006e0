// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "normargue/hohfeld.hpp"
#include "normargue/semantics.hpp"
#include "support.hpp"

using namespace normargue;
using normargue::testing::fixture;

namespace {

struct Pipeline {
  Theory theory;
  ArgumentSet args;
  ArgumentationFramework af;
  std::vector<Extension> extensions;
};

std::vector<std::pair<ArgumentationFramework, Extension>> returned;

Pipeline run(const std::string& name) {
  Pipeline p;
  p.theory = instantiate_schemes(load_theory_file(fixture(name)));
  p.args = construct_arguments(p.theory);
  p.af = ArgumentationFramework(p.args.size(), compute_defeats(p.args, p.theory, p.theory.defeat));
  p.extensions = stable_extensions(p.af);
  for (const auto& e : p.extensions) returned.emplace_back(p.af, e);
  return p;
}

ArgId id_of(const ArgumentSet& args, const std::string& label) {
  for (const auto& a : args.arguments) {
    if ((a.premise && *a.premise == label) || (a.top_rule && *a.top_rule == label)) return a.id;
  }
  throw std::runtime_error("no argument " + label);
}

std::multiset<Formula> conclusions(const ArgumentSet& args, const Extension& e) {
  std::multiset<Formula> out;
  for (ArgId a : e) out.insert(args[a].conclusion);
  return out;
}

bool abortion_extension(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  auto p = run("abortion.naf");
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::multiset<Formula> expected;
  for (const char* l : {"A1", "A2", "A3", "A4", "B1", "D"}) expected.insert(p.args[id_of(p.args, l)].conclusion);
  detail = std::to_string(p.extensions.size()) + " extension(s), " + std::to_string(ms) + " ms";
  return p.extensions.size() == 1 && conclusions(p.args, p.extensions[0]) == expected && ms < 1000;
}

bool abortion_defeats(std::string& detail) {
  auto p = run("abortion.naf");
  const auto& a = p.args;
  std::vector<Defeat> wanted = {
      {id_of(a, "A4"), id_of(a, "B4"), DefeatKind::Rebut, id_of(a, "B4")},
      {id_of(a, "C2"), id_of(a, "A2"), DefeatKind::Undermine, std::string("A2")},
      {id_of(a, "D"), id_of(a, "C2"), DefeatKind::Undercut, std::string("C2")},
  };
  int found = 0;
  for (const auto& d : wanted) {
    found += std::find(p.af.defeats().begin(), p.af.defeats().end(), d) != p.af.defeats().end();
  }
  detail = std::to_string(found) + "/3 named defeats of " + std::to_string(p.af.defeats().size());
  return found == 3;
}

bool doctor(std::string& detail) {
  auto p = run("doctor.naf");
  ArgId b3 = id_of(p.args, "B3");
  ArgId a4 = id_of(p.args, "A4");
  bool forward = p.af.attacks(b3, a4);
  bool backward = p.af.attacks(a4, b3);
  bool skeptical = acceptance(p.args, p.extensions, parse("P K_doctor(illness)"), AcceptanceMode::Skeptical);
  detail = std::string("B3->A4 ") + (forward ? "yes" : "no") + ", A4->B3 " + (backward ? "yes" : "no") +
           ", skeptical " + (skeptical ? "yes" : "no");
  return forward && !backward && skeptical;
}

bool knife(std::string& detail) {
  Theory declared = load_theory_file(fixture("knife.naf"));
  bool hand_written = !declared.rules.empty();
  auto p = run("knife.naf");
  struct Case {
    const char* formula;
    bool expected;
  };
  const Case cases[] = {
      {"O_c ~misuse", true},                         // A
      {"P_c K_c(customer)", true},                   // B
      {"<>(K_c(customer) & misuse)", true},          // C
      {"~P_c(K_c(customer) & misuse)", true},        // A''
      {"P_c(K_c(customer) & handle)", true},         // B''
      {"P_c(K_c(customer) & misuse)", false},        // B'
      {"[](K_c(customer) -> ~misuse)", false},       // C'
  };
  int ok = 0;
  for (const auto& c : cases) {
    Formula f = parse(c.formula, {.normalize = true, .weak_mode = p.theory.weak_mode});
    bool cred = acceptance(p.args, p.extensions, f, AcceptanceMode::Credulous);
    bool skep = acceptance(p.args, p.extensions, f, AcceptanceMode::Skeptical);
    ok += cred == c.expected && skep == c.expected;
  }
  detail = std::to_string(ok) + "/7 verdicts, " + std::to_string(p.theory.generated_rule_count()) +
           " generated rules";
  return ok == 7 && !hand_written && p.theory.generated_rule_count() > 0;
}

bool oracle(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(424242);
  int disagreements = 0;
  for (int i = 0; i < 200; ++i) {
    auto af = testing::random_af(rng);
    auto exts = stable_extensions(af);
    for (const auto& e : exts) returned.emplace_back(af, e);
    disagreements += exts != brute_force_stable(af);
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  detail = std::to_string(disagreements) + " disagreements, " + std::to_string(s) + " s";
  return disagreements == 0 && s < 30;
}

bool verification(std::string& detail) {
  int bad = 0;
  for (const auto& [af, e] : returned) bad += !verify_extension(af, e);
  detail = std::to_string(returned.size()) + " extensions checked, " + std::to_string(bad) + " invalid";
  return bad == 0 && !returned.empty();
}

bool hohfeld_algebra(std::string& detail) {
  using namespace hohfeld;
  testing::FormulaGen gen(31);
  int checks = 0, failures = 0;
  for (int round = 0; round < 50; ++round) {
    Formula content = gen(3);
    for (auto kind : kAllKinds) {
      NormativePosition p{kind, gen.agent(), gen.agent(), content};
      std::set<PositionKind> orbit = {p.kind, correlative(p).kind, opposite(p).kind, correlative(opposite(p)).kind};
      bool same_square = std::all_of(orbit.begin(), orbit.end(),
                                     [&](PositionKind k) { return square_of(k) == square_of(kind); });
      bool ok = correlative(correlative(p)) == p && opposite(opposite(p)) == p && orbit.size() == 4 &&
                same_square && to_formula(p) == to_formula(correlative(p));
      ++checks;
      failures += !ok;
    }
  }
  detail = std::to_string(checks - failures) + "/" + std::to_string(checks) + " positions";
  return failures == 0;
}

bool round_trip(std::string& detail) {
  testing::FormulaGen gen(20240601);
  int ok = 0;
  for (int i = 0; i < 500; ++i) {
    Formula f = gen();
    ok += parse(print(f)) == normalize(f);
  }
  detail = std::to_string(ok) + "/500 formulas";
  return ok == 500;
}

bool duality(std::string& detail) {
  testing::FormulaGen gen(99);
  int weak_ok = 0, strong_ok = 0;
  for (int i = 0; i < 100; ++i) {
    Formula phi = gen(3);
    AgentId a = gen.agent();
    Formula perm = Formula::perm(a, phi);
    Formula ob = Formula::oblig(a, std::nullopt, Formula::negation(phi));
    weak_ok += contrary(normalize(perm, true), normalize(ob, true));
    strong_ok += !contrary(normalize(perm, false), normalize(ob, false));
  }
  detail = "weak " + std::to_string(weak_ok) + "/100, strong " + std::to_string(strong_ok) + "/100";
  return weak_ok == 100 && strong_ok == 100;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<bool(std::string&)>> criteria[] = {
      {"abortion stable extension", abortion_extension},
      {"abortion defeats", abortion_defeats},
      {"doctor permission prevails", doctor},
      {"knife acceptance", knife},
      {"solver/oracle equivalence", oracle},
      {"extension verification", verification},
      {"hohfeld algebra", hohfeld_algebra},
      {"parser round trip", round_trip},
      {"weak-permission duality", duality},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, check] : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failed += !ok;
    std::printf("%s  %d. %s (%s)\n", ok ? "PASS" : "FAIL", ++n, name, detail.c_str());
  }
  return failed;
}
