#include <doctest.h>

#include "normargue/error.hpp"
#include "normargue/theory.hpp"
#include "support.hpp"

using namespace normargue;
using normargue::testing::fixture;

namespace {

ErrorKind load_error(const std::string& text, SourceLocation* where = nullptr) {
  try {
    load_theory(text);
  } catch (const Error& e) {
    if (where) *where = e.where();
    return e.kind();
  }
  FAIL("theory loaded without error");
  return ErrorKind::InvalidArgument;
}

bool same_rules(const Theory& a, const Theory& b) {
  if (a.rules.size() != b.rules.size()) return false;
  for (std::size_t i = 0; i < a.rules.size(); ++i) {
    const auto& x = a.rules[i];
    const auto& y = b.rules[i];
    if (x.id != y.id || x.kind != y.kind || x.antecedents != y.antecedents || !(x.consequent == y.consequent)) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("abortion fixture loads") {
  Theory t = load_theory_file(fixture("abortion.naf"));
  CHECK(t.agents == std::vector<AgentId>{"d", "p"});
  CHECK(t.premises.size() == 6);
  CHECK(t.rules.size() == 4);
  REQUIRE(t.contraries.size() == 1);
  CHECK(t.contraries.declared(parse("~life_before_birth"), Formula::rule_atom("C2")));
  CHECK(t.find_premise("B5")->strength == PremiseStrength::Ordinary);
  CHECK(t.find_rule("A4")->kind == RuleKind::Strict);
  CHECK(t.find_rule("A4")->consequent == parse("O_{d,p} [d] K_p(ill)"));
}

TEST_CASE("empty theory") {
  Theory t = load_theory("# nothing\n\n");
  CHECK(t.premises.empty());
  CHECK(t.rules.empty());
  CHECK(instantiate_schemes(t).rules.empty());
}

TEST_CASE("validation errors") {
  CHECK(load_error("AGENTS: a\nRULE strict r: p |- K_b(p)\n") == ErrorKind::UnknownAgent);
  CHECK(load_error("AGENTS: a, a\n") == ErrorKind::DuplicateId);
  CHECK(load_error("PREMISE axiom x: p\nRULE strict x: p |- q\n") == ErrorKind::DuplicateId);
  CHECK(load_error("PREMISE axiom x: p\nCONTRARY: p ~ @nope\n") == ErrorKind::DanglingRuleAtom);
  CHECK(load_error("PREMISE axiom x: p\nRULE strict s: p |- q\nCONTRARY: p ~ @s\n") ==
        ErrorKind::DanglingRuleAtom);
  CHECK(load_error("RULE strict r: p |~ q\n") == ErrorKind::Syntax);
  CHECK(load_error("PREMISE maybe x: p\n") == ErrorKind::Syntax);
  CHECK(load_error("FACT x: p\n") == ErrorKind::Syntax);
  CHECK(load_error("OPTION max_depth 0\n") == ErrorKind::Syntax);
  CHECK(load_error("PREMISE axiom x: K_ p\n") == ErrorKind::UnknownOperator);
}

TEST_CASE("errors point at line and column") {
  SourceLocation where;
  CHECK(load_error("AGENTS: a\n\nPREMISE axiom x: p & \n", &where) == ErrorKind::Syntax);
  CHECK(where.line == 3);
  CHECK(where.column >= 18);
  CHECK(load_error("AGENTS: a\nPREMISE axiom x: K_z(p)\n", &where) == ErrorKind::UnknownAgent);
  CHECK(where.line == 2);
}

TEST_CASE("line endings, comments and options") {
  Theory t = load_theory(
      "AGENTS: a  # one agent\r\nPREMISE prem x: P_a q\r\nOPTION weak_mode on\r\nOPTION max_depth 5\r\n"
      "OPTION undercut rule_based\r\nSCHEME k_truth on\r\nSCHEME fcp off\r\n");
  CHECK(t.weak_mode);
  CHECK(t.max_depth == 5);
  CHECK(t.defeat.undercut == Ordering::RuleBased);
  CHECK(t.schemes.k_truth);
  CHECK_FALSE(t.schemes.fcp);
  CHECK(t.premises[0].formula == parse("~O_a ~q"));

  Theory overridden = load_theory("OPTION weak_mode on\nPREMISE axiom x: P q\n", {.weak_mode = false, .max_depth = 2});
  CHECK_FALSE(overridden.weak_mode);
  CHECK(overridden.max_depth == 2);
  CHECK(overridden.premises[0].formula == parse("P q"));
}

TEST_CASE("positions become premises") {
  Theory t = load_theory_file(fixture("doctor.naf"));
  const Premise* claim = t.find_premise("claim");
  REQUIRE(claim);
  CHECK(claim->formula == parse("O_{doctor,patient} [doctor](treat)"));
  CHECK(claim->strength == PremiseStrength::Axiom);
  CHECK(t.warnings.empty());

  Theory miswired = load_theory(
      "AGENTS: doctor, patient\nPOSITION claim_right(patient, doctor): [patient](treat) prem\n");
  REQUIRE(miswired.premises.size() == 1);
  CHECK(miswired.premises[0].id == "position#1");
  CHECK(miswired.premises[0].strength == PremiseStrength::Ordinary);
  REQUIRE(miswired.warnings.size() == 1);
  CHECK(miswired.warnings[0].find("claim_right of patient") != std::string::npos);
}

TEST_CASE("knife schemes generate the permission rules") {
  Theory t = instantiate_schemes(load_theory_file(fixture("knife.naf")));
  CHECK(t.schemes_saturated);
  auto has = [&](const char* scheme, std::vector<std::string> ante, const char* cons) {
    std::vector<Formula> fs;
    for (const auto& a : ante) fs.push_back(parse(a));
    Formula c = parse(cons);
    return std::any_of(t.rules.begin(), t.rules.end(), [&](const Rule& r) {
      return r.scheme == scheme && r.antecedents == fs && r.consequent == c && r.kind == RuleKind::Defeasible;
    });
  };
  CHECK(has("owp", {"P_c K_c(customer)", "O_c ~misuse"}, "[](K_c(customer) -> ~misuse)"));
  CHECK(has("fcp", {"P_c K_c(customer)"}, "P_c(K_c(customer) & misuse)"));
  CHECK(has("fcp", {"P_c K_c(customer)"}, "P_c(K_c(customer) & handle)"));
  CHECK(has("owp", {"O_c ~misuse", "<>(K_c(customer) & misuse)"}, "~P_c(K_c(customer) & misuse)"));
  CHECK(t.find_rule("fcp#1"));
  CHECK(t.find_rule("owp#1"));
}

TEST_CASE("schemes off leave the theory unchanged") {
  Theory t = load_theory_file(fixture("knife.naf"));
  t.schemes = {false, false, false, false};
  CHECK(same_rules(instantiate_schemes(t), t));
}

TEST_CASE("weak closure and knowledge truth") {
  Theory t = load_theory(
      "AGENTS: d\nSCHEME weak_closure on\nSCHEME k_truth on\nSCHEME fcp off\nSCHEME owp off\n"
      "PREMISE prem p1: P_d(record)\nPREMISE axiom p2: [](record -> record | sell)\n"
      "PREMISE axiom p3: K_d(record)\n");
  Theory g = instantiate_schemes(t);
  const Rule* wc = g.find_rule("weak_closure#1");
  REQUIRE(wc);
  CHECK(wc->consequent == parse("P_d(record | sell)"));
  const Rule* kt = g.find_rule("k_truth#1");
  REQUIRE(kt);
  CHECK(kt->kind == RuleKind::Strict);
  CHECK(kt->consequent == parse("record"));
}

TEST_CASE("fcp downward closure through a necessity") {
  Theory t = load_theory(
      "AGENTS: doctor\nPREMISE prem r: P K_doctor(record)\n"
      "PREMISE axiom s: [](K_doctor(illness) -> K_doctor(record))\n");
  Theory g = instantiate_schemes(t);
  const Rule* r = g.find_rule("fcp#1");
  REQUIRE(r);
  CHECK(r->consequent == parse("P K_doctor(illness)"));
}

TEST_CASE("instantiation is deterministic, monotone and idempotent") {
  for (const char* name : {"abortion.naf", "doctor.naf", "knife.naf"}) {
    CAPTURE(name);
    Theory t = load_theory_file(fixture(name));
    Theory once = instantiate_schemes(t);
    CHECK(once.schemes_saturated);
    CHECK(same_rules(once, instantiate_schemes(load_theory_file(fixture(name)))));
    CHECK(same_rules(instantiate_schemes(once), once));
    REQUIRE(once.rules.size() >= t.rules.size());
    for (std::size_t i = 0; i < t.rules.size(); ++i) CHECK(once.rules[i].id == t.rules[i].id);
    CHECK_NOTHROW(check_rule_atoms(once));
  }
}

TEST_CASE("generated rules can be undercut by name") {
  Theory t = load_theory(
      "AGENTS: c\nPREMISE prem b: P_c(k)\nPREMISE axiom h: <>(k & h)\nPREMISE axiom stop: stop\n"
      "CONTRARY: stop ~ @fcp#1\n");
  CHECK_THROWS_AS(check_rule_atoms(t), Error);
  CHECK_NOTHROW(check_rule_atoms(instantiate_schemes(t)));
}

TEST_CASE("depth cap reports an unsaturated instantiation") {
  // each round produces a new permission that the next round can extend
  Theory t = load_theory(
      "AGENTS: a\nOPTION max_depth 1\nPREMISE prem p: P_a(x)\nPREMISE axiom n1: [](y -> x)\n"
      "PREMISE axiom n2: [](z -> y)\n");
  Theory g = instantiate_schemes(t);
  CHECK_FALSE(g.schemes_saturated);
  CHECK(g.generated_rule_count() == 1);
}
