// Ground instantiation of the deontic rule schemes.
//
// Matching is purely syntactic over the subformulas already in the theory,
// so every generated rule mentions only formulas that occur somewhere in the
// knowledge base (plus the scheme's own connectives).

#include <map>
#include <set>
#include <tuple>

#include "normargue/theory.hpp"

namespace normargue {

namespace {

struct Candidate {
  const char* scheme;
  RuleKind kind;
  std::vector<Formula> antecedents;
  Formula consequent;
};

using Signature = std::tuple<RuleKind, std::vector<Formula>, Formula>;

Signature signature_of(RuleKind kind, const std::vector<Formula>& antecedents, const Formula& consequent) {
  return {kind, antecedents, consequent};
}

std::vector<Formula> subformula_pool(const Theory& t) {
  std::vector<Formula> pool;
  for (const auto& p : t.premises) collect_subformulas(p.formula, pool);
  for (const auto& r : t.rules) {
    for (const auto& a : r.antecedents) collect_subformulas(a, pool);
    collect_subformulas(r.consequent, pool);
  }
  return pool;
}

// ~[]~f (the normalized diamond) or a raw <>f.
const Formula* possibility_body(const Formula& f) {
  if (f.is(FormulaKind::Diamond)) return &f.operand();
  if (f.is(FormulaKind::Not) && f.operand().is(FormulaKind::Box) &&
      f.operand().operand().is(FormulaKind::Not)) {
    return &f.operand().operand().operand();
  }
  return nullptr;
}

bool has_conjunct(const Formula& conj, const Formula& part) {
  return conj.is(FormulaKind::And) && (conj.lhs() == part || conj.rhs() == part);
}

bool undirected(const Formula& f) { return !f.toward().has_value(); }

class Generator {
 public:
  Generator(const std::vector<Formula>& pool, const SchemeToggles& toggles, bool weak_mode)
      : pool_(pool), toggles_(toggles), weak_mode_(weak_mode) {
    for (const auto& f : pool_) {
      if (f.is(FormulaKind::Perm)) perms_.push_back(f);
      if (f.is(FormulaKind::Oblig) && undirected(f) && f.operand().is(FormulaKind::Not)) {
        prohibitions_.push_back(f);
      }
      if (f.is(FormulaKind::Box) && f.operand().is(FormulaKind::Implies)) necessities_.push_back(f);
      if (const Formula* body = possibility_body(f)) possibilities_.emplace_back(f, *body);
      if (f.is(FormulaKind::Know)) knowledge_.push_back(f);
    }
  }

  std::vector<Candidate> run() {
    if (toggles_.fcp) fcp();
    if (toggles_.owp) owp();
    if (toggles_.weak_closure) weak_closure();
    if (toggles_.k_truth) k_truth();
    return std::move(out_);
  }

 private:
  void emit(const char* scheme, RuleKind kind, std::vector<Formula> antecedents, const Formula& consequent) {
    out_.push_back({scheme, kind, std::move(antecedents), normalize(consequent, weak_mode_)});
  }

  // Downward closure: what is permitted permits its specializations.
  void fcp() {
    for (const auto& perm : perms_) {
      const Formula& permitted = perm.operand();
      for (const auto& nec : necessities_) {
        const Formula& impl = nec.operand();
        if (impl.rhs() == permitted && !(impl.lhs() == permitted)) {
          emit("fcp", RuleKind::Defeasible, {perm, nec}, Formula::perm(perm.agent(), impl.lhs()));
        }
      }
      for (const auto& [whole, body] : possibilities_) {
        if (has_conjunct(body, permitted)) {
          emit("fcp", RuleKind::Defeasible, {perm}, Formula::perm(perm.agent(), body));
        }
      }
    }
  }

  // Permissions stay within the zone set up by obligations.
  void owp() {
    for (const auto& perm : perms_) {
      for (const auto& ob : prohibitions_) {
        if (ob.agent() != perm.agent()) continue;
        emit("owp", RuleKind::Defeasible, {perm, ob},
             Formula::box(Formula::implication(perm.operand(), ob.operand())));
      }
    }
    for (const auto& ob : prohibitions_) {
      const Formula& forbidden = ob.operand().operand();
      for (const auto& [whole, body] : possibilities_) {
        if (has_conjunct(body, forbidden)) {
          emit("owp", RuleKind::Defeasible, {ob, whole},
               Formula::negation(Formula::perm(ob.agent(), body)));
        }
      }
    }
  }

  // Upward closure of weak permission (Ross-style).
  void weak_closure() {
    for (const auto& perm : perms_) {
      for (const auto& nec : necessities_) {
        const Formula& impl = nec.operand();
        if (impl.lhs() == perm.operand() && !(impl.rhs() == perm.operand())) {
          emit("weak_closure", RuleKind::Defeasible, {perm, nec},
               Formula::perm(perm.agent(), impl.rhs()));
        }
      }
    }
  }

  void k_truth() {
    for (const auto& k : knowledge_) emit("k_truth", RuleKind::Strict, {k}, k.operand());
  }

  const std::vector<Formula>& pool_;
  SchemeToggles toggles_;
  bool weak_mode_;
  std::vector<Formula> perms_;
  std::vector<Formula> prohibitions_;
  std::vector<Formula> necessities_;
  std::vector<std::pair<Formula, Formula>> possibilities_;
  std::vector<Formula> knowledge_;
  std::vector<Candidate> out_;
};

}  // namespace

Theory instantiate_schemes(Theory t) {
  if (!t.schemes.any()) {
    t.schemes_saturated = true;
    return t;
  }

  std::set<Signature> known;
  std::map<std::string, std::size_t> counters;
  for (const auto& r : t.rules) {
    known.insert(signature_of(r.kind, r.antecedents, r.consequent));
    if (!r.scheme.empty()) ++counters[r.scheme];
  }

  auto round = [&](bool apply) {
    std::size_t added = 0;
    auto candidates = Generator(subformula_pool(t), t.schemes, t.weak_mode).run();
    for (auto& c : candidates) {
      if (!known.insert(signature_of(c.kind, c.antecedents, c.consequent)).second) continue;
      ++added;
      if (!apply) break;
      std::string id = std::string(c.scheme) + "#" + std::to_string(++counters[c.scheme]);
      t.rules.push_back(Rule{std::move(id), std::move(c.antecedents), std::move(c.consequent), c.kind,
                             {}, c.scheme});
    }
    return added;
  };

  t.schemes_saturated = false;
  for (int i = 0; i < t.max_depth; ++i) {
    if (round(true) == 0) {
      t.schemes_saturated = true;
      break;
    }
  }
  if (!t.schemes_saturated) t.schemes_saturated = round(false) == 0;
  return t;
}

}  // namespace normargue
