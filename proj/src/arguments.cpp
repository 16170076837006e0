#include "normargue/arguments.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace normargue {

const char* to_string(Strength s) { return s == Strength::Strict ? "strict" : "defeasible"; }
const char* to_string(Firmness f) { return f == Firmness::Firm ? "firm" : "plausible"; }

const char* to_string(Preference p) {
  switch (p) {
    case Preference::Preferred: return "preferred";
    case Preference::Dispreferred: return "dispreferred";
    case Preference::Equal: return "equal";
  }
  return "?";
}

std::optional<ArgId> ArgumentSet::premise_argument(const std::string& premise_id) const {
  for (const auto& a : arguments) {
    if (a.premise && *a.premise == premise_id) return a.id;
  }
  return std::nullopt;
}

namespace {

class Builder {
 public:
  explicit Builder(const Theory& t) : theory_(t) {}

  ArgumentSet run() {
    for (const auto& p : theory_.premises) {
      Argument a{next_id(), {p.id}, {}, std::nullopt, p.formula,
                 false, p.strength == PremiseStrength::Ordinary, 0, p.id, RuleKind::Strict, {}};
      a.subtree = {a.id};
      add(std::move(a));
    }
    for (int depth = 1; depth <= theory_.max_depth; ++depth) {
      for (std::size_t r = 0; r < theory_.rules.size(); ++r) fire(r, depth, true);
    }
    for (std::size_t r = 0; r < theory_.rules.size() && !out_.truncated; ++r) {
      out_.truncated = fire(r, theory_.max_depth + 1, false);
    }
    return std::move(out_);
  }

 private:
  ArgId next_id() const { return out_.arguments.size(); }

  void add(Argument a) {
    by_conclusion_[a.conclusion].push_back(a.id);
    out_.arguments.push_back(std::move(a));
  }

  // Applies rule r to every tuple whose deepest member has depth-1. With
  // `apply` false only reports whether such a tuple exists.
  bool fire(std::size_t r, int depth, bool apply) {
    const Rule& rule = theory_.rules[r];
    std::vector<const std::vector<ArgId>*> pools;
    for (const auto& ante : rule.antecedents) {
      auto it = by_conclusion_.find(ante);
      if (it == by_conclusion_.end()) return false;
      pools.push_back(&it->second);
    }
    // Snapshot sizes so arguments added in this pass are not reused.
    std::vector<std::size_t> limits;
    for (auto* p : pools) limits.push_back(p->size());

    std::vector<std::size_t> idx(pools.size(), 0);
    std::vector<ArgId> tuple(pools.size());
    bool found = false;
    auto visit = [&]() {
      int deepest = 0;
      for (std::size_t i = 0; i < pools.size(); ++i) {
        tuple[i] = (*pools[i])[idx[i]];
        deepest = std::max(deepest, out_.arguments[tuple[i]].depth);
      }
      if (deepest != depth - 1) return;
      found = true;
      if (apply) build(rule, tuple, depth);
    };
    if (pools.empty()) {
      // A rule without antecedents yields one argument at depth 1.
      if (depth == 1) {
        found = true;
        if (apply) build(rule, tuple, depth);
      }
      return found;
    }
    while (true) {
      visit();
      if (found && !apply) return true;
      std::size_t k = pools.size();
      while (k > 0) {
        --k;
        if (++idx[k] < limits[k]) break;
        idx[k] = 0;
        if (k == 0) return found;
      }
    }
  }

  void build(const Rule& rule, const std::vector<ArgId>& subs, int depth) {
    Argument a{next_id(), {}, subs, rule.id, rule.consequent,
               rule.kind == RuleKind::Defeasible, false, depth, std::nullopt, rule.kind, {}};
    a.subtree.push_back(a.id);
    for (ArgId s : subs) {
      const Argument& sub = out_.arguments[s];
      a.premise_ids.insert(sub.premise_ids.begin(), sub.premise_ids.end());
      a.defeasible = a.defeasible || sub.defeasible;
      a.plausible = a.plausible || sub.plausible;
      a.subtree.insert(a.subtree.end(), sub.subtree.begin(), sub.subtree.end());
    }
    std::sort(a.subtree.begin(), a.subtree.end());
    a.subtree.erase(std::unique(a.subtree.begin(), a.subtree.end()), a.subtree.end());
    add(std::move(a));
  }

  const Theory& theory_;
  ArgumentSet out_;
  std::unordered_map<Formula, std::vector<ArgId>, FormulaHash> by_conclusion_;
};

}  // namespace

ArgumentSet construct_arguments(const Theory& t) { return Builder(t).run(); }

std::pair<Strength, Firmness> classify(const Argument& a) {
  return {a.defeasible ? Strength::Defeasible : Strength::Strict,
          a.plausible ? Firmness::Plausible : Firmness::Firm};
}

Preference compare(const Argument& a, const Argument& b, Ordering ordering) {
  bool a_weak = false;
  bool b_weak = false;
  switch (ordering) {
    case Ordering::Universal:
      return Preference::Equal;
    case Ordering::RuleBased:
      a_weak = a.defeasible;
      b_weak = b.defeasible;
      break;
    case Ordering::PremiseBased:
      a_weak = a.plausible;
      b_weak = b.plausible;
      break;
  }
  if (a_weak == b_weak) return Preference::Equal;
  return a_weak ? Preference::Dispreferred : Preference::Preferred;
}

}  // namespace normargue
