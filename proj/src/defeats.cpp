#include <algorithm>
#include <unordered_map>

#include "normargue/semantics.hpp"

namespace normargue {

const char* to_string(DefeatKind kind) {
  switch (kind) {
    case DefeatKind::Rebut: return "rebut";
    case DefeatKind::Undermine: return "undermine";
    case DefeatKind::Undercut: return "undercut";
  }
  return "?";
}

std::string locus_text(const Locus& locus) {
  if (const auto* id = std::get_if<ArgId>(&locus)) return std::to_string(*id);
  return std::get<std::string>(locus);
}

namespace {

// Conflict data shared by all attackers: distinct conclusions, rule atoms
// of defeasible rules, and the contrary relation between them.
class ConflictIndex {
 public:
  ConflictIndex(const ArgumentSet& args, const Theory& t) {
    for (const auto& a : args.arguments) conclusion_.push_back(intern(a.conclusion));
    std::size_t n_conclusions = formulas_.size();
    for (const auto& a : args.arguments) {
      if (a.top_rule && a.top_kind == RuleKind::Defeasible) {
        rule_atom_.emplace(*a.top_rule, intern(Formula::rule_atom(*a.top_rule)));
      }
    }
    std::size_t m = formulas_.size();
    width_ = m;
    table_.assign(n_conclusions * m, 0);
    for (std::size_t i = 0; i < n_conclusions; ++i) {
      for (std::size_t j = 0; j < m; ++j) table_[i * m + j] = contrary(formulas_[i], formulas_[j], t);
    }
  }

  bool conclusions_conflict(ArgId a, ArgId b) const {
    return table_[conclusion_[a] * width_ + conclusion_[b]];
  }
  bool undercuts(ArgId a, const std::string& rule) const {
    return table_[conclusion_[a] * width_ + rule_atom_.at(rule)];
  }

 private:
  std::size_t intern(const Formula& f) {
    auto [it, inserted] = index_.emplace(f, formulas_.size());
    if (inserted) formulas_.push_back(f);
    return it->second;
  }

  std::vector<Formula> formulas_;
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
  std::vector<std::size_t> conclusion_;
  std::unordered_map<std::string, std::size_t> rule_atom_;
  std::size_t width_ = 0;
  std::vector<char> table_;
};

bool gate(const Argument& attacker, const Argument& locus, Ordering ordering) {
  return compare(attacker, locus, ordering) != Preference::Dispreferred;
}

// Defeats by one attacker, sorted.
std::vector<Defeat> defeats_from(ArgId a, const ArgumentSet& args, const ConflictIndex& index,
                                 const DefeatConfig& config) {
  const Argument& attacker = args[a];
  std::size_t n = args.size();

  // Direct hits on individual (sub-)arguments.
  struct Hit {
    DefeatKind kind;
    Locus locus;
  };
  std::vector<std::vector<Hit>> direct(n);
  bool any = false;
  for (ArgId b = 0; b < n; ++b) {
    const Argument& sub = args[b];
    if (sub.is_premise()) {
      if (sub.plausible && index.conclusions_conflict(a, b) && gate(attacker, sub, config.undermine)) {
        direct[b].push_back({DefeatKind::Undermine, *sub.premise});
        any = true;
      }
      continue;
    }
    if (sub.top_kind != RuleKind::Defeasible) continue;
    if (index.conclusions_conflict(a, b) && gate(attacker, sub, config.rebut)) {
      direct[b].push_back({DefeatKind::Rebut, b});
      any = true;
    }
    if (index.undercuts(a, *sub.top_rule) &&
        (!config.undercut || gate(attacker, sub, *config.undercut))) {
      direct[b].push_back({DefeatKind::Undercut, *sub.top_rule});
      any = true;
    }
  }

  std::vector<Defeat> out;
  if (!any) return out;
  for (ArgId t = 0; t < n; ++t) {
    for (ArgId s : args[t].subtree) {
      for (const auto& hit : direct[s]) out.push_back({a, t, hit.kind, hit.locus});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Defeat> flatten(std::vector<std::vector<Defeat>>& parts) {
  std::vector<Defeat> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

}  // namespace

std::vector<Defeat> compute_defeats_serial(const ArgumentSet& args, const Theory& t,
                                           const DefeatConfig& config) {
  ConflictIndex index(args, t);
  std::vector<std::vector<Defeat>> parts(args.size());
  for (ArgId a = 0; a < args.size(); ++a) parts[a] = defeats_from(a, args, index, config);
  return flatten(parts);
}

std::vector<Defeat> compute_defeats(const ArgumentSet& args, const Theory& t,
                                    const DefeatConfig& config) {
  ConflictIndex index(args, t);
  std::vector<std::vector<Defeat>> parts(args.size());
  const auto n = static_cast<std::ptrdiff_t>(args.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t a = 0; a < n; ++a) {
    parts[a] = defeats_from(static_cast<ArgId>(a), args, index, config);
  }
  return flatten(parts);
}

}  // namespace normargue
