#include "normargue/formula.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "normargue/error.hpp"

namespace normargue {

struct Formula::Node {
  FormulaKind kind;
  std::string name;
  std::vector<std::string> args;
  std::optional<AgentId> agent;
  std::optional<AgentId> toward;
  std::vector<Formula> children;
  std::size_t hash = 0;
};

const char* to_string(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::Atom: return "Atom";
    case FormulaKind::Not: return "Not";
    case FormulaKind::And: return "And";
    case FormulaKind::Or: return "Or";
    case FormulaKind::Implies: return "Implies";
    case FormulaKind::Box: return "Box";
    case FormulaKind::Diamond: return "Diamond";
    case FormulaKind::Know: return "Know";
    case FormulaKind::Oblig: return "Oblig";
    case FormulaKind::Perm: return "Perm";
    case FormulaKind::Stit: return "Stit";
    case FormulaKind::Right: return "Right";
    case FormulaKind::Power: return "Power";
    case FormulaKind::RuleAtom: return "RuleAtom";
  }
  return "?";
}

namespace {

void mix(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

void mix_string(std::size_t& seed, const std::string& s) { mix(seed, std::hash<std::string>{}(s)); }

void mix_optional(std::size_t& seed, const std::optional<AgentId>& a) {
  if (a) {
    mix(seed, 1);
    mix_string(seed, *a);
  } else {
    mix(seed, 0);
  }
}

}  // namespace

// ── construction ────────────────────────────────────────────────────────────

Formula Formula::make(Node&& value) {
  auto node = std::make_shared<Node>(std::move(value));
  std::size_t h = static_cast<std::size_t>(node->kind) * 0x100000001b3ULL;
  mix_string(h, node->name);
  for (const auto& a : node->args) mix_string(h, a);
  mix_optional(h, node->agent);
  mix_optional(h, node->toward);
  for (const auto& c : node->children) mix(h, c.hash());
  node->hash = h;
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name, std::vector<std::string> args) {
  return make(Node{FormulaKind::Atom, std::move(name), std::move(args), {}, {}, {}, 0});
}

Formula Formula::negation(Formula f) {
  return make(Node{FormulaKind::Not, {}, {}, {}, {}, {std::move(f)}, 0});
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(Node{FormulaKind::And, {}, {}, {}, {}, {std::move(lhs), std::move(rhs)}, 0});
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(Node{FormulaKind::Or, {}, {}, {}, {}, {std::move(lhs), std::move(rhs)}, 0});
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(Node{FormulaKind::Implies, {}, {}, {}, {}, {std::move(lhs), std::move(rhs)}, 0});
}

Formula Formula::box(Formula f) {
  return make(Node{FormulaKind::Box, {}, {}, {}, {}, {std::move(f)}, 0});
}

Formula Formula::diamond(Formula f) {
  return make(Node{FormulaKind::Diamond, {}, {}, {}, {}, {std::move(f)}, 0});
}

Formula Formula::know(AgentId agent, Formula f) {
  return make(Node{FormulaKind::Know, {}, {}, std::move(agent), {}, {std::move(f)}, 0});
}

Formula Formula::oblig(std::optional<AgentId> agent, std::optional<AgentId> toward, Formula f) {
  if (toward && !agent) {
    throw Error(ErrorKind::InvalidArgument, "directed obligation needs a bearer");
  }
  return make(Node{FormulaKind::Oblig, {}, {}, std::move(agent), std::move(toward), {std::move(f)}, 0});
}

Formula Formula::perm(std::optional<AgentId> agent, Formula f) {
  return make(Node{FormulaKind::Perm, {}, {}, std::move(agent), {}, {std::move(f)}, 0});
}

Formula Formula::stit(AgentId agent, Formula f) {
  return make(Node{FormulaKind::Stit, {}, {}, std::move(agent), {}, {std::move(f)}, 0});
}

Formula Formula::right(AgentId agent, Formula f) {
  return make(Node{FormulaKind::Right, {}, {}, std::move(agent), {}, {std::move(f)}, 0});
}

Formula Formula::power(AgentId agent, AgentId toward, Formula f) {
  return make(Node{FormulaKind::Power, {}, {}, std::move(agent), std::move(toward), {std::move(f)}, 0});
}

Formula Formula::rule_atom(std::string rule_name) {
  return make(Node{FormulaKind::RuleAtom, std::move(rule_name), {}, {}, {}, {}, 0});
}

// ── accessors ───────────────────────────────────────────────────────────────

FormulaKind Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::name() const noexcept { return node_->name; }
const std::vector<std::string>& Formula::args() const noexcept { return node_->args; }
const std::optional<AgentId>& Formula::agent() const noexcept { return node_->agent; }
const std::optional<AgentId>& Formula::toward() const noexcept { return node_->toward; }
std::size_t Formula::arity() const noexcept { return node_->children.size(); }
std::size_t Formula::hash() const noexcept { return node_->hash; }

const Formula& Formula::operand() const {
  if (node_->children.size() != 1) {
    throw Error(ErrorKind::InvalidArgument, std::string("no operand on ") + to_string(kind()));
  }
  return node_->children[0];
}

const Formula& Formula::lhs() const {
  if (node_->children.size() != 2) {
    throw Error(ErrorKind::InvalidArgument, std::string("no lhs on ") + to_string(kind()));
  }
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (node_->children.size() != 2) {
    throw Error(ErrorKind::InvalidArgument, std::string("no rhs on ") + to_string(kind()));
  }
  return node_->children[1];
}

bool Formula::is_binary() const noexcept {
  auto k = kind();
  return k == FormulaKind::And || k == FormulaKind::Or || k == FormulaKind::Implies;
}

bool Formula::is_modal() const noexcept {
  switch (kind()) {
    case FormulaKind::Box:
    case FormulaKind::Diamond:
    case FormulaKind::Know:
    case FormulaKind::Oblig:
    case FormulaKind::Perm:
    case FormulaKind::Stit:
    case FormulaKind::Right:
    case FormulaKind::Power:
      return true;
    default:
      return false;
  }
}

// ── comparison ──────────────────────────────────────────────────────────────

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.args == y.args && x.agent == y.agent &&
         x.toward == y.toward && x.children == y.children;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.name <=> y.name; c != 0) return c;
  if (auto c = x.args <=> y.args; c != 0) return c;
  if (auto c = x.agent <=> y.agent; c != 0) return c;
  if (auto c = x.toward <=> y.toward; c != 0) return c;
  return std::lexicographical_compare_three_way(x.children.begin(), x.children.end(),
                                                y.children.begin(), y.children.end());
}

// ── normalization ───────────────────────────────────────────────────────────

Formula negate(const Formula& f) {
  if (f.is(FormulaKind::Not)) return f.operand();
  return Formula::negation(f);
}

Formula normalize(const Formula& f, bool weak_mode) {
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::RuleAtom:
      return f;
    case FormulaKind::Not:
      return negate(normalize(f.operand(), weak_mode));
    case FormulaKind::And:
      return Formula::conjunction(normalize(f.lhs(), weak_mode), normalize(f.rhs(), weak_mode));
    case FormulaKind::Or:
      return Formula::disjunction(normalize(f.lhs(), weak_mode), normalize(f.rhs(), weak_mode));
    case FormulaKind::Implies:
      return Formula::implication(normalize(f.lhs(), weak_mode), normalize(f.rhs(), weak_mode));
    case FormulaKind::Box:
      return Formula::box(normalize(f.operand(), weak_mode));
    case FormulaKind::Diamond:
      return negate(Formula::box(negate(normalize(f.operand(), weak_mode))));
    case FormulaKind::Know:
      return Formula::know(*f.agent(), normalize(f.operand(), weak_mode));
    case FormulaKind::Oblig:
      return Formula::oblig(f.agent(), f.toward(), normalize(f.operand(), weak_mode));
    case FormulaKind::Perm: {
      auto body = normalize(f.operand(), weak_mode);
      if (weak_mode) return negate(Formula::oblig(f.agent(), std::nullopt, negate(body)));
      return Formula::perm(f.agent(), std::move(body));
    }
    case FormulaKind::Stit:
      return Formula::stit(*f.agent(), normalize(f.operand(), weak_mode));
    case FormulaKind::Right:
      return Formula::right(*f.agent(), normalize(f.operand(), weak_mode));
    case FormulaKind::Power:
      return Formula::power(*f.agent(), *f.toward(), normalize(f.operand(), weak_mode));
  }
  return f;
}

// ── printing ────────────────────────────────────────────────────────────────

namespace {

constexpr int kPrecImplies = 1;
constexpr int kPrecOr = 2;
constexpr int kPrecAnd = 3;
constexpr int kPrecPrefix = 4;

int precedence(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Implies: return kPrecImplies;
    case FormulaKind::Or: return kPrecOr;
    case FormulaKind::And: return kPrecAnd;
    default: return kPrecPrefix;
  }
}

std::string modal_prefix(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Box: return "[]";
    case FormulaKind::Diamond: return "<>";
    case FormulaKind::Know: return "K_" + *f.agent();
    case FormulaKind::Perm: return f.agent() ? "P_" + *f.agent() : "P";
    case FormulaKind::Oblig:
      if (f.toward()) return "O_{" + *f.agent() + "," + *f.toward() + "}";
      return f.agent() ? "O_" + *f.agent() : "O";
    case FormulaKind::Stit: return "[" + *f.agent() + "]";
    case FormulaKind::Right: return "R_" + *f.agent();
    case FormulaKind::Power: return "Power_{" + *f.agent() + "," + *f.toward() + "}";
    default: return {};
  }
}

void print_into(const Formula& f, int min_prec, std::string& out);

// Operand of a prefix operator: atoms and binaries are parenthesized right
// after the operator, nested prefixes follow after a space.
void print_prefix_operand(const Formula& child, std::string& out, bool after_tilde) {
  if (child.is_binary() || (!after_tilde && (child.is(FormulaKind::Atom) ||
                                             child.is(FormulaKind::RuleAtom)))) {
    out += '(';
    print_into(child, kPrecImplies, out);
    out += ')';
    return;
  }
  if (!after_tilde) out += ' ';
  print_into(child, kPrecPrefix, out);
}

void print_into(const Formula& f, int min_prec, std::string& out) {
  bool parens = precedence(f) < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case FormulaKind::Atom:
      out += f.name();
      if (!f.args().empty()) {
        out += '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ',';
          out += f.args()[i];
        }
        out += ')';
      }
      break;
    case FormulaKind::RuleAtom:
      out += '@';
      out += f.name();
      break;
    case FormulaKind::Not:
      out += '~';
      print_prefix_operand(f.operand(), out, true);
      break;
    case FormulaKind::And:
      print_into(f.lhs(), kPrecAnd, out);
      out += " & ";
      print_into(f.rhs(), kPrecAnd + 1, out);
      break;
    case FormulaKind::Or:
      print_into(f.lhs(), kPrecOr, out);
      out += " | ";
      print_into(f.rhs(), kPrecOr + 1, out);
      break;
    case FormulaKind::Implies:
      print_into(f.lhs(), kPrecImplies + 1, out);
      out += " -> ";
      print_into(f.rhs(), kPrecImplies, out);
      break;
    default:
      out += modal_prefix(f);
      print_prefix_operand(f.operand(), out, false);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_into(f, kPrecImplies, out);
  return out;
}

// ── traversal ───────────────────────────────────────────────────────────────

namespace {

template <typename Visit>
void walk(const Formula& f, Visit&& visit) {
  visit(f);
  for (std::size_t i = 0; i < f.arity(); ++i) {
    walk(f.arity() == 1 ? f.operand() : (i == 0 ? f.lhs() : f.rhs()), visit);
  }
}

}  // namespace

void collect_subformulas(const Formula& f, std::vector<Formula>& out) {
  std::unordered_set<Formula, FormulaHash> seen(out.begin(), out.end());
  walk(f, [&](const Formula& g) {
    if (seen.insert(g).second) out.push_back(g);
  });
}

std::set<AgentId> agents_of(const Formula& f) {
  std::set<AgentId> agents;
  walk(f, [&](const Formula& g) {
    if (g.agent()) agents.insert(*g.agent());
    if (g.toward()) agents.insert(*g.toward());
  });
  return agents;
}

std::set<std::string> atom_names_of(const Formula& f) {
  std::set<std::string> names;
  walk(f, [&](const Formula& g) {
    if (g.is(FormulaKind::Atom)) names.insert(g.name());
  });
  return names;
}

std::set<std::string> rule_atoms_of(const Formula& f) {
  std::set<std::string> names;
  walk(f, [&](const Formula& g) {
    if (g.is(FormulaKind::RuleAtom)) names.insert(g.name());
  });
  return names;
}

// ── contrariness ────────────────────────────────────────────────────────────

void ContraryTable::add(const Formula& a, const Formula& b) {
  if (!declared(a, b)) pairs_.emplace_back(a, b);
}

bool ContraryTable::declared(const Formula& a, const Formula& b) const {
  return std::any_of(pairs_.begin(), pairs_.end(), [&](const auto& p) {
    return (p.first == a && p.second == b) || (p.first == b && p.second == a);
  });
}

namespace {

bool negation_of(const Formula& f, const Formula& g) {
  return g.is(FormulaKind::Not) && g.operand() == f;
}

bool deontic_conflict(const Formula& f, const Formula& g) {
  if (!f.is(FormulaKind::Oblig) || !g.is(FormulaKind::Oblig)) return false;
  if (f.agent() != g.agent() || f.toward() != g.toward()) return false;
  return g.operand() == negate(f.operand());
}

// [](a -> c) against ~[]~(a & ~c)
bool dual_collision(const Formula& f, const Formula& g) {
  if (!f.is(FormulaKind::Box) || !f.operand().is(FormulaKind::Implies)) return false;
  if (!g.is(FormulaKind::Not) || !g.operand().is(FormulaKind::Box)) return false;
  const Formula& body = g.operand().operand();
  if (!body.is(FormulaKind::Not) || !body.operand().is(FormulaKind::And)) return false;
  const Formula& conj = body.operand();
  const Formula& impl = f.operand();
  return conj.lhs() == impl.lhs() && conj.rhs() == negate(impl.rhs());
}

}  // namespace

bool contrary(const Formula& f, const Formula& g, const ContraryTable& declared) {
  if (f == g) return false;
  if (negation_of(f, g) || negation_of(g, f)) return true;
  if (deontic_conflict(f, g) || deontic_conflict(g, f)) return true;
  if (dual_collision(f, g) || dual_collision(g, f)) return true;
  return declared.declared(f, g);
}

}  // namespace normargue
