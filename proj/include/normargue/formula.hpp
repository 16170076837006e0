// ============================================================================
// formula.hpp: AST of the modal deontic-epistemic-action language
// ============================================================================
//
//   Atom      p, illness(patient)
//   Not       ~f
//   And/Or    f & g, f | g
//   Implies   f -> g              (material; never used for inference here)
//   Box       [] f                universal necessity
//   Diamond   <> f                rewritten to ~[]~f by normalize()
//   Know      K_a f
//   Oblig     O f, O_a f, O_{a,b} f   impersonal, personal, directed
//   Perm      P f, P_a f
//   Stit      [a] f               agent a sees to it that f
//   Right     R_a f               claim-right, primitive
//   Power     Power_{a,b} f
//   RuleAtom  @r                  names a defeasible rule (undercutting)
//
// Formulas are immutable values sharing structure through shared_ptr.
// Equality is structural; normalization is an explicit step.
// ============================================================================

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace normargue {

enum class FormulaKind : std::uint8_t {
  Atom,
  Not,
  And,
  Or,
  Implies,
  Box,
  Diamond,
  Know,
  Oblig,
  Perm,
  Stit,
  Right,
  Power,
  RuleAtom,
};

const char* to_string(FormulaKind kind);

using AgentId = std::string;

class Formula {
 public:
  static Formula atom(std::string name, std::vector<std::string> args = {});
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula box(Formula f);
  static Formula diamond(Formula f);
  static Formula know(AgentId agent, Formula f);
  // Throws Error(InvalidArgument) when `toward` is set without `agent`.
  static Formula oblig(std::optional<AgentId> agent, std::optional<AgentId> toward, Formula f);
  static Formula perm(std::optional<AgentId> agent, Formula f);
  static Formula stit(AgentId agent, Formula f);
  static Formula right(AgentId agent, Formula f);
  static Formula power(AgentId agent, AgentId toward, Formula f);
  static Formula rule_atom(std::string rule_name);

  FormulaKind kind() const noexcept;

  // Atom or RuleAtom name; empty otherwise.
  const std::string& name() const noexcept;
  const std::vector<std::string>& args() const noexcept;
  // Bearer of a modality (K, O, P, [a], R, Power).
  const std::optional<AgentId>& agent() const noexcept;
  // Counterparty of a directed obligation or of a power.
  const std::optional<AgentId>& toward() const noexcept;

  std::size_t arity() const noexcept;
  // Only child of a unary node.
  const Formula& operand() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool is(FormulaKind k) const noexcept { return kind() == k; }
  bool is_binary() const noexcept;
  bool is_modal() const noexcept;

  std::size_t hash() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Node&& node);
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

// Negation that cancels a leading negation instead of stacking a second one.
Formula negate(const Formula& f);

// Rewrites to the canonical form used for matching and conflict detection:
// double negations vanish, <>f becomes ~[]~f and, in weak-permission mode,
// P_a f becomes ~O_a ~f. Idempotent.
Formula normalize(const Formula& f, bool weak_mode = false);

std::string print(const Formula& f);

struct ParseOptions {
  bool normalize = true;
  bool weak_mode = false;
};

// Parses the concrete syntax; throws SyntaxError. With default options the
// result is normalized, so parse(print(f)) == normalize(f).
Formula parse(std::string_view text, ParseOptions options = {});
inline Formula parse_raw(std::string_view text) { return parse(text, {.normalize = false}); }

// Pre-order, first occurrence wins, structurally deduplicated.
void collect_subformulas(const Formula& f, std::vector<Formula>& out);
std::set<AgentId> agents_of(const Formula& f);
std::set<std::string> atom_names_of(const Formula& f);
std::set<std::string> rule_atoms_of(const Formula& f);

// Unordered pairs declared contrary by a theory.
class ContraryTable {
 public:
  void add(const Formula& a, const Formula& b);
  bool declared(const Formula& a, const Formula& b) const;
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<std::pair<Formula, Formula>>& pairs() const noexcept { return pairs_; }

 private:
  std::vector<std::pair<Formula, Formula>> pairs_;
};

// Symmetric conflict test on normalized formulas:
//   (i)   one is the negation of the other;
//   (ii)  O_{a,b} f against O_{a,b} ~f;
//   (iii) [](f -> ~g) against ~[]~(f & g);
//   (iv)  the pair is declared in `declared`.
bool contrary(const Formula& f, const Formula& g, const ContraryTable& declared = {});

}  // namespace normargue

template <>
struct std::hash<normargue::Formula> {
  std::size_t operator()(const normargue::Formula& f) const noexcept { return f.hash(); }
};
