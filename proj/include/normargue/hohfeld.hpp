#pragma once

#include <array>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normargue/formula.hpp"

namespace normargue::hohfeld {

// First square: ClaimRight, Duty, Freedom, NoClaim.
// Second square: Power, Liability, Immunity, Disability.
enum class PositionKind {
  ClaimRight,
  Duty,
  Freedom,
  NoClaim,
  Power,
  Liability,
  Immunity,
  Disability,
};

inline constexpr std::array<PositionKind, 8> kAllKinds = {
    PositionKind::ClaimRight, PositionKind::Duty,      PositionKind::Freedom,
    PositionKind::NoClaim,    PositionKind::Power,     PositionKind::Liability,
    PositionKind::Immunity,   PositionKind::Disability,
};

// 0 for the claim-right square, 1 for the power square.
int square_of(PositionKind kind);

// Snake-case DSL names: claim_right, duty, freedom, no_claim, power, ...
const char* to_string(PositionKind kind);
std::optional<PositionKind> kind_from_string(std::string_view name);

struct NormativePosition {
  PositionKind kind;
  AgentId holder;
  AgentId counterparty;
  Formula content;

  friend bool operator==(const NormativePosition&, const NormativePosition&) = default;
};

// ClaimRight<->Duty, Freedom<->NoClaim, Power<->Liability, Immunity<->Disability,
// with holder and counterparty swapped.
NormativePosition correlative(const NormativePosition& p);

// ClaimRight<->NoClaim, Duty<->Freedom, Power<->Disability, Liability<->Immunity,
// parties unchanged.
NormativePosition opposite(const NormativePosition& p);

// Modal rendering. Correlatives render identically:
//   ClaimRight(a,b,f), Duty(b,a,f)   ->  O_{b,a} f
//   Freedom(a,b,f), NoClaim(b,a,f)   -> ~O_{a,b} ~f
//   Power(a,b,f), Liability(b,a,f)   ->  Power_{a,b} f
//   Disability(a,b,f), Immunity(b,a,f) -> ~Power_{a,b} f
Formula to_formula(const NormativePosition& p);

// Collapses a family of duties that the same holder owes every other agent
// into one undirected obligation O_a f. With `impersonal` and a content that
// mentions no agent, the bearer is dropped as well (O f).
// Throws Error(IncompleteCover) when an agent other than the holder is not
// covered, Error(InvalidArgument) for an empty or inhomogeneous family.
Formula generalize(std::span<const NormativePosition> duties, const std::set<AgentId>& all_agents,
                   bool impersonal = false);

// Representable but suspicious positions: self-directed ones, and claim-rights
// whose content is the holder's own action (a claim concerns another agent's
// action).
std::vector<std::string> validate(const NormativePosition& p);

}  // namespace normargue::hohfeld
