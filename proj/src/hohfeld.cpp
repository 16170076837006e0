#include "normargue/hohfeld.hpp"

#include "normargue/error.hpp"

namespace normargue::hohfeld {

int square_of(PositionKind kind) {
  switch (kind) {
    case PositionKind::ClaimRight:
    case PositionKind::Duty:
    case PositionKind::Freedom:
    case PositionKind::NoClaim:
      return 0;
    default:
      return 1;
  }
}

const char* to_string(PositionKind kind) {
  switch (kind) {
    case PositionKind::ClaimRight: return "claim_right";
    case PositionKind::Duty: return "duty";
    case PositionKind::Freedom: return "freedom";
    case PositionKind::NoClaim: return "no_claim";
    case PositionKind::Power: return "power";
    case PositionKind::Liability: return "liability";
    case PositionKind::Immunity: return "immunity";
    case PositionKind::Disability: return "disability";
  }
  return "?";
}

std::optional<PositionKind> kind_from_string(std::string_view name) {
  for (auto k : kAllKinds) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

namespace {

PositionKind correlative_kind(PositionKind k) {
  switch (k) {
    case PositionKind::ClaimRight: return PositionKind::Duty;
    case PositionKind::Duty: return PositionKind::ClaimRight;
    case PositionKind::Freedom: return PositionKind::NoClaim;
    case PositionKind::NoClaim: return PositionKind::Freedom;
    case PositionKind::Power: return PositionKind::Liability;
    case PositionKind::Liability: return PositionKind::Power;
    case PositionKind::Immunity: return PositionKind::Disability;
    case PositionKind::Disability: return PositionKind::Immunity;
  }
  return k;
}

PositionKind opposite_kind(PositionKind k) {
  switch (k) {
    case PositionKind::ClaimRight: return PositionKind::NoClaim;
    case PositionKind::NoClaim: return PositionKind::ClaimRight;
    case PositionKind::Duty: return PositionKind::Freedom;
    case PositionKind::Freedom: return PositionKind::Duty;
    case PositionKind::Power: return PositionKind::Disability;
    case PositionKind::Disability: return PositionKind::Power;
    case PositionKind::Liability: return PositionKind::Immunity;
    case PositionKind::Immunity: return PositionKind::Liability;
  }
  return k;
}

}  // namespace

NormativePosition correlative(const NormativePosition& p) {
  return {correlative_kind(p.kind), p.counterparty, p.holder, p.content};
}

NormativePosition opposite(const NormativePosition& p) {
  return {opposite_kind(p.kind), p.holder, p.counterparty, p.content};
}

Formula to_formula(const NormativePosition& p) {
  switch (p.kind) {
    case PositionKind::Duty:
      return Formula::oblig(p.holder, p.counterparty, p.content);
    case PositionKind::Freedom:
      // no duty toward the counterparty to refrain
      return negate(Formula::oblig(p.holder, p.counterparty, negate(p.content)));
    case PositionKind::Power:
      return Formula::power(p.holder, p.counterparty, p.content);
    case PositionKind::Disability:
      return negate(Formula::power(p.holder, p.counterparty, p.content));
    case PositionKind::ClaimRight:
    case PositionKind::NoClaim:
    case PositionKind::Liability:
    case PositionKind::Immunity:
      return to_formula(correlative(p));
  }
  return p.content;
}

Formula generalize(std::span<const NormativePosition> duties, const std::set<AgentId>& all_agents,
                   bool impersonal) {
  if (duties.empty()) throw Error(ErrorKind::InvalidArgument, "no duties to generalize");
  const auto& first = duties.front();
  std::set<AgentId> covered;
  for (const auto& d : duties) {
    if (d.kind != PositionKind::Duty) {
      throw Error(ErrorKind::InvalidArgument,
                  std::string("generalize expects duties, got ") + to_string(d.kind));
    }
    if (d.holder != first.holder || !(d.content == first.content)) {
      throw Error(ErrorKind::InvalidArgument, "duties differ in holder or content");
    }
    covered.insert(d.counterparty);
  }
  for (const auto& agent : all_agents) {
    if (agent != first.holder && !covered.contains(agent)) {
      throw Error(ErrorKind::IncompleteCover,
                  "no duty of " + first.holder + " toward " + agent);
    }
  }
  if (impersonal && agents_of(first.content).empty()) {
    return Formula::oblig(std::nullopt, std::nullopt, first.content);
  }
  return Formula::oblig(first.holder, std::nullopt, first.content);
}

std::vector<std::string> validate(const NormativePosition& p) {
  std::vector<std::string> warnings;
  if (p.holder == p.counterparty) {
    warnings.push_back(std::string(to_string(p.kind)) + " of " + p.holder + " is self-directed");
  }
  if (p.kind == PositionKind::ClaimRight && p.content.is(FormulaKind::Stit) &&
      p.content.agent() == p.holder) {
    warnings.push_back("claim_right of " + p.holder +
                       " concerns the holder's own action; a claim concerns " + p.counterparty +
                       "'s action");
  }
  return warnings;
}

}  // namespace normargue::hohfeld
