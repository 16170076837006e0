#include <doctest.h>

#include <set>

#include "normargue/error.hpp"
#include "normargue/hohfeld.hpp"
#include "support.hpp"

using namespace normargue;
using namespace normargue::hohfeld;

namespace {

Formula phi() { return Formula::atom("phi"); }

NormativePosition pos(PositionKind k, const char* h = "a", const char* c = "b", Formula f = phi()) {
  return {k, h, c, f};
}

}  // namespace

TEST_CASE("correlatives") {
  CHECK(correlative(pos(PositionKind::ClaimRight)) == pos(PositionKind::Duty, "b", "a"));
  CHECK(correlative(pos(PositionKind::Power)) == pos(PositionKind::Liability, "b", "a"));
  CHECK(correlative(pos(PositionKind::Freedom)) == pos(PositionKind::NoClaim, "b", "a"));
  CHECK(correlative(pos(PositionKind::Immunity)) == pos(PositionKind::Disability, "b", "a"));
}

TEST_CASE("opposites") {
  CHECK(opposite(pos(PositionKind::ClaimRight)) == pos(PositionKind::NoClaim));
  CHECK(opposite(pos(PositionKind::Duty, "b", "a")) == pos(PositionKind::Freedom, "b", "a"));
  CHECK(opposite(pos(PositionKind::Power)) == pos(PositionKind::Disability));
  CHECK(opposite(pos(PositionKind::Liability)) == pos(PositionKind::Immunity));
}

TEST_CASE("to_formula renderings") {
  Formula content = Formula::stit("b", Formula::know("a", Formula::atom("data")));
  CHECK(to_formula(pos(PositionKind::ClaimRight, "a", "b", content)) == Formula::oblig("b", "a", content));
  CHECK(to_formula(pos(PositionKind::Duty, "b", "a", content)) == Formula::oblig("b", "a", content));
  CHECK(to_formula(pos(PositionKind::Freedom)) ==
        Formula::negation(Formula::oblig("a", "b", Formula::negation(phi()))));
  CHECK(to_formula(pos(PositionKind::NoClaim, "b", "a")) == to_formula(pos(PositionKind::Freedom)));
  CHECK(to_formula(pos(PositionKind::Power)) == Formula::power("a", "b", phi()));
  CHECK(to_formula(pos(PositionKind::Immunity)) == Formula::negation(Formula::power("b", "a", phi())));
}

TEST_CASE("square algebra over all kinds and random contents") {
  testing::FormulaGen gen(3);
  for (int round = 0; round < 25; ++round) {
    Formula content = gen(3);
    for (auto kind : kAllKinds) {
      NormativePosition p{kind, gen.agent(), gen.agent(), content};
      CAPTURE(to_string(kind));
      CHECK(correlative(correlative(p)) == p);
      CHECK(opposite(opposite(p)) == p);
      std::vector<NormativePosition> orbit = {p, correlative(p), opposite(p), correlative(opposite(p))};
      std::set<PositionKind> kinds;
      for (const auto& q : orbit) {
        kinds.insert(q.kind);
        CHECK(square_of(q.kind) == square_of(kind));
      }
      CHECK(kinds.size() == 4);
      CHECK(opposite(correlative(p)) == correlative(opposite(p)));
      CHECK(to_formula(p) == to_formula(correlative(p)));
      if (kind == PositionKind::Freedom) {
        NormativePosition duty{PositionKind::Duty, p.holder, p.counterparty, negate(content)};
        CHECK(to_formula(p) == negate(to_formula(duty)));
      }
    }
  }
}

TEST_CASE("names round trip") {
  for (auto kind : kAllKinds) CHECK(kind_from_string(to_string(kind)) == kind);
  CHECK_FALSE(kind_from_string("privilege").has_value());
}

TEST_CASE("generalize") {
  Formula kill = Formula::negation(Formula::stit("a", Formula::atom("kill")));
  std::vector<NormativePosition> duties = {pos(PositionKind::Duty, "a", "b", kill),
                                           pos(PositionKind::Duty, "a", "c", kill)};
  CHECK(generalize(duties, {"a", "b", "c"}) == Formula::oblig("a", std::nullopt, kill));

  std::vector<NormativePosition> one = {pos(PositionKind::Duty, "a", "b")};
  CHECK(generalize(one, {"a", "b"}) == Formula::oblig("a", std::nullopt, phi()));
  CHECK(generalize(one, {"a", "b"}, true) == Formula::oblig(std::nullopt, std::nullopt, phi()));

  try {
    generalize(one, {"a", "b", "c"});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompleteCover);
  }
  std::vector<NormativePosition> none;
  CHECK_THROWS_AS(generalize(none, {"a"}), Error);
  std::vector<NormativePosition> mixed = {pos(PositionKind::Duty), pos(PositionKind::Power)};
  CHECK_THROWS_AS(generalize(mixed, {"a", "b"}), Error);
  // a content naming an agent keeps the bearer even when impersonal is asked for
  CHECK(generalize(duties, {"a", "b", "c"}, true) == Formula::oblig("a", std::nullopt, kill));
}

TEST_CASE("validation warnings") {
  CHECK(validate(pos(PositionKind::Duty)).empty());
  CHECK(validate(pos(PositionKind::Duty, "a", "a")).size() == 1);
  auto own = pos(PositionKind::ClaimRight, "a", "b", Formula::stit("a", phi()));
  CHECK(validate(own).size() == 1);
  auto other = pos(PositionKind::ClaimRight, "a", "b", Formula::stit("b", phi()));
  CHECK(validate(other).empty());
}
