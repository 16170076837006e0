#pragma once

#include <random>
#include <string>
#include <vector>

#include "normargue/semantics.hpp"
#include "normargue/theory.hpp"

namespace normargue::testing {

inline std::string fixture(const std::string& name) { return std::string(NORMARGUE_FIXTURES) + "/" + name; }

// Random formula over agents a, b and a handful of atoms.
class FormulaGen {
 public:
  explicit FormulaGen(unsigned seed) : rng_(seed) {}

  Formula operator()(int depth = 4) {
    if (depth == 0 || pick(4) == 0) return leaf();
    Formula f = (*this)(depth - 1);
    switch (pick(15)) {
      case 0: return Formula::negation(f);
      case 1: return Formula::conjunction(f, (*this)(depth - 1));
      case 2: return Formula::disjunction(f, (*this)(depth - 1));
      case 3: return Formula::implication(f, (*this)(depth - 1));
      case 4: return Formula::box(f);
      case 5: return Formula::diamond(f);
      case 6: return Formula::know(agent(), f);
      case 7: return Formula::oblig(std::nullopt, std::nullopt, f);
      case 8: return Formula::oblig(agent(), std::nullopt, f);
      case 9: return Formula::oblig(agent(), agent(), f);
      case 10: return Formula::perm(pick(2) ? std::optional<AgentId>(agent()) : std::nullopt, f);
      case 11: return Formula::stit(agent(), f);
      case 12: return Formula::right(agent(), f);
      case 13: return Formula::power(agent(), agent(), f);
      default: return Formula::negation(Formula::negation(f));
    }
  }

  AgentId agent() { return pick(2) ? "a" : "b"; }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Formula leaf() {
    static const std::vector<std::string> names = {"p", "q", "misuse", "treat", "x_1"};
    switch (pick(6)) {
      case 0: return Formula::rule_atom(pick(2) ? "r1" : "fcp#2");
      case 1: return Formula::atom("ill", {agent()});
      default: return Formula::atom(names[pick(static_cast<int>(names.size()))]);
    }
  }

  std::mt19937 rng_;
};

inline ArgumentationFramework random_af(std::mt19937& rng, std::size_t max_n = 12) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_n)(rng);
  double density = std::uniform_real_distribution<double>(0.05, 0.4)(rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<ArgId, ArgId>> edges;
  for (ArgId a = 0; a < n; ++a) {
    for (ArgId b = 0; b < n; ++b) {
      if (edge(rng)) edges.emplace_back(a, b);
    }
  }
  return ArgumentationFramework::from_edges(n, edges);
}

}  // namespace normargue::testing
