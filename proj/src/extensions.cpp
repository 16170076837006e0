#include <algorithm>
#include <cstdint>

#include "normargue/error.hpp"
#include "normargue/semantics.hpp"

namespace normargue {

ArgumentationFramework::ArgumentationFramework(std::size_t n, std::vector<Defeat> defeats)
    : n_(n), defeats_(std::move(defeats)), attackers_(n), targets_(n) {
  std::sort(defeats_.begin(), defeats_.end());
  defeats_.erase(std::unique(defeats_.begin(), defeats_.end()), defeats_.end());
  for (const auto& d : defeats_) {
    if (d.attacker >= n || d.target >= n) {
      throw Error(ErrorKind::InvalidArgument, "defeat refers to an argument outside the framework");
    }
    attackers_[d.target].push_back(d.attacker);
    targets_[d.attacker].push_back(d.target);
  }
  // defeats are sorted by attacker then target, so both lists are already ascending
  for (auto* lists : {&attackers_, &targets_}) {
    for (auto& v : *lists) v.erase(std::unique(v.begin(), v.end()), v.end());
  }
}

ArgumentationFramework ArgumentationFramework::from_edges(
    std::size_t n, const std::vector<std::pair<ArgId, ArgId>>& edges) {
  std::vector<Defeat> defeats;
  for (auto [a, b] : edges) defeats.push_back({a, b, DefeatKind::Undercut, std::string()});
  return ArgumentationFramework(n, std::move(defeats));
}

bool ArgumentationFramework::attacks(ArgId a, ArgId b) const {
  const auto& t = targets_[a];
  return std::binary_search(t.begin(), t.end(), b);
}

bool verify_extension(const ArgumentationFramework& af, const Extension& s) {
  std::vector<char> in(af.size(), 0);
  for (ArgId a : s) {
    if (a >= af.size()) return false;
    in[a] = 1;
  }
  for (ArgId x = 0; x < af.size(); ++x) {
    bool hit = false;
    for (ArgId y : af.attackers_of(x)) hit = hit || in[y];
    if (in[x] == hit) return false;  // inside and attacked, or outside and unattacked
  }
  return true;
}

Extension grounded_extension(const ArgumentationFramework& af) {
  std::size_t n = af.size();
  std::vector<char> in(n, 0), out(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (ArgId x = 0; x < n; ++x) {
      if (in[x] || out[x]) continue;
      const auto& attackers = af.attackers_of(x);
      if (std::all_of(attackers.begin(), attackers.end(), [&](ArgId y) { return out[y]; })) {
        in[x] = 1;
        for (ArgId t : af.targets_of(x)) out[t] = 1;
        changed = true;
      }
    }
  }
  Extension e;
  for (ArgId x = 0; x < n; ++x) {
    if (in[x]) e.push_back(x);
  }
  return e;
}

namespace {

enum Label : std::int8_t { Undec = 0, In = 1, Out = 2 };

// Backtracking over in/out labellings with unit propagation.
class StableSearch {
 public:
  explicit StableSearch(const ArgumentationFramework& af) : af_(af) {}

  // Propagates to a fixpoint; false on contradiction.
  bool propagate(std::vector<Label>& lab) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (ArgId x = 0; x < af_.size(); ++x) {
        const auto& attackers = af_.attackers_of(x);
        if (lab[x] == In) {
          for (ArgId y : attackers) {
            if (lab[y] == In) return false;
            if (lab[y] == Undec) lab[y] = Out, changed = true;
          }
          for (ArgId t : af_.targets_of(x)) {
            if (lab[t] == In) return false;
            if (lab[t] == Undec) lab[t] = Out, changed = true;
          }
          continue;
        }
        std::size_t undecided = 0;
        bool hit = false;
        ArgId candidate = 0;
        for (ArgId y : attackers) {
          if (lab[y] == In) hit = true;
          if (lab[y] == Undec) ++undecided, candidate = y;
        }
        if (hit) {
          if (lab[x] == Undec) lab[x] = Out, changed = true;
          continue;
        }
        if (undecided == 0) {
          // nothing can defeat x any more, so it must be in
          if (lab[x] == Out) return false;
          lab[x] = In;
          changed = true;
        } else if (undecided == 1 && lab[x] == Out) {
          lab[candidate] = In;
          changed = true;
        }
      }
    }
    return true;
  }

  void solve(std::vector<Label> lab, std::vector<Extension>& out) const {
    if (!propagate(lab)) return;
    auto it = std::find(lab.begin(), lab.end(), Undec);
    if (it == lab.end()) {
      Extension e;
      for (ArgId x = 0; x < lab.size(); ++x) {
        if (lab[x] == In) e.push_back(x);
      }
      if (verify_extension(af_, e)) out.push_back(std::move(e));
      return;
    }
    auto x = static_cast<std::size_t>(it - lab.begin());
    lab[x] = In;
    solve(lab, out);
    lab[x] = Out;
    solve(std::move(lab), out);
  }

  // Partial labellings whose subtrees partition the search space.
  std::vector<std::vector<Label>> frontier(std::size_t wanted) const {
    std::vector<std::vector<Label>> level{std::vector<Label>(af_.size(), Undec)};
    while (level.size() < wanted) {
      std::vector<std::vector<Label>> next;
      bool split = false;
      for (auto& lab : level) {
        if (!propagate(lab)) continue;
        auto it = std::find(lab.begin(), lab.end(), Undec);
        if (it == lab.end()) {
          next.push_back(std::move(lab));
          continue;
        }
        split = true;
        auto in = lab;
        in[it - lab.begin()] = In;
        lab[it - lab.begin()] = Out;
        next.push_back(std::move(in));
        next.push_back(std::move(lab));
      }
      level = std::move(next);
      if (!split) break;
    }
    return level;
  }

 private:
  const ArgumentationFramework& af_;
};

void canonical(std::vector<Extension>& exts) {
  std::sort(exts.begin(), exts.end());
  exts.erase(std::unique(exts.begin(), exts.end()), exts.end());
}

}  // namespace

std::vector<Extension> stable_extensions_serial(const ArgumentationFramework& af) {
  std::vector<Extension> out;
  StableSearch(af).solve(std::vector<Label>(af.size(), Undec), out);
  canonical(out);
  return out;
}

std::vector<Extension> stable_extensions(const ArgumentationFramework& af) {
  StableSearch search(af);
  auto tasks = search.frontier(64);
  std::vector<std::vector<Extension>> found(tasks.size());
  const auto n = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) search.solve(std::move(tasks[i]), found[i]);
  std::vector<Extension> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  canonical(out);
  return out;
}

std::vector<Extension> brute_force_stable(const ArgumentationFramework& af) {
  std::size_t n = af.size();
  if (n > kBruteForceLimit) {
    throw Error(ErrorKind::TooLarge, "brute force is limited to " + std::to_string(kBruteForceLimit) +
                                         " arguments, got " + std::to_string(n));
  }
  std::vector<std::uint32_t> attackers(n, 0);
  for (ArgId x = 0; x < n; ++x) {
    for (ArgId y : af.attackers_of(x)) attackers[x] |= std::uint32_t{1} << y;
  }
  const auto total = static_cast<std::int64_t>(std::int64_t{1} << n);
  std::vector<std::uint32_t> hits;
#pragma omp parallel
  {
    std::vector<std::uint32_t> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t m = 0; m < total; ++m) {
      auto s = static_cast<std::uint32_t>(m);
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        bool inside = (s >> x) & 1u;
        bool attacked = (attackers[x] & s) != 0;
        ok = inside != attacked;
      }
      if (ok) local.push_back(s);
    }
#pragma omp critical
    hits.insert(hits.end(), local.begin(), local.end());
  }
  std::vector<Extension> out;
  for (auto s : hits) {
    Extension e;
    for (std::size_t x = 0; x < n; ++x) {
      if ((s >> x) & 1u) e.push_back(x);
    }
    out.push_back(std::move(e));
  }
  canonical(out);
  return out;
}

bool acceptance(const ArgumentSet& args, const std::vector<Extension>& extensions,
                const Formula& conclusion, AcceptanceMode mode) {
  auto holds = [&](const Extension& e) {
    return std::any_of(e.begin(), e.end(), [&](ArgId a) { return args[a].conclusion == conclusion; });
  };
  if (mode == AcceptanceMode::Credulous) return std::any_of(extensions.begin(), extensions.end(), holds);
  return !extensions.empty() && std::all_of(extensions.begin(), extensions.end(), holds);
}

}  // namespace normargue
