// Times the OpenMP kernels against their serial references on random
// frameworks and a synthetic theory. Usage: bench_semantics [repeats]

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>

#include "normargue/semantics.hpp"

using namespace normargue;

namespace {

template <class F>
double best_ms(int repeats, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

ArgumentationFramework random_af(std::size_t n, double density, std::mt19937& rng) {
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<ArgId, ArgId>> edges;
  for (ArgId a = 0; a < n; ++a) {
    for (ArgId b = 0; b < n; ++b) {
      if (a != b && edge(rng)) edges.emplace_back(a, b);
    }
  }
  return ArgumentationFramework::from_edges(n, edges);
}

// Pairs of mutually attacking arguments plus one-way noise: the number of
// stable extensions grows exponentially with the pair count.
ArgumentationFramework paired_af(std::size_t pairs, std::mt19937& rng) {
  std::size_t n = 2 * pairs;
  std::vector<std::pair<ArgId, ArgId>> edges;
  for (ArgId i = 0; i < n; i += 2) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(i + 1, i);
  }
  std::uniform_int_distribution<ArgId> any(0, n - 1);
  for (std::size_t k = 0; k < pairs / 2; ++k) edges.emplace_back(any(rng), any(rng));
  return ArgumentationFramework::from_edges(n, edges);
}

// Layers of mutually conflicting defeasible claims over ordinary premises.
Theory synthetic_theory(int width) {
  std::string text = "AGENTS: a\n";
  for (int i = 0; i < width; ++i) {
    std::string p = "p" + std::to_string(i);
    text += "PREMISE prem " + p + ": " + p + "\n";
    text += "PREMISE prem n" + p + ": ~" + p + "\n";
    text += "RULE defeasible r" + p + ": " + p + " |~ O_a q" + std::to_string(i % 7) + "\n";
    text += "RULE defeasible s" + p + ": ~" + p + " |~ O_a ~q" + std::to_string(i % 7) + "\n";
  }
  text += "SCHEME fcp off\nSCHEME owp off\n";
  return load_theory(text);
}

void row(const std::string& name, double serial, double parallel) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(3)
            << std::setw(12) << serial << std::setw(12) << parallel << std::setw(9)
            << std::setprecision(2) << serial / parallel << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::mt19937 rng(7);
  std::cout << "threads: " << omp_get_max_threads() << "\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12) << "serial ms"
            << std::setw(12) << "omp ms" << std::setw(10) << "speedup\n";

  for (std::size_t n : {40, 60, 80}) {
    auto af = random_af(n, 3.0 / static_cast<double>(n), rng);
    double s = best_ms(repeats, [&] { (void)stable_extensions_serial(af); });
    double p = best_ms(repeats, [&] { (void)stable_extensions(af); });
    row("stable_extensions n=" + std::to_string(n), s, p);
  }

  for (std::size_t pairs : {12, 16}) {
    auto af = paired_af(pairs, rng);
    double s = best_ms(repeats, [&] { (void)stable_extensions_serial(af); });
    double p = best_ms(repeats, [&] { (void)stable_extensions(af); });
    row("stable_extensions pairs=" + std::to_string(pairs), s, p);
  }

  for (int width : {40, 120}) {
    Theory t = synthetic_theory(width);
    auto args = construct_arguments(t);
    double s = best_ms(repeats, [&] { (void)compute_defeats_serial(args, t, t.defeat); });
    double p = best_ms(repeats, [&] { (void)compute_defeats(args, t, t.defeat); });
    row("compute_defeats args=" + std::to_string(args.size()), s, p);
  }

  auto small = random_af(20, 0.15, rng);
  double brute = best_ms(repeats, [&] { (void)brute_force_stable(small); });
  std::cout << "brute_force_stable n=20 (omp): " << std::fixed << std::setprecision(3) << brute << " ms\n";
  return 0;
}
