// Compares the OpenMP Gamma step and fixpoint against the serial reference on
// quantifier-heavy universes, and checks they agree while at it.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "truthlab/fixpoint.hpp"
#include "truthlab/semantics.hpp"
#include "truthlab/syntax.hpp"

namespace {

using namespace truthlab;
using Clock = std::chrono::steady_clock;

Term rand_term(std::mt19937_64& rng, int depth, VarIndex scope) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 4 : 1);
  switch (pick(rng)) {
    case 0:
      return numeral(std::uniform_int_distribution<std::uint64_t>(0, 3)(rng));
    case 1:
      return scope > 0
                 ? var(std::uniform_int_distribution<VarIndex>(0, scope - 1)(rng))
                 : zero();
    case 2:
      return succ(rand_term(rng, depth - 1, scope));
    case 3:
      return add(rand_term(rng, depth - 1, scope), rand_term(rng, depth - 1, scope));
    default:
      return mul(rand_term(rng, depth - 1, scope), rand_term(rng, depth - 1, scope));
  }
}

Formula rand_sentence(std::mt19937_64& rng, int depth, VarIndex scope) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 3 : 0);
  switch (pick(rng)) {
    case 0:
      return eq(rand_term(rng, 2, scope), rand_term(rng, 2, scope));
    case 1:
      return neg(rand_sentence(rng, depth - 1, scope));
    case 2:
      return disj(rand_sentence(rng, depth - 1, scope),
                  rand_sentence(rng, depth - 1, scope));
    default:
      return exists(scope, rand_sentence(rng, depth - 1, scope + 1));
  }
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t domain = 8;
  int seeds = 40, depth = 5, iters = 5;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string k = argv[i];
    const std::uint64_t v = std::stoull(argv[i + 1]);
    if (k == "--domain")
      domain = v;
    else if (k == "--seeds")
      seeds = static_cast<int>(v);
    else if (k == "--depth")
      depth = static_cast<int>(v);
    else if (k == "--iters")
      iters = static_cast<int>(v);
    else {
      std::cerr << "unknown flag " << k << "\n";
      return 2;
    }
  }

  std::mt19937_64 rng(20240811);
  std::vector<Formula> seed_list;
  seed_list.reserve(seeds);
  for (int i = 0; i < seeds; ++i)
    seed_list.push_back(rand_sentence(rng, depth, 0));

  const BoundedStructure m(domain, {}, {});
  const SentenceUniverse u = build_universe(seed_list, m, kDefaultUniverseCap);
  std::cout << "universe " << u.size() << " members, domain {0.." << domain
            << "}, " << iters << " iterations\n\n";

  const TruthSet empty(u);
  double t_serial = 0, t_parallel = 0;
  TruthSet g_serial(u), g_parallel(u);
  for (int it = 0; it < iters; ++it) {
    auto t0 = Clock::now();
    g_serial = gamma_serial(empty, m, u);
    t_serial += ms_since(t0);
    t0 = Clock::now();
    g_parallel = gamma(empty, m, u);
    t_parallel += ms_since(t0);
  }
  if (g_serial != g_parallel) {
    std::cerr << "FAIL: serial and parallel Gamma disagree\n";
    return 1;
  }
  std::cout << "gamma(empty)      serial " << t_serial / iters << " ms,  parallel "
            << t_parallel / iters << " ms,  speedup "
            << (t_parallel > 0 ? t_serial / t_parallel : 0) << "x\n";

  auto t0 = Clock::now();
  const LfpResult r_serial = least_fixpoint(u, m, false);
  const double lfp_serial = ms_since(t0);
  t0 = Clock::now();
  const LfpResult r_parallel = least_fixpoint(u, m, true);
  const double lfp_parallel = ms_since(t0);
  if (r_serial.fixpoint != r_parallel.fixpoint) {
    std::cerr << "FAIL: serial and parallel fixpoints disagree\n";
    return 1;
  }
  std::cout << "least_fixpoint    serial " << lfp_serial << " ms,  parallel "
            << lfp_parallel << " ms,  speedup "
            << (lfp_parallel > 0 ? lfp_serial / lfp_parallel : 0) << "x  ("
            << r_serial.trace.total_stages << " stages, fixpoint "
            << r_serial.fixpoint.size() << ")\n";
  return 0;
}
