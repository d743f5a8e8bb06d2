// Copyright 2026 The infrob Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. All checks are exact.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "infrob/cli.hpp"
#include "infrob/infrob.hpp"
#include "test_support.hpp"

namespace {

using namespace infrob;
using Kind = gen::RestrictionKind;

constexpr std::size_t kStructuresPerEnv = 20;

/// Desk scale: |A_i| <= 3, |Θ_i| <= 2, |Θ0| <= 3, |Y_i| <= 3.
gen::GeneratorSpec desk(std::uint64_t suite, std::uint64_t k) {
  return testing::desk_spec(gen::mix_seed(suite, k));
}

struct Tally {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) fail(what);
  }
};

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Suites 1-3 share their instances: the equilibrium checks run on the same
// environments and sampled structures as the union checks.
struct UnionSuites {
  Tally union_checks[4];  // indexed by restriction kind
  Tally equilibria;
};

void union_instance(UnionSuites& out, Kind kind, std::uint64_t suite, std::uint64_t k) {
  auto spec = desk(suite, k);
  auto env = gen::random_environment(spec);
  auto r = gen::random_restriction(env, kind, gen::mix_seed(spec.seed, 1));
  auto samples = gen::sample_structures(env, r, spec, kStructuresPerEnv, gen::mix_seed(spec.seed, 2));
  std::string tag = gen::restriction_kind_name(kind) + " instance " + std::to_string(k);

  auto& t = out.union_checks[static_cast<int>(kind)];
  ++t.instances;
  auto start = std::chrono::steady_clock::now();
  auto rep = check_union(env, r, samples);
  t.expect(rep.counterexamples.empty(), tag + ": union counterexample");
  t.expect(rep.forward.size() == rep.restricted.total_size(), tag + ": forward incomplete");
  if (kind == Kind::unrestricted)
    t.expect(rep.restricted == solve_bfr(env, {.keep_trace = false}).final,
             tag + ": unrestricted result differs from BFR");
  for (const auto& chk : rep.reverse) t.expect(chk.confirmed, tag + ": reverse inclusion");
  t.seconds += since(start);

  auto& c = out.equilibria;
  ++c.instances;
  start = std::chrono::steady_clock::now();
  auto bne = check_bne_union(env, r, samples);
  c.expect(bne.obedient_is_equilibrium, tag + ": obedient profile is not an equilibrium");
  c.expect(bne.obedient_enumerated.value_or(true), tag + ": obedient profile not enumerated");
  c.expect(bne.counterexamples.empty(), tag + ": equilibrium union counterexample");
  for (const auto& chk : bne.containment) {
    c.expect(!chk.skipped, tag + ": structure over the enumeration cap");
    c.expect(chk.confirmed, tag + ": equilibrium action outside the restricted set");
  }
  c.seconds += since(start);
}

Tally oracle_equivalence() {
  Tally t;
  for (std::uint64_t k = 0; k < 200; ++k) {
    auto env = gen::random_environment(desk(4, k));
    ++t.instances;
    t.expect(oracles::bfr_by_expost_dominance(env) == solve_bfr(env, {.keep_trace = false}).final,
             "environment " + std::to_string(k));
  }
  return t;
}

Tally degenerate_equivalences() {
  Tally t;
  for (std::uint64_t k = 0; k < 100; ++k) {
    auto spec = desk(5, k);
    spec.states = {1, 1};
    spec.types = {1, 1};
    auto env = gen::random_environment(spec);
    ++t.instances;
    auto oracle = oracles::complete_info_rationalizability(env, 0, 0, 0);
    std::string tag = "complete-information game " + std::to_string(k);
    auto bfr = solve_bfr(env, {.keep_trace = false});
    auto dr = solve_delta_r(env, BeliefRestriction::unrestricted(env), {.keep_trace = false});
    auto icr = solve_icr(env, testing::point_structure(env), {.keep_trace = false});
    for (Player p : kPlayers) {
      t.expect(bfr.final.sets[idx(p)][0] == oracle[idx(p)], tag + ": bfr");
      t.expect(dr.final.sets[idx(p)][0] == oracle[idx(p)], tag + ": dr");
      t.expect(icr.final.sets[idx(p)][0] == oracle[idx(p)], tag + ": icr");
    }
  }
  for (std::uint64_t k = 0; k < 100; ++k) {
    auto spec = desk(6, k);
    spec.types = {1, 1};
    spec.states = {2, 3};
    auto env = gen::random_environment(spec);
    ++t.instances;
    std::size_t pinned = k % env.num_states();
    std::vector<Rational> point(env.num_states(), Rational(0));
    point[pinned] = Rational(1);
    auto r = BeliefRestriction::unrestricted(env);
    for (Player p : kPlayers) r.entries[idx(p)][0] = FiniteBeliefSet{{point}};
    auto dr = solve_delta_r(env, r, {.keep_trace = false});
    auto oracle = oracles::complete_info_rationalizability(env, pinned, 0, 0);
    for (Player p : kPlayers)
      t.expect(dr.final.sets[idx(p)][0] == oracle[idx(p)],
               "point-mass restriction " + std::to_string(k));
  }
  return t;
}

EconomicEnvironment affine_image(const EconomicEnvironment& env, std::uint64_t seed) {
  gen::Rng rng(seed);
  auto out = env;
  for (Player p : kPlayers)
    for (std::size_t t = 0; t < env.num_types(p); ++t) {
      Rational c(rng.uniform(1, 5), rng.uniform(1, 4)), d(rng.uniform(-7, 7), rng.uniform(1, 3));
      for (std::size_t a1 = 0; a1 < env.num_actions(Player::first); ++a1)
        for (std::size_t a2 = 0; a2 < env.num_actions(Player::second); ++a2)
          for (std::size_t s = 0; s < env.num_states(); ++s)
            for (std::size_t o = 0; o < env.num_types(opponent(p)); ++o) {
              std::size_t t1 = p == Player::first ? t : o, t2 = p == Player::first ? o : t;
              out.set_utility(p, a1, a2, s, t1, t2, c * env.utility(p, a1, a2, s, t1, t2) + d);
            }
    }
  return out;
}

void check_solution(Tally& t, const EconomicEnvironment& env, const SolveResult& r,
                    const SolveContext& ctx, const ActionCorrespondence& full,
                    const std::string& tag) {
  t.expect(!r.rounds.empty() && r.rounds.front() == full, tag + ": round 0 is not full");
  for (std::size_t n = 1; n < r.rounds.size(); ++n)
    t.expect(r.rounds[n].subset_of(r.rounds[n - 1]), tag + ": rounds not monotone");
  t.expect(r.rounds.size() >= 2 && r.rounds.back() == r.final &&
               r.rounds[r.rounds.size() - 2] == r.final,
           tag + ": trace did not converge");
  // Every round but the confirming one removes at least one action.
  t.expect(r.num_rounds <= detail::round_bound(full) + 1, tag + ": round bound exceeded");
  for (Player p : kPlayers)
    for (std::size_t k = 0; k < r.final.num_keys(p); ++k)
      t.expect(!r.final.actions(p, k).empty(), tag + ": empty final set");
  t.expect(r.witnesses.size() == r.final.total_size(), tag + ": witness missing");
  t.expect(verify_fixed_point(env, r.final, ctx).holds, tag + ": not a fixed point");
}

Tally structural_invariants() {
  Tally t;
  for (std::uint64_t k = 0; k < 200; ++k) {
    auto spec = desk(7, k);
    auto env = gen::random_environment(spec);
    auto r = gen::random_restriction(env, static_cast<Kind>(k % 4), gen::mix_seed(spec.seed, 1));
    auto s = gen::random_consistent_structure(env, r, spec);
    auto image = affine_image(env, gen::mix_seed(spec.seed, 3));
    std::string tag = "seed " + std::to_string(k);
    ++t.instances;

    auto bfr = solve_bfr(env);
    auto dr = solve_delta_r(env, r);
    auto icr = solve_icr(env, s);
    check_solution(t, env, bfr, {Concept::bfr, nullptr, nullptr}, ActionCorrespondence::full(env),
                   tag + " bfr");
    check_solution(t, env, dr, {Concept::delta_r, &r, nullptr}, ActionCorrespondence::full(env),
                   tag + " dr");
    check_solution(t, env, icr, {Concept::icr, nullptr, &s}, ActionCorrespondence::full(env, s),
                   tag + " icr");
    t.expect(dr.final.subset_of(bfr.final), tag + ": dr not inside bfr");
    for (Player p : kPlayers)
      for (std::size_t key = 0; key < icr.final.num_keys(p); ++key)
        for (std::size_t a : icr.final.actions(p, key))
          t.expect(dr.final.contains(p, icr.final.type_of(p, key), a),
                   tag + ": icr not inside dr");

    SolveOptions quiet{false};
    t.expect(solve_bfr(image, quiet).final == bfr.final, tag + ": bfr not affine invariant");
    t.expect(solve_delta_r(image, r, quiet).final == dr.final, tag + ": dr not affine invariant");
    t.expect(solve_icr(image, s, quiet).final == icr.final, tag + ": icr not affine invariant");
    if (profile_count(env, s, BneOptions{}.cap)) {
      auto bne = enumerate_pure_bne(env, s);
      t.expect(enumerate_pure_bne(image, s).profiles == bne.profiles,
               tag + ": equilibria not affine invariant");
      for (const auto& prof : bne.profiles)
        for (Player p : kPlayers)
          for (std::size_t key = 0; key < prof.actions[idx(p)].size(); ++key)
            t.expect(icr.final.contains(p, key, prof.actions[idx(p)][key]),
                     tag + ": equilibrium action outside icr");
    }
  }
  return t;
}

std::pair<int, std::string> run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"infrob"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str() + "\x1f" + err.str()};
}

Tally cli_determinism() {
  Tally t;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "infrob-acceptance";
  fs::create_directories(dir);
  std::vector<std::string> files;
  for (const char* f : {"pennies.game", "dominant.game", "pinned.game", "support.game",
                        "inconsistent.game", "nostructure.game"})
    files.push_back(std::string(INFROB_GAMES_DIR) + "/" + f);
  for (std::uint64_t k = 0; k < 10; ++k) {
    auto spec = desk(8, k);
    io::GameFile g;
    g.env = gen::random_environment(spec);
    g.restriction = gen::random_restriction(*g.env, static_cast<Kind>(k % 4), spec.seed);
    g.structure = gen::random_consistent_structure(*g.env, *g.restriction, spec);
    g.generator = spec;
    auto path = (dir / ("random" + std::to_string(k) + ".game")).string();
    std::ofstream(path) << io::serialize(g);
    files.push_back(path);
  }
  for (const auto& f : files) {
    std::vector<std::vector<std::string>> commands{
        {"solve", "bfr", f, "--trace", "--witnesses"},
        {"solve", "dr", f, "--trace", "--witnesses"},
        {"solve", "icr", f, "--trace", "--witnesses"},
        {"bne", f},
        {"consistent", f},
        {"canonical", f},
        {"check", "union", f, "--samples", "5", "--seed", "3"},
        {"check", "bne-union", f, "--samples", "5", "--seed", "3"},
        {"gen", "env", "--spec", f},
        {"gen", "structure", "--spec", f},
    };
    ++t.instances;
    for (const auto& cmd : commands) {
      auto a = run_cli(cmd), b = run_cli(cmd);
      std::string line;
      for (const auto& s : cmd) line += s + " ";
      t.expect(a == b, "nondeterministic: " + line);
    }
  }
  fs::remove_all(dir);
  return t;
}

bool print_line(int number, const std::string& title, const Tally& t) {
  bool ok = t.failures == 0 && t.checks > 0;
  std::printf("%s criterion %d: %s -- %zu instances, %zu checks, %zu failures, %.1fs\n",
              ok ? "PASS" : "FAIL", number, title.c_str(), t.instances, t.checks, t.failures,
              t.seconds);
  if (!ok && t.failures) std::printf("    first failure: %s\n", t.first_failure.c_str());
  std::fflush(stdout);
  return ok;
}

/// Runs one criterion; an exception counts as a failure of that criterion.
template <typename Fn>
Tally timed(Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  try {
    t = fn();
  } catch (const std::exception& e) {
    t.fail(std::string("exception: ") + e.what());
  }
  t.seconds = since(start);
  return t;
}

}  // namespace

int main() {
  UnionSuites u;
  auto suites_1_to_3 = [&] {
    for (std::uint64_t k = 0; k < 200; ++k) union_instance(u, Kind::unrestricted, 1, k);
    for (Kind kind : {Kind::support, Kind::polytope, Kind::finite})
      for (std::uint64_t k = 0; k < 100; ++k)
        union_instance(u, kind, 2 + static_cast<std::uint64_t>(kind) * 10, k);
    return Tally{};
  };
  Tally aborted = timed(suites_1_to_3);

  Tally unrestricted = u.union_checks[static_cast<int>(Kind::unrestricted)];
  Tally restricted;
  for (Kind kind : {Kind::support, Kind::polytope, Kind::finite}) {
    const auto& part = u.union_checks[static_cast<int>(kind)];
    restricted.instances += part.instances;
    restricted.checks += part.checks;
    restricted.seconds += part.seconds;
    if (part.failures && !restricted.failures) restricted.first_failure = part.first_failure;
    restricted.failures += part.failures;
  }
  if (aborted.failures)
    for (Tally* t : {&unrestricted, &restricted, &u.equilibria}) t->fail(aborted.first_failure);

  bool ok = true;
  ok &= print_line(1, "ICR union equals BFR (200 envs x 20 structures)", unrestricted);
  ok &= print_line(2, "ICR union over consistent structures equals restricted set (3 x 100 envs)",
                   restricted);
  ok &= print_line(3, "equilibrium coverage and containment on suites 1-2", u.equilibria);
  ok &= print_line(4, "ex-post dominance oracle equals BFR (200 envs)", timed(oracle_equivalence));
  ok &= print_line(5, "complete-information and point-mass degenerate cases",
                   timed(degenerate_equivalences));
  ok &= print_line(6, "structural invariants (200 seeds)", timed(structural_invariants));
  ok &= print_line(7, "CLI byte-identical across runs", timed(cli_determinism));
  return ok ? 0 : 1;
}
