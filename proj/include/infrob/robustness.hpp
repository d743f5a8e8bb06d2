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

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "infrob/beliefs.hpp"
#include "infrob/restriction.hpp"
#include "infrob/solvers.hpp"

namespace infrob {

class RobustnessError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ConsistencyViolation {
  Player player;
  std::size_t type;
  std::size_t signal;
  std::vector<Rational> marginal;
};

struct ConsistencyReport {
  bool consistent = true;
  std::vector<ConsistencyViolation> violations;
};

/// Marginal of π_i(θ_i, y_i) over Θ0 × Θ_{-i}.
inline std::vector<Rational> state_type_marginal(const EconomicEnvironment& env,
                                                 const InformationStructure& s, Player p,
                                                 std::size_t type, std::size_t signal) {
  std::size_t ny = s.num_signals(opponent(p));
  const auto& row = s.belief(p, type, signal);
  std::vector<Rational> out(env.num_states() * env.num_types(opponent(p)), Rational(0));
  for (std::size_t k = 0; k < row.size(); ++k)
    if (!row[k].is_zero()) out[k / ny] += row[k];
  return out;
}

/// Membership of the structure in 𝕐(Δ).
inline ConsistencyReport is_consistent(const EconomicEnvironment& env,
                                       const InformationStructure& structure,
                                       const BeliefRestriction& restriction) {
  ConsistencyReport rep;
  for (Player p : kPlayers) {
    for (std::size_t t = 0; t < env.num_types(p); ++t) {
      for (std::size_t y = 0; y < structure.num_signals(p); ++y) {
        auto marg = state_type_marginal(env, structure, p, t, y);
        if (!restriction_admits(restriction.at(p, t), marg))
          rep.violations.push_back({p, t, y, std::move(marg)});
      }
    }
  }
  rep.consistent = rep.violations.empty();
  return rep;
}

namespace detail {

inline void check_dr_result(const EconomicEnvironment& env, const BeliefRestriction& restriction,
                            const SolveResult& dr) {
  if (dr.kind == Concept::icr)
    throw RobustnessError("canonical construction needs a payoff-type solution");
  if (dr.kind == Concept::bfr && !restriction.is_unrestricted())
    throw RobustnessError("a BFR result only matches the unrestricted restriction");
  for (Player p : kPlayers) {
    if (dr.final.num_keys(p) != env.num_types(p))
      throw RobustnessError("solution does not match the environment");
    for (std::size_t t = 0; t < env.num_types(p); ++t) {
      auto acts = dr.final.actions(p, t);
      if (acts.empty())
        throw RobustnessError(player_name(p) + " " + env.types(p)[t] +
                              ": no surviving action (restriction set empty?)");
      for (std::size_t a : acts)
        if (!dr.witnesses.count({p, t, a}))
          throw RobustnessError(player_name(p) + " " + env.types(p)[t] + " " +
                                env.actions(p)[a] + ": missing justifying belief");
    }
  }
}

}  // namespace detail

/// Signals are actions; π_i(θ_i, a_i) is the justifying belief of a_i, with
/// the opponent's action read as its signal. Rows at non-surviving signals
/// repeat the belief of the first surviving action of that type.
inline InformationStructure canonical_structure(const EconomicEnvironment& env,
                                                const BeliefRestriction& restriction,
                                                const SolveResult& dr) {
  detail::check_dr_result(env, restriction, dr);
  InformationStructure s;
  for (Player p : kPlayers) {
    s.signals[idx(p)] = env.actions(p);
    for (std::size_t t = 0; t < env.num_types(p); ++t) {
      std::size_t fallback = *dr.final.first_action(p, t);
      for (std::size_t a = 0; a < env.num_actions(p); ++a) {
        std::size_t source = dr.final.contains(p, t, a) ? a : fallback;
        // Θ0 × Θ_{-i} × A_{-i} and Θ0 × Θ_{-i} × Y_{-i} share one layout.
        s.beliefs[idx(p)].push_back(dr.witnesses.at({p, t, source}).belief.mass);
      }
    }
  }
  if (!is_consistent(env, s, restriction).consistent)
    throw std::logic_error("canonical structure is inconsistent with its restriction");
  return s;
}

/// s_i(θ_i, a_i) = a_i for surviving a_i, else the action whose belief fills
/// that row of the canonical structure.
inline StrategyProfile obedient_profile(const SolveResult& dr) {
  StrategyProfile prof;
  for (Player p : kPlayers) {
    for (std::size_t t = 0; t < dr.final.num_keys(p); ++t) {
      auto fallback = dr.final.first_action(p, t);
      if (!fallback) throw RobustnessError("no surviving action at some payoff type");
      std::size_t n = dr.final.sets[idx(p)][t].size();
      for (std::size_t a = 0; a < n; ++a)
        prof.actions[idx(p)].push_back(dr.final.contains(p, t, a) ? a : *fallback);
    }
  }
  return prof;
}

// ---------------------------------------------------------------------------
// Union characterizations.

struct CoverageRecord {
  Player player;
  std::size_t type;
  std::size_t action;
  /// Signal of the canonical structure at which the action is realized.
  std::size_t signal;
  bool confirmed;
};

struct StructureCheck {
  std::size_t index;
  bool confirmed = true;
  bool skipped = false;
  /// Number of ICR actions (or BNE actions) compared.
  std::size_t checked = 0;
};

struct Counterexample {
  enum class Direction : std::uint8_t { coverage, containment };
  Direction direction;
  /// Index of the sampled structure; nullopt for the canonical structure.
  std::optional<std::size_t> structure;
  Player player;
  std::size_t type;
  std::size_t signal;
  std::size_t action;
};

struct UnionReport {
  ActionCorrespondence restricted;  // ΔR final
  InformationStructure canonical;
  std::vector<CoverageRecord> forward;
  std::vector<StructureCheck> reverse;
  std::vector<Counterexample> counterexamples;
};

namespace detail {

inline void check_samples(const EconomicEnvironment& env, const BeliefRestriction& restriction,
                          const std::vector<InformationStructure>& samples) {
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (!validate_structure(samples[k], env).empty())
      throw RobustnessError("sampled structure " + std::to_string(k) + " is malformed");
    if (!is_consistent(env, samples[k], restriction).consistent)
      throw RobustnessError("sampled structure " + std::to_string(k) +
                            " is inconsistent with the restriction");
  }
}

}  // namespace detail

/// ΔR^∞(θ_i) = ⋃_{𝒴 ∈ 𝕐(Δ)} ⋃_{y_i} ICR^{∞,𝒴}(θ_i, y_i), checked on one
/// instance: coverage constructively via the canonical structure, containment
/// on every sampled structure.
inline UnionReport check_union(const EconomicEnvironment& env,
                               const BeliefRestriction& restriction,
                               const std::vector<InformationStructure>& samples) {
  detail::check_samples(env, restriction, samples);
  SolveOptions quiet{false};
  auto dr = solve_delta_r(env, restriction, quiet);
  UnionReport rep;
  rep.restricted = dr.final;
  rep.canonical = canonical_structure(env, restriction, dr);

  auto icr = solve_icr(env, rep.canonical, quiet);
  for (Player p : kPlayers) {
    for (std::size_t t = 0; t < env.num_types(p); ++t) {
      for (std::size_t a : dr.final.actions(p, t)) {
        std::size_t key = rep.canonical.info_type_index(p, t, a);
        bool ok = icr.final.contains(p, key, a);
        rep.forward.push_back({p, t, a, a, ok});
        if (!ok)
          rep.counterexamples.push_back(
              {Counterexample::Direction::coverage, std::nullopt, p, t, a, a});
      }
    }
  }

  for (std::size_t k = 0; k < samples.size(); ++k) {
    auto sample_icr = solve_icr(env, samples[k], quiet);
    StructureCheck chk{k};
    for (Player p : kPlayers) {
      std::size_t ny = samples[k].num_signals(p);
      for (std::size_t key = 0; key < sample_icr.final.num_keys(p); ++key) {
        for (std::size_t a : sample_icr.final.actions(p, key)) {
          ++chk.checked;
          if (!dr.final.contains(p, key / ny, a)) {
            chk.confirmed = false;
            rep.counterexamples.push_back({Counterexample::Direction::containment, k, p,
                                           key / ny, key % ny, a});
          }
        }
      }
    }
    rep.reverse.push_back(chk);
  }
  return rep;
}

struct BneUnionReport {
  ActionCorrespondence restricted;
  InformationStructure canonical;
  StrategyProfile obedient;
  /// The obedient profile is a best reply at every information type.
  bool obedient_is_equilibrium = false;
  /// Obedient profile found by full enumeration; nullopt if the cap was hit.
  std::optional<bool> obedient_enumerated;
  std::vector<CoverageRecord> coverage;
  std::vector<StructureCheck> containment;
  std::vector<Counterexample> counterexamples;
};

/// ΔR^∞(θ_i) = ⋃_{𝒴 ∈ 𝕐(Δ)} ⋃_{s ∈ BNE^𝒴} ⋃_{y_i} s_i(θ_i, y_i) on one
/// instance. Coverage: the obedient profile of the canonical structure.
/// Containment: every pure equilibrium of every sampled structure.
inline BneUnionReport check_bne_union(const EconomicEnvironment& env,
                                      const BeliefRestriction& restriction,
                                      const std::vector<InformationStructure>& samples,
                                      const BneOptions& opts = {}) {
  detail::check_samples(env, restriction, samples);
  auto dr = solve_delta_r(env, restriction, SolveOptions{false});
  BneUnionReport rep;
  rep.restricted = dr.final;
  rep.canonical = canonical_structure(env, restriction, dr);
  rep.obedient = obedient_profile(dr);
  rep.obedient_is_equilibrium = is_bayes_nash(env, rep.canonical, rep.obedient);
  if (profile_count(env, rep.canonical, opts.cap)) {
    auto all = enumerate_pure_bne(env, rep.canonical, opts);
    rep.obedient_enumerated =
        std::binary_search(all.profiles.begin(), all.profiles.end(), rep.obedient);
  }
  bool obedient_ok = rep.obedient_is_equilibrium && rep.obedient_enumerated.value_or(true);
  for (Player p : kPlayers) {
    for (std::size_t t = 0; t < env.num_types(p); ++t) {
      for (std::size_t a : dr.final.actions(p, t)) {
        std::size_t key = rep.canonical.info_type_index(p, t, a);
        bool ok = obedient_ok && rep.obedient.actions[idx(p)][key] == a;
        rep.coverage.push_back({p, t, a, a, ok});
        if (!ok)
          rep.counterexamples.push_back(
              {Counterexample::Direction::coverage, std::nullopt, p, t, a, a});
      }
    }
  }

  for (std::size_t k = 0; k < samples.size(); ++k) {
    StructureCheck chk{k};
    if (!profile_count(env, samples[k], opts.cap)) {
      chk.skipped = true;
      rep.containment.push_back(chk);
      continue;
    }
    auto bne = enumerate_pure_bne(env, samples[k], opts);
    for (const auto& prof : bne.profiles) {
      for (Player p : kPlayers) {
        std::size_t ny = samples[k].num_signals(p);
        for (std::size_t key = 0; key < prof.actions[idx(p)].size(); ++key) {
          std::size_t a = prof.actions[idx(p)][key];
          ++chk.checked;
          if (!dr.final.contains(p, key / ny, a)) {
            chk.confirmed = false;
            rep.counterexamples.push_back({Counterexample::Direction::containment, k, p,
                                           key / ny, key % ny, a});
          }
        }
      }
    }
    rep.containment.push_back(chk);
  }
  return rep;
}

}  // namespace infrob
