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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "infrob/beliefs.hpp"
#include "infrob/justification.hpp"
#include "infrob/restriction.hpp"
#include "infrob/utility.hpp"

namespace infrob {

enum class Concept : std::uint8_t { bfr, delta_r, icr };

inline std::string concept_name(Concept c) {
  switch (c) {
    case Concept::bfr: return "bfr";
    case Concept::delta_r: return "dr";
    case Concept::icr: return "icr";
  }
  return "?";
}

/// Which iterate is being computed, and the data it depends on.
struct SolveContext {
  Concept kind = Concept::bfr;
  const BeliefRestriction* restriction = nullptr;
  const InformationStructure* structure = nullptr;
};

struct WitnessKey {
  Player player;
  std::size_t key;
  std::size_t action;
  friend auto operator<=>(const WitnessKey&, const WitnessKey&) = default;
};

using WitnessMap = std::map<WitnessKey, Witness>;

struct SolveOptions {
  bool keep_trace = true;
};

struct SolveResult {
  Concept kind = Concept::bfr;
  /// rounds[0] is the full correspondence; the last two entries coincide.
  /// Empty when the trace was disabled.
  std::vector<ActionCorrespondence> rounds;
  ActionCorrespondence final;
  /// Number of elimination rounds run, including the confirming one.
  std::size_t num_rounds = 0;
  /// Justifying conjecture for every surviving action, against `final`.
  WitnessMap witnesses;
};

namespace detail {

inline void check_context(const EconomicEnvironment& env, const SolveContext& ctx) {
  if (ctx.kind == Concept::delta_r && !ctx.restriction)
    throw DomainError("delta-rationalizability needs a belief restriction");
  if (ctx.kind == Concept::icr && !ctx.structure)
    throw DomainError("interim correlated rationalizability needs an information structure");
  if (ctx.restriction) {
    for (Player p : kPlayers)
      if (ctx.restriction->entries[idx(p)].size() != env.num_types(p))
        throw DomainError("belief restriction does not match the environment");
  }
}

/// Builds the justification query for (player, key, action) against the
/// opponent's part of `against`. `support` is reused as scratch storage.
inline JustificationQuery make_query(const EconomicEnvironment& env, const SolveContext& ctx,
                                     Player p, std::size_t key, std::size_t action,
                                     const ActionCorrespondence& against) {
  Player q = opponent(p);
  JustificationQuery query;
  query.player = p;
  query.candidate = action;
  if (ctx.kind == Concept::icr) {
    std::size_t ny_own = ctx.structure->num_signals(p);
    std::size_t ny_opp = ctx.structure->num_signals(q);
    query.payoff_type = key / ny_own;
    query.shape = ConjectureShape::with_signals(env, p, ny_opp);
    query.marginal_target = &ctx.structure->beliefs[idx(p)].at(key);
    query.support.resize(query.shape.size());
    for (std::size_t k = 0; k < query.shape.size(); ++k) {
      auto pt = query.shape.point(k);
      query.support[k] = against.contains(q, pt.opp_type * ny_opp + pt.opp_signal, pt.opp_action);
    }
  } else {
    query.payoff_type = key;
    query.shape = ConjectureShape::basic(env, p);
    if (ctx.kind == Concept::delta_r) query.restriction = &ctx.restriction->at(p, key);
    query.support.resize(query.shape.size());
    for (std::size_t k = 0; k < query.shape.size(); ++k) {
      auto pt = query.shape.point(k);
      query.support[k] = against.contains(q, pt.opp_type, pt.opp_action);
    }
  }
  return query;
}

inline bool support_within(const Conjecture& mu, const std::vector<bool>& support) {
  for (std::size_t k = 0; k < mu.mass.size(); ++k)
    if (!mu.mass[k].is_zero() && !support[k]) return false;
  return true;
}

struct StepResult {
  ActionCorrespondence next;
  WitnessMap witnesses;
  std::vector<WitnessKey> dropped;
};

/// One simultaneous elimination round. Witnesses in `cache` whose support
/// still lies inside the current graph are reused without solving.
inline StepResult elimination_step(const EconomicEnvironment& env, const SolveContext& ctx,
                                   const ActionCorrespondence& prev,
                                   const WitnessMap* cache) {
  StepResult out{prev, {}, {}};
  for (Player p : kPlayers) {
    for (std::size_t key = 0; key < prev.num_keys(p); ++key) {
      for (std::size_t a : prev.actions(p, key)) {
        WitnessKey wk{p, key, a};
        auto query = make_query(env, ctx, p, key, a, prev);
        std::optional<Witness> w;
        if (cache) {
          auto it = cache->find(wk);
          if (it != cache->end() && support_within(it->second.belief, query.support))
            w = it->second;
        }
        if (!w) w = find_justification(env, query);
        if (w) {
          out.witnesses.emplace(wk, std::move(*w));
        } else {
          out.next.sets[idx(p)][key][a] = false;
          out.dropped.push_back(wk);
        }
      }
    }
  }
  return out;
}

inline std::size_t round_bound(const ActionCorrespondence& c) {
  std::size_t bound = 0;
  for (Player p : kPlayers)
    for (const auto& mask : c.sets[idx(p)]) bound += mask.size();
  return bound;
}

inline SolveResult run_elimination(const EconomicEnvironment& env, const SolveContext& ctx,
                                   ActionCorrespondence start, const SolveOptions& opts) {
  check_context(env, ctx);
  SolveResult res;
  res.kind = ctx.kind;
  std::size_t bound = round_bound(start);
  if (opts.keep_trace) res.rounds.push_back(start);
  ActionCorrespondence current = std::move(start);
  WitnessMap cache;
  for (;;) {
    auto step = elimination_step(env, ctx, current, res.num_rounds ? &cache : nullptr);
    ++res.num_rounds;
    if (opts.keep_trace) res.rounds.push_back(step.next);
    cache = std::move(step.witnesses);
    if (step.dropped.empty()) break;
    current = std::move(step.next);
    if (res.num_rounds > bound)
      throw std::logic_error("elimination exceeded its round bound");
  }
  res.final = std::move(current);
  res.witnesses = std::move(cache);
  return res;
}

}  // namespace detail

/// Belief-free rationalizability by simultaneous iterated elimination.
inline SolveResult solve_bfr(const EconomicEnvironment& env, const SolveOptions& opts = {}) {
  return detail::run_elimination(env, {Concept::bfr, nullptr, nullptr},
                                 ActionCorrespondence::full(env), opts);
}

/// Δ-rationalizability: BFR with conjecture marginals held inside Δ_{i,θ_i}.
inline SolveResult solve_delta_r(const EconomicEnvironment& env,
                                 const BeliefRestriction& restriction,
                                 const SolveOptions& opts = {}) {
  return detail::run_elimination(env, {Concept::delta_r, &restriction, nullptr},
                                 ActionCorrespondence::full(env), opts);
}

/// Interim correlated rationalizability in the Bayesian game (env, structure).
inline SolveResult solve_icr(const EconomicEnvironment& env,
                             const InformationStructure& structure,
                             const SolveOptions& opts = {}) {
  return detail::run_elimination(env, {Concept::icr, nullptr, &structure},
                                 ActionCorrespondence::full(env, structure), opts);
}

struct FixedPointCertificate {
  bool holds = false;
  WitnessMap witnesses;
  /// Listed actions that have no justification against the correspondence.
  std::vector<WitnessKey> violations;
};

/// Checks the fixed-point property: every listed action is justified by a
/// conjecture supported on the correspondence itself.
inline FixedPointCertificate verify_fixed_point(const EconomicEnvironment& env,
                                                const ActionCorrespondence& corr,
                                                const SolveContext& ctx) {
  detail::check_context(env, ctx);
  bool info_keys = ctx.kind == Concept::icr;
  if ((corr.key_kind == KeyKind::information_type) != info_keys)
    throw DomainError("correspondence key kind does not match the solution concept");
  for (Player p : kPlayers) {
    std::size_t keys = env.num_types(p) * (info_keys ? ctx.structure->num_signals(p) : 1);
    if (corr.num_keys(p) != keys ||
        corr.signals[idx(p)] != (info_keys ? ctx.structure->num_signals(p) : 1))
      throw DomainError(player_name(p) + ": correspondence has the wrong keys");
    for (const auto& mask : corr.sets[idx(p)])
      if (mask.size() != env.num_actions(p))
        throw DomainError(player_name(p) + ": correspondence mask has the wrong width");
  }
  auto step = detail::elimination_step(env, ctx, corr, nullptr);
  return {step.dropped.empty(), std::move(step.witnesses), std::move(step.dropped)};
}

// ---------------------------------------------------------------------------
// Pure Bayes-Nash equilibria.

class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(const std::string& required, std::uint64_t cap)
      : std::runtime_error("pure-strategy enumeration needs " + required +
                           " profiles, cap is " + std::to_string(cap)),
        required_(required) {}
  const std::string& required() const { return required_; }

 private:
  std::string required_;
};

struct BneOptions {
  std::uint64_t cap = 1'000'000;
};

struct BneResult {
  std::vector<StrategyProfile> profiles;
};

/// Equilibrium condition checked at every information type through the
/// pushforward conjecture.
inline bool is_bayes_nash(const EconomicEnvironment& env, const InformationStructure& structure,
                          const StrategyProfile& s) {
  for (Player p : kPlayers) {
    for (std::size_t t = 0; t < env.num_types(p); ++t) {
      for (std::size_t y = 0; y < structure.num_signals(p); ++y) {
        auto mu = pushforward_conjecture(env, structure, p, t, y, s.actions[idx(opponent(p))]);
        auto br = best_replies(env, p, t, mu);
        std::size_t chosen = s.actions[idx(p)].at(structure.info_type_index(p, t, y));
        if (!std::binary_search(br.begin(), br.end(), chosen)) return false;
      }
    }
  }
  return true;
}

/// Number of pure profiles, or nullopt if it exceeds `cap`.
inline std::optional<std::uint64_t> profile_count(const EconomicEnvironment& env,
                                                  const InformationStructure& structure,
                                                  std::uint64_t cap) {
  unsigned __int128 total = 1;
  for (Player p : kPlayers) {
    std::size_t keys = env.num_types(p) * structure.num_signals(p);
    for (std::size_t k = 0; k < keys; ++k) {
      total *= env.num_actions(p);
      if (total > cap) return std::nullopt;
    }
  }
  return static_cast<std::uint64_t>(total);
}

namespace detail {

inline std::string profile_count_string(const EconomicEnvironment& env,
                                        const InformationStructure& structure) {
  std::string out;
  for (Player p : kPlayers) {
    if (!out.empty()) out += " * ";
    out += std::to_string(env.num_actions(p)) + "^" +
           std::to_string(env.num_types(p) * structure.num_signals(p));
  }
  return out;
}

/// contrib[x][(t,y) * |A_{-i}| + b][a]: expected-utility contribution of
/// opponent information type (t, y) playing b, for own action a at own
/// information type x.
inline std::vector<std::vector<std::vector<Rational>>> interim_contributions(
    const EconomicEnvironment& env, const InformationStructure& structure, Player p) {
  Player q = opponent(p);
  std::size_t ny_p = structure.num_signals(p), ny_q = structure.num_signals(q);
  std::size_t keys_q = env.num_types(q) * ny_q;
  std::vector<std::vector<std::vector<Rational>>> out(env.num_types(p) * ny_p);
  for (std::size_t t = 0; t < env.num_types(p); ++t) {
    for (std::size_t y = 0; y < ny_p; ++y) {
      auto& cx = out[t * ny_p + y];
      cx.assign(keys_q * env.num_actions(q), std::vector<Rational>(env.num_actions(p)));
      const auto& belief = structure.belief(p, t, y);
      for (std::size_t s = 0; s < env.num_states(); ++s) {
        for (std::size_t ot = 0; ot < env.num_types(q); ++ot) {
          for (std::size_t oy = 0; oy < ny_q; ++oy) {
            const Rational& m = belief[(s * env.num_types(q) + ot) * ny_q + oy];
            if (m.is_zero()) continue;
            for (std::size_t b = 0; b < env.num_actions(q); ++b)
              for (std::size_t a = 0; a < env.num_actions(p); ++a)
                cx[(ot * ny_q + oy) * env.num_actions(q) + b][a].add_product(
                    m, env.payoff(p, a, b, s, t, ot));
          }
        }
      }
    }
  }
  return out;
}

/// Best-reply set at every information type of p against opponent strategy.
inline std::vector<std::vector<std::size_t>> best_reply_sets(
    const std::vector<std::vector<std::vector<Rational>>>& contrib, std::size_t own_actions,
    std::size_t opp_actions, const std::vector<std::size_t>& opp_strategy) {
  std::vector<std::vector<std::size_t>> out(contrib.size());
  std::vector<Rational> eu(own_actions);
  for (std::size_t x = 0; x < contrib.size(); ++x) {
    for (auto& v : eu) v = Rational(0);
    for (std::size_t k = 0; k < opp_strategy.size(); ++k) {
      const auto& c = contrib[x][k * opp_actions + opp_strategy[k]];
      for (std::size_t a = 0; a < own_actions; ++a) eu[a] += c[a];
    }
    out[x] = argmax_set(eu);
  }
  return out;
}

/// Advances a mixed-radix counter; returns false after the last value.
inline bool advance(std::vector<std::size_t>& digits,
                    const std::vector<std::vector<std::size_t>>& choices,
                    std::vector<std::size_t>& pos) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++pos[k] < choices[k].size()) {
      digits[k] = choices[k][pos[k]];
      return true;
    }
    pos[k] = 0;
    digits[k] = choices[k][0];
  }
  return false;
}

}  // namespace detail

/// All pure Bayes-Nash equilibria of (env, structure), in lexicographic order.
/// Exhaustive over the opponent-side strategies; the own side is restricted
/// to best-reply sets, which loses no equilibrium.
inline BneResult enumerate_pure_bne(const EconomicEnvironment& env,
                                    const InformationStructure& structure,
                                    const BneOptions& opts = {}) {
  if (!profile_count(env, structure, opts.cap))
    throw EnumerationCapExceeded(detail::profile_count_string(env, structure), opts.cap);

  auto keys = [&](Player p) { return env.num_types(p) * structure.num_signals(p); };
  // Enumerate the player with fewer strategies in the outer loop.
  auto strategies = [&](Player p) {
    long double n = 1;
    for (std::size_t k = 0; k < keys(p); ++k) n *= env.num_actions(p);
    return n;
  };
  Player outer = strategies(Player::first) <= strategies(Player::second) ? Player::first
                                                                         : Player::second;
  Player inner = opponent(outer);
  auto c_inner = detail::interim_contributions(env, structure, inner);
  auto c_outer = detail::interim_contributions(env, structure, outer);

  BneResult res;
  std::vector<std::vector<std::size_t>> all_outer(keys(outer));
  for (auto& c : all_outer)
    for (std::size_t a = 0; a < env.num_actions(outer); ++a) c.push_back(a);
  std::vector<std::size_t> s_outer(keys(outer), 0), pos_outer(keys(outer), 0);
  do {
    auto br_inner = detail::best_reply_sets(c_inner, env.num_actions(inner),
                                            env.num_actions(outer), s_outer);
    std::vector<std::size_t> s_inner(keys(inner)), pos_inner(keys(inner), 0);
    for (std::size_t k = 0; k < s_inner.size(); ++k) s_inner[k] = br_inner[k][0];
    do {
      auto br_outer = detail::best_reply_sets(c_outer, env.num_actions(outer),
                                              env.num_actions(inner), s_inner);
      bool ok = true;
      for (std::size_t k = 0; k < s_outer.size() && ok; ++k)
        ok = std::binary_search(br_outer[k].begin(), br_outer[k].end(), s_outer[k]);
      if (ok) {
        StrategyProfile prof;
        prof.actions[idx(outer)] = s_outer;
        prof.actions[idx(inner)] = s_inner;
        res.profiles.push_back(std::move(prof));
      }
    } while (detail::advance(s_inner, br_inner, pos_inner));
  } while (detail::advance(s_outer, all_outer, pos_outer));
  std::sort(res.profiles.begin(), res.profiles.end());
  return res;
}

}  // namespace infrob
