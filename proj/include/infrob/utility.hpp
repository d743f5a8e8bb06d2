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

#include <cstddef>
#include <vector>

#include "infrob/beliefs.hpp"

namespace infrob {

namespace detail {

inline void check_basic_conjecture(const EconomicEnvironment& env, Player p,
                                   std::size_t type, const Conjecture& c) {
  if (c.player != p) throw DomainError("conjecture belongs to the other player");
  if (c.shape != ConjectureShape::basic(env, p))
    throw DomainError(
        "conjecture must live on states x opponent types x opponent actions");
  if (c.mass.size() != c.shape.size())
    throw DomainError("conjecture mass vector has the wrong length");
  if (type >= env.num_types(p)) throw DomainError("payoff type out of range");
}

}  // namespace detail

/// Expected utility of every pure action against `conjecture`.
inline std::vector<Rational> pure_action_utilities(const EconomicEnvironment& env,
                                                   Player p, std::size_t type,
                                                   const Conjecture& conjecture) {
  detail::check_basic_conjecture(env, p, type, conjecture);
  const auto& shape = conjecture.shape;
  std::vector<Rational> out(env.num_actions(p), Rational(0));
  for (std::size_t k = 0; k < conjecture.mass.size(); ++k) {
    const Rational& m = conjecture.mass[k];
    if (m.is_zero()) continue;
    auto pt = shape.point(k);
    for (std::size_t a = 0; a < out.size(); ++a)
      out[a].add_product(
          m, env.payoff(p, a, pt.opp_action, pt.state, type, pt.opp_type));
  }
  return out;
}

/// U_i(μ_i; α_i, θ_i) = Σ_a Σ_{θ0,θ_{-i}} μ[θ0, θ_{-i}, a_{-i}] α[a_i] u_i.
inline Rational expected_utility(const EconomicEnvironment& env, Player p,
                                 std::size_t type, const Conjecture& conjecture,
                                 const MixedAction& action) {
  if (action.player != p) throw DomainError("mixed action of the other player");
  if (action.weights.size() != env.num_actions(p))
    throw DomainError("mixed action has the wrong number of weights");
  auto per_action = pure_action_utilities(env, p, type, conjecture);
  Rational total(0);
  for (std::size_t a = 0; a < per_action.size(); ++a)
    if (!action.weights[a].is_zero())
      total.add_product(action.weights[a], per_action[a]);
  return total;
}

/// Indices of the maximizers in `values`, ascending.
inline std::vector<std::size_t> argmax_set(const std::vector<Rational>& values) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (out.empty() || values[a] > values[out.front()]) {
      out.assign(1, a);
    } else if (values[a] == values[out.front()]) {
      out.push_back(a);
    }
  }
  return out;
}

/// BR_i(μ_i; θ_i): every pure action attaining the maximum, ascending.
inline std::vector<std::size_t> best_replies(const EconomicEnvironment& env,
                                             Player p, std::size_t type,
                                             const Conjecture& conjecture) {
  return argmax_set(pure_action_utilities(env, p, type, conjecture));
}

/// s_{-i} ∘ π_i(θ_i, y_i): the conjecture over Θ0 × Θ_{-i} × A_{-i} induced by
/// the opponent's strategy.
inline Conjecture pushforward_conjecture(const EconomicEnvironment& env,
                                         const InformationStructure& structure,
                                         Player p, std::size_t type,
                                         std::size_t signal,
                                         const std::vector<std::size_t>& opp_strategy) {
  Player q = opponent(p);
  std::size_t ny = structure.num_signals(q);
  if (opp_strategy.size() != env.num_types(q) * ny)
    throw DomainError("opponent strategy is not total on its information types");
  if (type >= env.num_types(p) || signal >= structure.num_signals(p))
    throw DomainError("information type out of range");
  const auto& belief = structure.belief(p, type, signal);
  auto with_y = ConjectureShape::with_signals(env, p, ny);
  if (belief.size() != with_y.states * with_y.opp_types * ny)
    throw DomainError("belief row does not match the environment");
  Conjecture out = Conjecture::zero(p, ConjectureShape::basic(env, p));
  for (std::size_t s = 0; s < env.num_states(); ++s) {
    for (std::size_t t = 0; t < env.num_types(q); ++t) {
      for (std::size_t y = 0; y < ny; ++y) {
        const Rational& m = belief[(s * env.num_types(q) + t) * ny + y];
        if (m.is_zero()) continue;
        std::size_t a = opp_strategy[t * ny + y];
        if (a >= env.num_actions(q))
          throw DomainError("opponent strategy names an unknown action");
        out.mass[out.shape.index(s, t, 0, a)] += m;
      }
    }
  }
  return out;
}

}  // namespace infrob
