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

#include <string>
#include <vector>

#include "infrob/infrob.hpp"

// Small hand-built games shared by the test suites.
namespace infrob::testing {

inline EconomicEnvironment make_env(std::size_t states, std::size_t a1, std::size_t a2,
                                    std::size_t t1 = 1, std::size_t t2 = 1) {
  std::array<PlayerPrimitives, 2> players{
      PlayerPrimitives{gen::names("a", a1), gen::names("t", t1)},
      PlayerPrimitives{gen::names("b", a2), gen::names("u", t2)}};
  return EconomicEnvironment(gen::names("w", states), players);
}

/// Complete-information bimatrix game from row-major payoff tables.
inline EconomicEnvironment bimatrix(const std::vector<std::vector<std::int64_t>>& u1,
                                    const std::vector<std::vector<std::int64_t>>& u2) {
  auto env = make_env(1, u1.size(), u1[0].size());
  for (std::size_t a = 0; a < u1.size(); ++a)
    for (std::size_t b = 0; b < u1[a].size(); ++b) {
      env.set_utility(Player::first, a, b, 0, 0, 0, Rational(u1[a][b]));
      env.set_utility(Player::second, a, b, 0, 0, 0, Rational(u2[a][b]));
    }
  return env;
}

inline EconomicEnvironment matching_pennies() {
  return bimatrix({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}});
}

inline EconomicEnvironment coordination() { return bimatrix({{2, 0}, {0, 1}}, {{2, 0}, {0, 1}}); }

/// One signal per player; beliefs put mass one on (state, opp type, signal 0).
inline InformationStructure point_structure(const EconomicEnvironment& env, std::size_t state = 0) {
  InformationStructure s;
  for (Player p : kPlayers) {
    s.signals[idx(p)] = {"s"};
    std::size_t nt = env.num_types(opponent(p));
    for (std::size_t t = 0; t < env.num_types(p); ++t) {
      std::vector<Rational> row(env.num_states() * nt, Rational(0));
      row[state * nt] = Rational(1);
      s.beliefs[idx(p)].push_back(row);
    }
  }
  return s;
}

inline gen::GeneratorSpec desk_spec(std::uint64_t seed) {
  gen::GeneratorSpec spec;
  spec.actions = {2, 3};
  spec.types = {1, 2};
  spec.states = {1, 3};
  spec.signals = {1, 3};
  spec.seed = seed;
  return spec;
}

}  // namespace infrob::testing
