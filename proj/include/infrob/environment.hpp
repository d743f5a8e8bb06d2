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

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "infrob/rational.hpp"

namespace infrob {

/// The two players. Internally 0-based; printed as "player1"/"player2".
enum class Player : std::uint8_t { first = 0, second = 1 };

inline constexpr std::array<Player, 2> kPlayers{Player::first, Player::second};

constexpr std::size_t idx(Player p) { return static_cast<std::size_t>(p); }
constexpr Player opponent(Player p) {
  return p == Player::first ? Player::second : Player::first;
}
inline std::string player_name(Player p) {
  return "player" + std::to_string(idx(p) + 1);
}

/// Raised when an argument lives on the wrong product space or refers to an
/// index outside its set.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A broken invariant found by one of the validate_* functions.
struct Violation {
  std::string what;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct PlayerPrimitives {
  std::vector<std::string> actions;
  std::vector<std::string> types;
  friend bool operator==(const PlayerPrimitives&,
                         const PlayerPrimitives&) = default;
};

/// States of nature, per-player actions and payoff types, and the two dense
/// utility tensors keyed by (a1, a2, state, type1, type2).
class EconomicEnvironment {
 public:
  EconomicEnvironment() = default;
  EconomicEnvironment(std::vector<std::string> states,
                      std::array<PlayerPrimitives, 2> players)
      : states_(std::move(states)), players_(std::move(players)) {
    for (auto& u : utility_) u.assign(tensor_size(), Rational(0));
  }

  std::size_t num_states() const { return states_.size(); }
  std::size_t num_actions(Player p) const {
    return players_[idx(p)].actions.size();
  }
  std::size_t num_types(Player p) const {
    return players_[idx(p)].types.size();
  }

  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& actions(Player p) const {
    return players_[idx(p)].actions;
  }
  const std::vector<std::string>& types(Player p) const {
    return players_[idx(p)].types;
  }

  std::size_t tensor_size() const {
    return num_actions(Player::first) * num_actions(Player::second) *
           num_states() * num_types(Player::first) * num_types(Player::second);
  }

  /// Flat index of (a1, a2, state, type1, type2), last coordinate fastest.
  std::size_t tensor_index(std::size_t a1, std::size_t a2, std::size_t state,
                           std::size_t t1, std::size_t t2) const {
    return (((a1 * num_actions(Player::second) + a2) * num_states() + state) *
                num_types(Player::first) +
            t1) *
               num_types(Player::second) +
           t2;
  }

  const Rational& utility(Player p, std::size_t a1, std::size_t a2,
                          std::size_t state, std::size_t t1,
                          std::size_t t2) const {
    return utility_[idx(p)][tensor_index(a1, a2, state, t1, t2)];
  }
  void set_utility(Player p, std::size_t a1, std::size_t a2, std::size_t state,
                   std::size_t t1, std::size_t t2, Rational value) {
    utility_[idx(p)].at(tensor_index(a1, a2, state, t1, t2)) =
        std::move(value);
  }

  /// u_i seen from player p: own action/type first, opponent's second.
  const Rational& payoff(Player p, std::size_t own_action,
                         std::size_t opp_action, std::size_t state,
                         std::size_t own_type, std::size_t opp_type) const {
    if (p == Player::first)
      return utility(p, own_action, opp_action, state, own_type, opp_type);
    return utility(p, opp_action, own_action, state, opp_type, own_type);
  }

  const std::vector<Rational>& utility_tensor(Player p) const {
    return utility_[idx(p)];
  }
  std::vector<Rational>& utility_tensor(Player p) { return utility_[idx(p)]; }

  friend bool operator==(const EconomicEnvironment&,
                         const EconomicEnvironment&) = default;

 private:
  std::vector<std::string> states_;
  std::array<PlayerPrimitives, 2> players_;
  std::array<std::vector<Rational>, 2> utility_;
};

inline std::vector<Violation> validate_environment(
    const EconomicEnvironment& env) {
  std::vector<Violation> out;
  if (env.num_states() == 0) out.push_back({"states of nature empty"});
  for (Player p : kPlayers) {
    if (env.num_actions(p) == 0)
      out.push_back({player_name(p) + ": action set empty"});
    if (env.num_types(p) == 0)
      out.push_back({player_name(p) + ": payoff type set empty"});
    if (env.utility_tensor(p).size() != env.tensor_size())
      out.push_back({player_name(p) + ": utility tensor has " +
                     std::to_string(env.utility_tensor(p).size()) +
                     " entries, expected " +
                     std::to_string(env.tensor_size())});
  }
  return out;
}

}  // namespace infrob
