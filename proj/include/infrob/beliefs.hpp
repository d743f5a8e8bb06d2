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
#include <array>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "infrob/environment.hpp"

namespace infrob {

/// Index layout for player i's conjectures: Θ0 × Θ_{-i} × [Y_{-i}] × A_{-i},
/// action coordinate fastest. `opp_signals == 0` means no signal axis.
struct ConjectureShape {
  std::size_t states = 0;
  std::size_t opp_types = 0;
  std::size_t opp_signals = 0;
  std::size_t opp_actions = 0;

  bool has_signals() const { return opp_signals != 0; }
  std::size_t signal_extent() const { return has_signals() ? opp_signals : 1; }
  std::size_t size() const {
    return states * opp_types * signal_extent() * opp_actions;
  }
  std::size_t index(std::size_t state, std::size_t opp_type,
                    std::size_t opp_signal, std::size_t opp_action) const {
    return ((state * opp_types + opp_type) * signal_extent() + opp_signal) *
               opp_actions +
           opp_action;
  }

  struct Point {
    std::size_t state, opp_type, opp_signal, opp_action;
  };
  Point point(std::size_t flat) const {
    Point p{};
    p.opp_action = flat % opp_actions;
    flat /= opp_actions;
    p.opp_signal = flat % signal_extent();
    flat /= signal_extent();
    p.opp_type = flat % opp_types;
    p.state = flat / opp_types;
    return p;
  }
  /// Index into Θ0 × Θ_{-i}.
  std::size_t state_type_index(const Point& p) const {
    return p.state * opp_types + p.opp_type;
  }
  /// Index into Θ0 × Θ_{-i} × Y_{-i}.
  std::size_t state_type_signal_index(const Point& p) const {
    return state_type_index(p) * signal_extent() + p.opp_signal;
  }

  static ConjectureShape basic(const EconomicEnvironment& env, Player i) {
    return {env.num_states(), env.num_types(opponent(i)), 0,
            env.num_actions(opponent(i))};
  }
  static ConjectureShape with_signals(const EconomicEnvironment& env, Player i,
                                      std::size_t opp_signals) {
    return {env.num_states(), env.num_types(opponent(i)), opp_signals,
            env.num_actions(opponent(i))};
  }

  friend bool operator==(const ConjectureShape&,
                         const ConjectureShape&) = default;
};

/// A distribution over player i's conjecture domain.
struct Conjecture {
  Player player = Player::first;
  ConjectureShape shape;
  std::vector<Rational> mass;

  static Conjecture zero(Player p, ConjectureShape shape) {
    return {p, shape, std::vector<Rational>(shape.size(), Rational(0))};
  }

  /// Drops the signal axis.
  Conjecture action_marginal() const {
    ConjectureShape s = shape;
    s.opp_signals = 0;
    Conjecture out = zero(player, s);
    for (std::size_t k = 0; k < mass.size(); ++k) {
      if (mass[k].is_zero()) continue;
      auto pt = shape.point(k);
      out.mass[s.index(pt.state, pt.opp_type, 0, pt.opp_action)] += mass[k];
    }
    return out;
  }

  /// Marginal over Θ0 × Θ_{-i}.
  std::vector<Rational> state_type_marginal() const {
    std::vector<Rational> out(shape.states * shape.opp_types, Rational(0));
    for (std::size_t k = 0; k < mass.size(); ++k)
      if (!mass[k].is_zero()) out[shape.state_type_index(shape.point(k))] += mass[k];
    return out;
  }

  /// Marginal over Θ0 × Θ_{-i} × Y_{-i}.
  std::vector<Rational> state_type_signal_marginal() const {
    std::vector<Rational> out(
        shape.states * shape.opp_types * shape.signal_extent(), Rational(0));
    for (std::size_t k = 0; k < mass.size(); ++k)
      if (!mass[k].is_zero())
        out[shape.state_type_signal_index(shape.point(k))] += mass[k];
    return out;
  }

  friend bool operator==(const Conjecture&, const Conjecture&) = default;
};

struct MixedAction {
  Player player = Player::first;
  std::vector<Rational> weights;

  static MixedAction pure(Player p, std::size_t num_actions,
                          std::size_t action) {
    MixedAction m{p, std::vector<Rational>(num_actions, Rational(0))};
    m.weights.at(action) = Rational(1);
    return m;
  }
};

/// True iff all entries are nonnegative and they sum to exactly one.
inline bool is_distribution(const std::vector<Rational>& v) {
  Rational total(0);
  for (const auto& x : v) {
    if (x.is_negative()) return false;
    total += x;
  }
  return total == Rational(1);
}

/// Signals and interim beliefs π_i : Θ_i × Y_i → Δ(Θ0 × Θ_{-i} × Y_{-i}).
struct InformationStructure {
  std::array<std::vector<std::string>, 2> signals;
  /// beliefs[i][type * |Y_i| + signal] is a distribution indexed
  /// (state * |Θ_{-i}| + opp_type) * |Y_{-i}| + opp_signal.
  std::array<std::vector<std::vector<Rational>>, 2> beliefs;

  std::size_t num_signals(Player p) const { return signals[idx(p)].size(); }
  std::size_t info_type_index(Player p, std::size_t type,
                              std::size_t signal) const {
    return type * num_signals(p) + signal;
  }
  const std::vector<Rational>& belief(Player p, std::size_t type,
                                      std::size_t signal) const {
    return beliefs[idx(p)].at(info_type_index(p, type, signal));
  }

  friend bool operator==(const InformationStructure&,
                         const InformationStructure&) = default;
};

inline std::vector<Violation> validate_structure(
    const InformationStructure& s, const EconomicEnvironment& env) {
  std::vector<Violation> out;
  for (Player p : kPlayers) {
    Player q = opponent(p);
    if (s.num_signals(p) == 0)
      out.push_back({player_name(p) + ": signal set empty"});
    std::size_t rows = env.num_types(p) * s.num_signals(p);
    if (s.beliefs[idx(p)].size() != rows) {
      out.push_back({player_name(p) + ": expected " + std::to_string(rows) +
                     " belief rows, got " +
                     std::to_string(s.beliefs[idx(p)].size())});
      continue;
    }
    std::size_t width = env.num_states() * env.num_types(q) * s.num_signals(q);
    for (std::size_t t = 0; t < env.num_types(p); ++t) {
      for (std::size_t y = 0; y < s.num_signals(p); ++y) {
        const auto& row = s.belief(p, t, y);
        std::string where = player_name(p) + " (" + env.types(p)[t] + ", " +
                            s.signals[idx(p)][y] + ")";
        if (row.size() != width) {
          out.push_back({where + ": belief has " + std::to_string(row.size()) +
                         " entries, expected " + std::to_string(width)});
          continue;
        }
        Rational total(0);
        bool negative = false;
        for (const auto& x : row) {
          negative = negative || x.is_negative();
          total += x;
        }
        if (negative) out.push_back({where + ": negative belief mass"});
        if (total != Rational(1))
          out.push_back({where + ": belief sums to " + total.to_string()});
      }
    }
  }
  return out;
}

/// Relation of a linear constraint `coeffs · x REL rhs`.
enum class Relation : std::uint8_t { less_equal, greater_equal, equal };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::less_equal;
  Rational rhs;
  friend bool operator==(const LinearConstraint&,
                         const LinearConstraint&) = default;
};

/// The admissible first-order beliefs Δ_{i,θ_i} ⊆ Δ(Θ0 × Θ_{-i}) for one
/// (player, payoff type). Coordinates are indexed state * |Θ_{-i}| + opp_type.
struct Unrestricted {
  friend bool operator==(const Unrestricted&, const Unrestricted&) = default;
};
struct SupportRestriction {
  std::vector<bool> allowed;
  friend bool operator==(const SupportRestriction&,
                         const SupportRestriction&) = default;
};
struct PolytopeRestriction {
  std::vector<LinearConstraint> constraints;
  friend bool operator==(const PolytopeRestriction&,
                         const PolytopeRestriction&) = default;
};
struct FiniteBeliefSet {
  std::vector<std::vector<Rational>> beliefs;
  friend bool operator==(const FiniteBeliefSet&,
                         const FiniteBeliefSet&) = default;
};

using RestrictionEntry = std::variant<Unrestricted, SupportRestriction,
                                      PolytopeRestriction, FiniteBeliefSet>;

/// Δ = (Δ_{i,θ_i}) for both players.
struct BeliefRestriction {
  std::array<std::vector<RestrictionEntry>, 2> entries;

  static BeliefRestriction unrestricted(const EconomicEnvironment& env) {
    BeliefRestriction r;
    for (Player p : kPlayers)
      r.entries[idx(p)].assign(env.num_types(p), Unrestricted{});
    return r;
  }
  const RestrictionEntry& at(Player p, std::size_t type) const {
    return entries[idx(p)].at(type);
  }
  bool is_unrestricted() const {
    for (const auto& per : entries)
      for (const auto& e : per)
        if (!std::holds_alternative<Unrestricted>(e)) return false;
    return true;
  }

  friend bool operator==(const BeliefRestriction&,
                         const BeliefRestriction&) = default;
};

/// Stores s_i(θ_i, y_i) at index type * |Y_i| + signal.
struct StrategyProfile {
  std::array<std::vector<std::size_t>, 2> actions;

  friend bool operator==(const StrategyProfile&,
                         const StrategyProfile&) = default;
  friend auto operator<=>(const StrategyProfile&,
                          const StrategyProfile&) = default;
};

enum class KeyKind : std::uint8_t { payoff_type, information_type };

/// Per player, per key (payoff type, or information type type*|Y_i|+signal),
/// a subset of A_i stored as a membership mask.
struct ActionCorrespondence {
  KeyKind key_kind = KeyKind::payoff_type;
  /// |Y_i| per player when key_kind is information_type; 1 otherwise.
  std::array<std::size_t, 2> signals{1, 1};
  std::array<std::vector<std::vector<bool>>, 2> sets;

  static ActionCorrespondence full(const EconomicEnvironment& env) {
    ActionCorrespondence c;
    for (Player p : kPlayers)
      c.sets[idx(p)].assign(env.num_types(p),
                            std::vector<bool>(env.num_actions(p), true));
    return c;
  }
  static ActionCorrespondence full(const EconomicEnvironment& env,
                                   const InformationStructure& s) {
    ActionCorrespondence c;
    c.key_kind = KeyKind::information_type;
    for (Player p : kPlayers) {
      c.signals[idx(p)] = s.num_signals(p);
      c.sets[idx(p)].assign(env.num_types(p) * s.num_signals(p),
                            std::vector<bool>(env.num_actions(p), true));
    }
    return c;
  }

  std::size_t num_keys(Player p) const { return sets[idx(p)].size(); }
  /// Payoff type a key belongs to.
  std::size_t type_of(Player p, std::size_t key) const {
    return key / signals[idx(p)];
  }
  bool contains(Player p, std::size_t key, std::size_t action) const {
    return sets[idx(p)].at(key).at(action);
  }
  std::vector<std::size_t> actions(Player p, std::size_t key) const {
    std::vector<std::size_t> out;
    const auto& mask = sets[idx(p)].at(key);
    for (std::size_t a = 0; a < mask.size(); ++a)
      if (mask[a]) out.push_back(a);
    return out;
  }
  std::optional<std::size_t> first_action(Player p, std::size_t key) const {
    const auto& mask = sets[idx(p)].at(key);
    for (std::size_t a = 0; a < mask.size(); ++a)
      if (mask[a]) return a;
    return std::nullopt;
  }
  std::size_t total_size() const {
    std::size_t n = 0;
    for (const auto& per : sets)
      for (const auto& mask : per) n += std::count(mask.begin(), mask.end(), true);
    return n;
  }
  /// Pointwise inclusion; both sides must share key layout.
  bool subset_of(const ActionCorrespondence& o) const {
    if (key_kind != o.key_kind || signals != o.signals) return false;
    for (Player p : kPlayers) {
      if (sets[idx(p)].size() != o.sets[idx(p)].size()) return false;
      for (std::size_t k = 0; k < sets[idx(p)].size(); ++k)
        for (std::size_t a = 0; a < sets[idx(p)][k].size(); ++a)
          if (sets[idx(p)][k][a] && !o.sets[idx(p)][k][a]) return false;
    }
    return true;
  }

  friend bool operator==(const ActionCorrespondence&,
                         const ActionCorrespondence&) = default;
};

}  // namespace infrob
