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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "infrob/beliefs.hpp"
#include "infrob/lp.hpp"
#include "infrob/restriction.hpp"
#include "infrob/utility.hpp"

namespace infrob {

/// "Is there a conjecture μ making `candidate` a best reply such that
/// supp μ ⊆ support, marg μ ∈ restriction, and marg μ = marginal_target?"
struct JustificationQuery {
  Player player = Player::first;
  std::size_t payoff_type = 0;
  std::size_t candidate = 0;
  /// Basic (Θ0 × Θ_{-i} × A_{-i}) or signal-extended domain.
  ConjectureShape shape;
  /// Allowed points of the domain; empty means every point.
  std::vector<bool> support;
  /// Δ_{i,θ_i}; nullptr means unrestricted.
  const RestrictionEntry* restriction = nullptr;
  /// Required marginal over Θ0 × Θ_{-i} × Y_{-i}; nullptr means none.
  const std::vector<Rational>* marginal_target = nullptr;
  /// Attach human-readable variable labels (for lp::dump).
  bool label_variables = false;
};

/// One linear system plus the domain point each variable stands for.
struct JustificationSystem {
  lp::LinearSystem system;
  std::vector<std::size_t> points;
  /// Which FiniteBeliefSet element the system pins the marginal to.
  std::optional<std::size_t> belief_element;
};

struct Witness {
  Conjecture belief;
  std::optional<std::size_t> belief_element;
  friend bool operator==(const Witness&, const Witness&) = default;
};

namespace detail {

inline std::string point_label(const EconomicEnvironment& env, Player p,
                               const ConjectureShape& shape, std::size_t flat) {
  auto pt = shape.point(flat);
  Player q = opponent(p);
  std::string s = "mu[" + env.states()[pt.state] + "," + env.types(q)[pt.opp_type];
  if (shape.has_signals()) s += ",y" + std::to_string(pt.opp_signal);
  return s + "," + env.actions(q)[pt.opp_action] + "]";
}

inline void check_query(const EconomicEnvironment& env, const JustificationQuery& q) {
  Player opp = opponent(q.player);
  if (q.candidate >= env.num_actions(q.player))
    throw DomainError("candidate action out of range");
  if (q.payoff_type >= env.num_types(q.player))
    throw DomainError("payoff type out of range");
  if (q.shape.states != env.num_states() ||
      q.shape.opp_types != env.num_types(opp) ||
      q.shape.opp_actions != env.num_actions(opp))
    throw DomainError("conjecture shape does not match the environment");
  if (!q.support.empty() && q.support.size() != q.shape.size())
    throw DomainError("support mask does not match the conjecture domain");
  if (q.marginal_target &&
      q.marginal_target->size() !=
          q.shape.states * q.shape.opp_types * q.shape.signal_extent())
    throw DomainError("marginal target does not match the conjecture domain");
}

}  // namespace detail

/// Encodes the justification conditions as linear systems. Support and
/// zero-mass targets are enforced by omitting variables; best reply as
/// |A_i|-1 inequalities U(μ; a') <= U(μ; candidate). A FiniteBeliefSet yields
/// one system per element (the query is feasible iff any is). An empty result
/// means the query is trivially infeasible.
inline std::vector<JustificationSystem> build_justification_systems(
    const EconomicEnvironment& env, const JustificationQuery& q) {
  detail::check_query(env, q);
  const auto& shape = q.shape;
  std::size_t marg_dim = shape.states * shape.opp_types;

  const auto* finite = q.restriction ? std::get_if<FiniteBeliefSet>(q.restriction) : nullptr;
  const auto* support_r =
      q.restriction ? std::get_if<SupportRestriction>(q.restriction) : nullptr;
  const auto* poly = q.restriction ? std::get_if<PolytopeRestriction>(q.restriction) : nullptr;

  auto base_allowed = [&](std::size_t k) {
    if (!q.support.empty() && !q.support[k]) return false;
    auto pt = shape.point(k);
    if (support_r && !support_r->allowed.at(shape.state_type_index(pt))) return false;
    if (q.marginal_target &&
        (*q.marginal_target)[shape.state_type_signal_index(pt)].is_zero())
      return false;
    return true;
  };

  auto build = [&](const std::vector<Rational>* pinned,
                   std::optional<std::size_t> element)
      -> std::optional<JustificationSystem> {
    JustificationSystem js;
    js.belief_element = element;
    for (std::size_t k = 0; k < shape.size(); ++k) {
      if (!base_allowed(k)) continue;
      if (pinned && (*pinned)[shape.state_type_index(shape.point(k))].is_zero())
        continue;
      js.points.push_back(k);
    }
    if (js.points.empty()) return std::nullopt;
    auto& sys = js.system;
    sys.num_variables = js.points.size();
    if (q.label_variables)
      for (std::size_t k : js.points)
        sys.labels.push_back(detail::point_label(env, q.player, shape, k));
    sys.add_normalization();

    std::size_t n = js.points.size();
    std::vector<ConjectureShape::Point> pts;
    pts.reserve(n);
    for (std::size_t k : js.points) pts.push_back(shape.point(k));

    // Best-reply inequalities.
    for (std::size_t alt = 0; alt < env.num_actions(q.player); ++alt) {
      if (alt == q.candidate) continue;
      lp::Row row{std::vector<Rational>(n), Rational(0)};
      bool nonzero = false;
      for (std::size_t v = 0; v < n; ++v) {
        const auto& pt = pts[v];
        row.coeffs[v] =
            env.payoff(q.player, alt, pt.opp_action, pt.state, q.payoff_type, pt.opp_type) -
            env.payoff(q.player, q.candidate, pt.opp_action, pt.state, q.payoff_type,
                       pt.opp_type);
        nonzero = nonzero || !row.coeffs[v].is_zero();
      }
      if (nonzero) sys.inequalities.push_back(std::move(row));
    }

    // Marginal equalities over Θ0 × Θ_{-i} × Y_{-i}.
    if (q.marginal_target) {
      const auto& target = *q.marginal_target;
      for (std::size_t c = 0; c < target.size(); ++c) {
        if (target[c].is_zero()) continue;
        lp::Row row{std::vector<Rational>(n, Rational(0)), target[c]};
        for (std::size_t v = 0; v < n; ++v)
          if (shape.state_type_signal_index(pts[v]) == c) row.coeffs[v] = Rational(1);
        sys.equalities.push_back(std::move(row));
      }
    }

    // Restriction on the Θ0 × Θ_{-i} marginal.
    auto marginal_row = [&](const std::vector<Rational>& coeffs) {
      std::vector<Rational> row(n);
      for (std::size_t v = 0; v < n; ++v) row[v] = coeffs[shape.state_type_index(pts[v])];
      return row;
    };
    if (pinned) {
      for (std::size_t c = 0; c < marg_dim; ++c) {
        if ((*pinned)[c].is_zero()) continue;
        lp::Row row{std::vector<Rational>(n, Rational(0)), (*pinned)[c]};
        for (std::size_t v = 0; v < n; ++v)
          if (shape.state_type_index(pts[v]) == c) row.coeffs[v] = Rational(1);
        sys.equalities.push_back(std::move(row));
      }
    }
    if (poly) {
      for (const auto& c : poly->constraints) {
        lp::Row row{marginal_row(c.coeffs), c.rhs};
        switch (c.relation) {
          case Relation::less_equal:
            sys.inequalities.push_back(std::move(row));
            break;
          case Relation::greater_equal:
            for (auto& x : row.coeffs) x = -x;
            row.rhs = -row.rhs;
            sys.inequalities.push_back(std::move(row));
            break;
          case Relation::equal:
            sys.equalities.push_back(std::move(row));
            break;
        }
      }
    }
    return js;
  };

  std::vector<JustificationSystem> out;
  if (finite) {
    for (std::size_t e = 0; e < finite->beliefs.size(); ++e)
      if (auto js = build(&finite->beliefs[e], e)) out.push_back(std::move(*js));
  } else if (auto js = build(nullptr, std::nullopt)) {
    out.push_back(std::move(*js));
  }
  return out;
}

/// Direct check of a candidate witness against the query's conditions.
inline bool justifies(const EconomicEnvironment& env, const JustificationQuery& q,
                      const Conjecture& mu) {
  detail::check_query(env, q);
  if (mu.player != q.player || mu.shape != q.shape || !is_distribution(mu.mass))
    return false;
  for (std::size_t k = 0; k < mu.mass.size(); ++k)
    if (!mu.mass[k].is_zero() && !q.support.empty() && !q.support[k]) return false;
  if (q.marginal_target && mu.state_type_signal_marginal() != *q.marginal_target)
    return false;
  if (q.restriction && !restriction_admits(*q.restriction, mu.state_type_marginal()))
    return false;
  Conjecture plain = mu.shape.has_signals() ? mu.action_marginal() : mu;
  auto br = best_replies(env, q.player, q.payoff_type, plain);
  return std::find(br.begin(), br.end(), q.candidate) != br.end();
}

/// Solves the query; returns a witness conjecture (re-checked) or nullopt.
inline std::optional<Witness> find_justification(const EconomicEnvironment& env,
                                                 const JustificationQuery& q) {
  for (const auto& js : build_justification_systems(env, q)) {
    auto res = lp::solve_feasibility(js.system);
    if (!res.feasible) continue;
    Witness w{Conjecture::zero(q.player, q.shape), js.belief_element};
    for (std::size_t v = 0; v < js.points.size(); ++v)
      w.belief.mass[js.points[v]] = res.witness[v];
    if (!justifies(env, q, w.belief))
      throw std::logic_error("justification witness failed the direct check");
    return w;
  }
  return std::nullopt;
}

}  // namespace infrob
