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
#include <string>
#include <variant>
#include <vector>

#include "infrob/beliefs.hpp"
#include "infrob/lp.hpp"

namespace infrob {

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s(0);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero() && !b[k].is_zero()) s.add_product(a[k], b[k]);
  return s;
}

inline bool constraint_holds(const LinearConstraint& c,
                             const std::vector<Rational>& x) {
  Rational lhs = dot(c.coeffs, x);
  switch (c.relation) {
    case Relation::less_equal: return lhs <= c.rhs;
    case Relation::greater_equal: return lhs >= c.rhs;
    case Relation::equal: return lhs == c.rhs;
  }
  return false;
}

/// Membership of a distribution over Θ0 × Θ_{-i} in Δ_{i,θ_i}.
inline bool restriction_admits(const RestrictionEntry& entry,
                               const std::vector<Rational>& marginal) {
  struct Visitor {
    const std::vector<Rational>& m;
    bool operator()(const Unrestricted&) const { return true; }
    bool operator()(const SupportRestriction& r) const {
      for (std::size_t k = 0; k < m.size(); ++k)
        if (!m[k].is_zero() && !r.allowed.at(k)) return false;
      return true;
    }
    bool operator()(const PolytopeRestriction& r) const {
      for (const auto& c : r.constraints)
        if (!constraint_holds(c, m)) return false;
      return true;
    }
    bool operator()(const FiniteBeliefSet& r) const {
      for (const auto& b : r.beliefs)
        if (b == m) return true;
      return false;
    }
  };
  return std::visit(Visitor{marginal}, entry);
}

/// Polytope ∩ simplex as an LP over Θ0 × Θ_{-i} coordinates.
inline lp::LinearSystem polytope_system(const PolytopeRestriction& poly,
                                        std::size_t dim) {
  lp::LinearSystem sys;
  sys.num_variables = dim;
  sys.add_normalization();
  for (const auto& c : poly.constraints) {
    switch (c.relation) {
      case Relation::less_equal:
        sys.inequalities.push_back({c.coeffs, c.rhs});
        break;
      case Relation::greater_equal: {
        lp::Row row{c.coeffs, -c.rhs};
        for (auto& v : row.coeffs) v = -v;
        sys.inequalities.push_back(std::move(row));
        break;
      }
      case Relation::equal:
        sys.equalities.push_back({c.coeffs, c.rhs});
        break;
    }
  }
  return sys;
}

inline std::vector<Violation> validate_restriction(
    const BeliefRestriction& restriction, const EconomicEnvironment& env) {
  std::vector<Violation> out;
  for (Player p : kPlayers) {
    const auto& per = restriction.entries[idx(p)];
    if (per.size() != env.num_types(p)) {
      out.push_back({player_name(p) + ": expected " +
                     std::to_string(env.num_types(p)) +
                     " restriction entries, got " + std::to_string(per.size())});
      continue;
    }
    std::size_t dim = env.num_states() * env.num_types(opponent(p));
    for (std::size_t t = 0; t < per.size(); ++t) {
      std::string where = player_name(p) + " " + env.types(p)[t];
      const auto& e = per[t];
      if (const auto* s = std::get_if<SupportRestriction>(&e)) {
        if (s->allowed.size() != dim) {
          out.push_back({where + ": support mask has wrong size"});
        } else if (std::find(s->allowed.begin(), s->allowed.end(), true) ==
                   s->allowed.end()) {
          out.push_back({where + ": support restriction allows nothing"});
        }
      } else if (const auto* poly = std::get_if<PolytopeRestriction>(&e)) {
        bool sized = true;
        for (const auto& c : poly->constraints)
          sized = sized && c.coeffs.size() == dim;
        if (!sized) {
          out.push_back({where + ": polytope constraint has wrong width"});
        } else if (!lp::solve_feasibility(polytope_system(*poly, dim)).feasible) {
          out.push_back({where + ": polytope does not meet the simplex"});
        }
      } else if (const auto* fin = std::get_if<FiniteBeliefSet>(&e)) {
        if (fin->beliefs.empty())
          out.push_back({where + ": finite belief set is empty"});
        for (std::size_t k = 0; k < fin->beliefs.size(); ++k) {
          if (fin->beliefs[k].size() != dim || !is_distribution(fin->beliefs[k]))
            out.push_back({where + ": belief " + std::to_string(k) +
                           " is not a distribution"});
        }
      }
    }
  }
  return out;
}

}  // namespace infrob
