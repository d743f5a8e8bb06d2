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
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "infrob/beliefs.hpp"
#include "infrob/justification.hpp"
#include "infrob/restriction.hpp"
#include "infrob/utility.hpp"

// Brute-force and dual-side oracles. Nothing here calls lp::solve_feasibility
// or the elimination solvers, so they can be used to cross-check them.
namespace infrob::oracles {

namespace detail {

/// max c·x s.t. A x <= b, x >= 0, with b >= 0 (origin feasible). Dense
/// primal simplex, Bland's rule. Returns nullopt when unbounded.
class MaxSimplex {
 public:
  MaxSimplex(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
             const std::vector<Rational>& c)
      : m_(a.size()), n_(c.size()) {
    tab_.assign(m_ + 1, std::vector<Rational>(n_ + m_ + 1, Rational(0)));
    basic_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      if (b[r].is_negative()) throw std::invalid_argument("MaxSimplex: origin infeasible");
      for (std::size_t j = 0; j < n_; ++j) tab_[r][j] = a[r][j];
      tab_[r][n_ + r] = Rational(1);
      tab_[r][n_ + m_] = b[r];
      basic_[r] = n_ + r;
    }
    for (std::size_t j = 0; j < n_; ++j) tab_[m_][j] = -c[j];
  }

  std::optional<Rational> maximize() {
    std::size_t width = n_ + m_;
    for (;;) {
      std::size_t enter = width;
      for (std::size_t j = 0; j < width; ++j) {
        if (tab_[m_][j].is_negative()) {
          enter = j;
          break;
        }
      }
      if (enter == width) return tab_[m_][width];
      std::size_t leave = m_;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (!tab_[r][enter].is_positive()) continue;
        Rational ratio = tab_[r][width] / tab_[r][enter];
        if (leave == m_ || ratio < best || (ratio == best && basic_[r] < basic_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == m_) return std::nullopt;
      Rational inv = Rational(1) / tab_[leave][enter];
      for (auto& v : tab_[leave]) v *= inv;
      for (std::size_t r = 0; r <= m_; ++r) {
        if (r == leave || tab_[r][enter].is_zero()) continue;
        Rational f = tab_[r][enter];
        for (std::size_t j = 0; j <= width; ++j) tab_[r][j] -= f * tab_[leave][j];
      }
      basic_[leave] = enter;
    }
  }

 private:
  std::size_t m_, n_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<std::size_t> basic_;
};

}  // namespace detail

/// True iff some mixture over rows of `payoff` (rows: own actions, columns:
/// opponent-side points) beats row `candidate` strictly at every column.
/// Solved as: maximize the minimum gap e and test e > 0.
inline bool strictly_dominated(const std::vector<std::vector<Rational>>& payoff,
                               std::size_t candidate) {
  std::size_t rows = payoff.size();
  if (rows <= 1) return false;
  std::size_t cols = payoff[candidate].size();
  if (cols == 0) return false;
  // Variables: α_b for b != candidate (α_candidate = 1 - Σ α_b), then e.
  std::size_t nv = rows;  // (rows - 1) mixture weights + e
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<Rational> row(nv, Rational(0));
    std::size_t v = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == candidate) continue;
      row[v++] = payoff[candidate][c] - payoff[r][c];
    }
    row[nv - 1] = Rational(1);
    a.push_back(std::move(row));
    b.emplace_back(0);
  }
  std::vector<Rational> mix(nv, Rational(1));
  mix[nv - 1] = Rational(0);
  a.push_back(std::move(mix));
  b.emplace_back(1);
  std::vector<Rational> obj(nv, Rational(0));
  obj[nv - 1] = Rational(1);
  auto best = detail::MaxSimplex(a, b, obj).maximize();
  if (!best) throw std::logic_error("dominance LP unbounded");
  return best->is_positive();
}

/// BFR computed as iterated deletion of ex-post strictly dominated actions.
inline ActionCorrespondence bfr_by_expost_dominance(const EconomicEnvironment& env) {
  auto cur = ActionCorrespondence::full(env);
  for (;;) {
    auto next = cur;
    for (Player p : kPlayers) {
      Player q = opponent(p);
      for (std::size_t t = 0; t < env.num_types(p); ++t) {
        std::vector<std::vector<Rational>> payoff(env.num_actions(p));
        for (std::size_t s = 0; s < env.num_states(); ++s)
          for (std::size_t ot = 0; ot < env.num_types(q); ++ot)
            for (std::size_t b : cur.actions(q, ot))
              for (std::size_t a = 0; a < env.num_actions(p); ++a)
                payoff[a].push_back(env.payoff(p, a, b, s, t, ot));
        for (std::size_t a : cur.actions(p, t))
          if (strictly_dominated(payoff, a)) next.sets[idx(p)][t][a] = false;
      }
    }
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

/// Correlated rationalizability of the complete-information game at the
/// fixed payoff state (state, type1, type2). Point-mass best replies are
/// accepted directly; the rest go through the dominance LP.
inline std::array<std::vector<bool>, 2> complete_info_rationalizability(
    const EconomicEnvironment& env, std::size_t state, std::size_t type1, std::size_t type2) {
  std::array<std::size_t, 2> types{type1, type2};
  std::array<std::vector<bool>, 2> cur{std::vector<bool>(env.num_actions(Player::first), true),
                                       std::vector<bool>(env.num_actions(Player::second), true)};
  for (;;) {
    auto next = cur;
    for (Player p : kPlayers) {
      Player q = opponent(p);
      std::vector<std::size_t> opp;
      for (std::size_t b = 0; b < env.num_actions(q); ++b)
        if (cur[idx(q)][b]) opp.push_back(b);
      std::vector<std::vector<Rational>> payoff(env.num_actions(p));
      for (std::size_t b : opp)
        for (std::size_t a = 0; a < env.num_actions(p); ++a)
          payoff[a].push_back(env.payoff(p, a, b, state, types[idx(p)], types[idx(q)]));
      for (std::size_t a = 0; a < env.num_actions(p); ++a) {
        if (!cur[idx(p)][a]) continue;
        bool point_best = false;
        for (std::size_t col = 0; col < opp.size() && !point_best; ++col) {
          bool best = true;
          for (std::size_t o = 0; o < env.num_actions(p) && best; ++o)
            best = payoff[o][col] <= payoff[a][col];
          point_best = best;
        }
        if (!point_best && strictly_dominated(payoff, a)) next[idx(p)][a] = false;
      }
    }
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

/// Searches grid conjectures (all masses k/d, d <= resolution) over the
/// query's allowed points. True implies the query is feasible; false says
/// nothing.
inline bool membership_by_grid(const EconomicEnvironment& env, const JustificationQuery& q,
                               std::size_t resolution, std::size_t max_points = 2'000'000) {
  if (resolution == 0) throw std::invalid_argument("grid resolution must be positive");
  std::vector<std::size_t> pts;
  for (std::size_t k = 0; k < q.shape.size(); ++k)
    if (q.support.empty() || q.support[k]) pts.push_back(k);
  if (pts.empty()) return false;
  std::size_t visited = 0;
  Conjecture mu = Conjecture::zero(q.player, q.shape);
  std::vector<std::size_t> counts(pts.size(), 0);
  for (std::size_t d = 1; d <= resolution; ++d) {
    // Compositions of d into pts.size() nonnegative parts.
    std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t i, std::size_t left) {
      if (i + 1 == pts.size()) {
        counts[i] = left;
        if (++visited > max_points) return false;
        for (std::size_t v = 0; v < pts.size(); ++v)
          mu.mass[pts[v]] = Rational(static_cast<std::int64_t>(counts[v]),
                                     static_cast<std::int64_t>(d));
        return justifies(env, q, mu);
      }
      for (std::size_t c = 0; c <= left; ++c) {
        counts[i] = c;
        if (place(i + 1, left - c)) return true;
        if (visited > max_points) return false;
      }
      return false;
    };
    if (place(0, d)) return true;
  }
  return false;
}

}  // namespace infrob::oracles
