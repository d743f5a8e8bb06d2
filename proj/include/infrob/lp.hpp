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
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "infrob/rational.hpp"

namespace infrob::lp {

struct Row {
  std::vector<Rational> coeffs;
  Rational rhs;
};

/// Nonnegative variables x; equalities row·x = rhs; inequalities row·x <= rhs.
struct LinearSystem {
  std::size_t num_variables = 0;
  std::vector<Row> equalities;
  std::vector<Row> inequalities;
  /// Optional variable names used by `dump`.
  std::vector<std::string> labels;

  /// Appends Σx = 1.
  void add_normalization() {
    equalities.push_back({std::vector<Rational>(num_variables, Rational(1)),
                          Rational(1)});
  }
};

class MalformedSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FeasibilityResult {
  bool feasible = false;
  /// Exact solution when feasible.
  std::vector<Rational> witness;
};

inline void check_well_formed(const LinearSystem& sys) {
  auto check = [&](const std::vector<Row>& rows, const char* what) {
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r].coeffs.size() != sys.num_variables)
        throw MalformedSystem(std::string(what) + " row " + std::to_string(r) +
                              " has " + std::to_string(rows[r].coeffs.size()) +
                              " coefficients, expected " +
                              std::to_string(sys.num_variables));
  };
  check(sys.equalities, "equality");
  check(sys.inequalities, "inequality");
  if (!sys.labels.empty() && sys.labels.size() != sys.num_variables)
    throw MalformedSystem("label count does not match variable count");
}

/// Exact substitution check of x against every constraint (and x >= 0).
inline bool satisfies(const LinearSystem& sys, const std::vector<Rational>& x) {
  if (x.size() != sys.num_variables) return false;
  for (const auto& v : x)
    if (v.is_negative()) return false;
  auto lhs = [&](const Row& row) {
    Rational s(0);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!row.coeffs[j].is_zero() && !x[j].is_zero()) s.add_product(row.coeffs[j], x[j]);
    return s;
  };
  for (const auto& row : sys.equalities)
    if (lhs(row) != row.rhs) return false;
  for (const auto& row : sys.inequalities)
    if (lhs(row) > row.rhs) return false;
  return true;
}

namespace detail {

/// Phase-1 simplex tableau with Bland's rule. Columns: original variables,
/// then one slack per inequality, then artificials.
class PhaseOne {
 public:
  explicit PhaseOne(const LinearSystem& sys) : n_(sys.num_variables) {
    std::size_t m_eq = sys.equalities.size();
    std::size_t m_in = sys.inequalities.size();
    m_ = m_eq + m_in;
    slack0_ = n_;
    art0_ = n_ + m_in;

    // Rows needing an artificial: equalities, and inequalities whose rhs is
    // negative (slack coefficient -1 after negation).
    std::vector<bool> needs_art(m_, false);
    std::size_t num_art = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      bool need = r < m_eq || sys.inequalities[r - m_eq].rhs.is_negative();
      needs_art[r] = need;
      num_art += need;
    }
    cols_ = art0_ + num_art;
    tab_.assign(m_ + 1, std::vector<Rational>(cols_ + 1, Rational(0)));
    basis_.assign(m_, 0);

    std::size_t next_art = art0_;
    for (std::size_t r = 0; r < m_; ++r) {
      const Row& src = r < m_eq ? sys.equalities[r] : sys.inequalities[r - m_eq];
      bool negate = src.rhs.is_negative();
      auto& row = tab_[r];
      for (std::size_t j = 0; j < n_; ++j)
        row[j] = negate ? -src.coeffs[j] : src.coeffs[j];
      row[cols_] = negate ? -src.rhs : src.rhs;
      if (r >= m_eq) row[slack0_ + (r - m_eq)] = Rational(negate ? -1 : 1);
      if (needs_art[r]) {
        row[next_art] = Rational(1);
        basis_[r] = next_art++;
      } else {
        basis_[r] = slack0_ + (r - m_eq);
      }
    }
    // Objective row holds reduced costs of minimizing Σ artificials.
    auto& obj = tab_[m_];
    for (std::size_t r = 0; r < m_; ++r) {
      if (!needs_art[r]) continue;
      for (std::size_t j = 0; j < art0_; ++j) obj[j] -= tab_[r][j];
      obj[cols_] -= tab_[r][cols_];
    }
  }

  FeasibilityResult run() {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < art0_ && !enter; ++j)
        if (tab_[m_][j].is_negative()) enter = j;
      if (!enter) break;
      std::size_t col = *enter;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (!tab_[r][col].is_positive()) continue;
        Rational ratio = tab_[r][cols_] / tab_[r][col];
        if (!leave || ratio < best ||
            (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      // Phase 1 is bounded below by zero, so a leaving row always exists.
      if (!leave) throw std::logic_error("phase-1 simplex: unbounded direction");
      pivot(*leave, col);
    }
    FeasibilityResult res;
    if (!tab_[m_][cols_].is_zero()) return res;
    res.feasible = true;
    res.witness.assign(n_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] < n_) res.witness[basis_[r]] = tab_[r][cols_];
    return res;
  }

 private:
  void pivot(std::size_t prow, std::size_t pcol) {
    auto& pr = tab_[prow];
    Rational inv = Rational(1) / pr[pcol];
    for (auto& v : pr)
      if (!v.is_zero()) v *= inv;
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == prow || tab_[r][pcol].is_zero()) continue;
      Rational factor = tab_[r][pcol];
      auto& row = tab_[r];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (!pr[j].is_zero()) row[j].sub_product(factor, pr[j]);
    }
    basis_[prow] = pcol;
  }

  std::size_t n_, m_ = 0, cols_ = 0, slack0_ = 0, art0_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Decides exactly whether the system has a nonnegative solution and returns
/// one if so. The witness is re-checked by substitution before returning.
inline FeasibilityResult solve_feasibility(const LinearSystem& sys) {
  check_well_formed(sys);
  if (sys.num_variables == 0) {
    FeasibilityResult res;
    std::vector<Rational> empty;
    res.feasible = satisfies(sys, empty);
    return res;
  }
  FeasibilityResult res = detail::PhaseOne(sys).run();
  if (res.feasible && !satisfies(sys, res.witness))
    throw std::logic_error("simplex witness failed substitution check");
  return res;
}

/// Plain-text listing, one constraint per line, rationals as p/q.
inline std::string dump(const LinearSystem& sys) {
  std::ostringstream os;
  auto name = [&](std::size_t j) {
    return sys.labels.empty() ? "x" + std::to_string(j) : sys.labels[j];
  };
  auto write = [&](const Row& row, const char* rel) {
    bool first = true;
    for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
      if (row.coeffs[j].is_zero()) continue;
      if (!first) os << " + ";
      os << row.coeffs[j] << "*" << name(j);
      first = false;
    }
    if (first) os << "0";
    os << " " << rel << " " << row.rhs << "\n";
  };
  os << "variables " << sys.num_variables << " (all >= 0)\n";
  for (const auto& row : sys.equalities) write(row, "=");
  for (const auto& row : sys.inequalities) write(row, "<=");
  return os.str();
}

}  // namespace infrob::lp
