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
#include <vector>

#include "infrob/beliefs.hpp"
#include "infrob/restriction.hpp"

namespace infrob {

class VertexCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Unique solution of A x = b by exact Gauss-Jordan elimination; nullopt if
/// the system is singular or inconsistent.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b,
                                                         std::size_t dim) {
  std::size_t rows = a.size();
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < dim && rank < rows; ++c) {
    std::size_t r = rank;
    while (r < rows && a[r][c].is_zero()) ++r;
    if (r == rows) continue;
    std::swap(a[r], a[rank]);
    std::swap(b[r], b[rank]);
    Rational inv = Rational(1) / a[rank][c];
    for (auto& v : a[rank]) v *= inv;
    b[rank] *= inv;
    for (std::size_t o = 0; o < rows; ++o) {
      if (o == rank || a[o][c].is_zero()) continue;
      Rational f = a[o][c];
      for (std::size_t j = 0; j < dim; ++j) a[o][j].sub_product(f, a[rank][j]);
      b[o].sub_product(f, b[rank]);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (!b[r].is_zero()) return std::nullopt;
  if (rank != dim) return std::nullopt;
  std::vector<Rational> x(dim);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
  return x;
}

}  // namespace detail

/// Vertices of {x in simplex(dim) : constraints}, by inspecting every choice
/// of tight inequalities. Throws VertexCapExceeded past `max_bases` choices.
inline std::vector<std::vector<Rational>> polytope_vertices(const PolytopeRestriction& poly,
                                                            std::size_t dim,
                                                            std::size_t max_bases = 10'000) {
  std::vector<std::vector<Rational>> eq_a;
  std::vector<Rational> eq_b;
  std::vector<std::vector<Rational>> in_a;  // row · x <= rhs
  std::vector<Rational> in_b;
  eq_a.emplace_back(dim, Rational(1));
  eq_b.emplace_back(1);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<Rational> row(dim, Rational(0));
    row[j] = Rational(-1);
    in_a.push_back(std::move(row));
    in_b.emplace_back(0);
  }
  for (const auto& c : poly.constraints) {
    if (c.relation == Relation::equal) {
      eq_a.push_back(c.coeffs);
      eq_b.push_back(c.rhs);
    } else if (c.relation == Relation::less_equal) {
      in_a.push_back(c.coeffs);
      in_b.push_back(c.rhs);
    } else {
      std::vector<Rational> row = c.coeffs;
      for (auto& v : row) v = -v;
      in_a.push_back(std::move(row));
      in_b.push_back(-c.rhs);
    }
  }

  std::vector<std::vector<Rational>> out;
  std::size_t bases = 0;
  std::size_t m = in_a.size();
  // Tight sets of every size up to dim; singular choices are skipped.
  for (std::size_t k = 0; k <= std::min(dim, m); ++k) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      if (++bases > max_bases) throw VertexCapExceeded("polytope vertex enumeration cap exceeded");
      auto a = eq_a;
      auto b = eq_b;
      for (std::size_t r = 0; r < m; ++r) {
        if (!pick[r]) continue;
        a.push_back(in_a[r]);
        b.push_back(in_b[r]);
      }
      auto x = detail::solve_square(std::move(a), std::move(b), dim);
      if (!x) continue;
      bool feasible = true;
      for (std::size_t r = 0; r < m && feasible; ++r) feasible = dot(in_a[r], *x) <= in_b[r];
      if (feasible && std::find(out.begin(), out.end(), *x) == out.end())
        out.push_back(std::move(*x));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace infrob
