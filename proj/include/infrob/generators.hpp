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
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "infrob/beliefs.hpp"
#include "infrob/polytope.hpp"
#include "infrob/restriction.hpp"

namespace infrob::gen {

struct SizeRange {
  std::size_t lo = 1;
  std::size_t hi = 1;
  friend bool operator==(const SizeRange&, const SizeRange&) = default;
};

/// Sizes, payoff numerator bounds, denominator bound and seed for the
/// random instance generators.
struct GeneratorSpec {
  SizeRange actions{2, 3};
  SizeRange types{1, 2};
  SizeRange states{1, 3};
  SizeRange signals{1, 3};
  std::int64_t payoff_lo = -5;
  std::int64_t payoff_hi = 5;
  std::int64_t denominator_bound = 3;
  std::uint64_t seed = 0;

  static constexpr std::size_t kMaxActions = 5, kMaxStates = 4, kMaxTypes = 3,
                               kMaxSignals = 4;

  std::vector<std::string> problems() const {
    std::vector<std::string> out;
    auto check = [&](const SizeRange& r, std::size_t cap, const char* what) {
      if (r.lo == 0 || r.lo > r.hi) out.push_back(std::string(what) + ": empty or invalid range");
      if (r.hi > cap)
        out.push_back(std::string(what) + ": upper bound exceeds " + std::to_string(cap));
    };
    check(actions, kMaxActions, "actions");
    check(types, kMaxTypes, "types");
    check(states, kMaxStates, "states");
    check(signals, kMaxSignals, "signals");
    if (payoff_lo > payoff_hi) out.push_back("payoff_range: lo > hi");
    if (denominator_bound < 1) out.push_back("denominator_bound: must be positive");
    return out;
  }
  void validate() const {
    auto p = problems();
    if (!p.empty()) throw std::invalid_argument("generator spec: " + p.front());
  }

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

/// Seeded source with platform-independent bounded draws (the standard
/// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = engine_(); while (x >= limit);
    return x % n;
  }
  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  std::size_t size(const SizeRange& r) {
    return r.lo + static_cast<std::size_t>(below(r.hi - r.lo + 1));
  }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Random exact distribution on n points; some coordinates may be zero.
inline std::vector<Rational> random_distribution(Rng& rng, std::size_t n, bool sparse = true) {
  std::vector<std::int64_t> w(n);
  std::int64_t total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : w) {
      x = sparse && rng.below(3) == 0 ? 0 : rng.uniform(1, 4);
      total += x;
    }
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (auto x : w) out.emplace_back(x, total);
  return out;
}

inline std::vector<std::string> names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

/// Deterministic in the spec (including its seed).
inline EconomicEnvironment random_environment(const GeneratorSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::size_t ns = rng.size(spec.states);
  std::array<PlayerPrimitives, 2> players;
  players[0].actions = names("a", rng.size(spec.actions));
  players[1].actions = names("b", rng.size(spec.actions));
  players[0].types = names("t", rng.size(spec.types));
  players[1].types = names("u", rng.size(spec.types));
  EconomicEnvironment env(names("w", ns), players);
  for (Player p : kPlayers)
    for (auto& u : env.utility_tensor(p))
      u = Rational(rng.uniform(spec.payoff_lo, spec.payoff_hi),
                   rng.uniform(1, spec.denominator_bound));
  return env;
}

enum class RestrictionKind : std::uint8_t { unrestricted, support, polytope, finite };

inline std::string restriction_kind_name(RestrictionKind k) {
  switch (k) {
    case RestrictionKind::unrestricted: return "unrestricted";
    case RestrictionKind::support: return "support";
    case RestrictionKind::polytope: return "polytope";
    case RestrictionKind::finite: return "finite";
  }
  return "?";
}

/// A random nonempty restriction of the given kind at every (player, type).
/// support: supp φ_i(θ_i) of a random baseline belief φ. polytope: 1-2
/// random inequalities satisfied by a random interior-ish point. finite:
/// 1-3 random beliefs.
inline BeliefRestriction random_restriction(const EconomicEnvironment& env, RestrictionKind kind,
                                            std::uint64_t seed) {
  Rng rng(seed);
  BeliefRestriction r;
  for (Player p : kPlayers) {
    std::size_t dim = env.num_states() * env.num_types(opponent(p));
    for (std::size_t t = 0; t < env.num_types(p); ++t) {
      switch (kind) {
        case RestrictionKind::unrestricted:
          r.entries[idx(p)].push_back(Unrestricted{});
          break;
        case RestrictionKind::support: {
          auto phi = random_distribution(rng, dim);
          SupportRestriction s;
          for (const auto& x : phi) s.allowed.push_back(!x.is_zero());
          r.entries[idx(p)].push_back(std::move(s));
          break;
        }
        case RestrictionKind::polytope: {
          auto anchor = random_distribution(rng, dim, false);
          PolytopeRestriction poly;
          std::size_t rows = 1 + rng.below(2);
          for (std::size_t k = 0; k < rows; ++k) {
            LinearConstraint c;
            for (std::size_t j = 0; j < dim; ++j) c.coeffs.emplace_back(rng.uniform(-3, 3));
            Rational slack(static_cast<std::int64_t>(rng.below(3)), 4);
            Rational at = dot(c.coeffs, anchor);
            if (rng.coin()) {
              c.relation = Relation::less_equal;
              c.rhs = at + slack;
            } else {
              c.relation = Relation::greater_equal;
              c.rhs = at - slack;
            }
            poly.constraints.push_back(std::move(c));
          }
          r.entries[idx(p)].push_back(std::move(poly));
          break;
        }
        case RestrictionKind::finite: {
          FiniteBeliefSet f;
          std::size_t n = 1 + rng.below(3);
          for (std::size_t k = 0; k < n; ++k) f.beliefs.push_back(random_distribution(rng, dim));
          r.entries[idx(p)].push_back(std::move(f));
          break;
        }
      }
    }
  }
  return r;
}

/// A belief over Θ0 × Θ_{-i} drawn from Δ_{i,θ_i}.
inline std::vector<Rational> sample_admissible(Rng& rng, const RestrictionEntry& entry,
                                               std::size_t dim) {
  if (std::holds_alternative<Unrestricted>(entry)) return random_distribution(rng, dim);
  if (const auto* s = std::get_if<SupportRestriction>(&entry)) {
    std::vector<std::size_t> allowed;
    for (std::size_t k = 0; k < dim; ++k)
      if (s->allowed.at(k)) allowed.push_back(k);
    if (allowed.empty()) throw std::invalid_argument("support restriction allows nothing");
    auto w = random_distribution(rng, allowed.size());
    std::vector<Rational> out(dim, Rational(0));
    for (std::size_t k = 0; k < allowed.size(); ++k) out[allowed[k]] = w[k];
    return out;
  }
  if (const auto* f = std::get_if<FiniteBeliefSet>(&entry)) {
    if (f->beliefs.empty()) throw std::invalid_argument("finite belief set is empty");
    return f->beliefs[rng.below(f->beliefs.size())];
  }
  const auto& poly = std::get<PolytopeRestriction>(entry);
  auto vertices = polytope_vertices(poly, dim);
  if (vertices.empty()) throw std::invalid_argument("polytope restriction is empty");
  auto w = random_distribution(rng, vertices.size());
  std::vector<Rational> out(dim, Rational(0));
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (std::size_t j = 0; j < dim; ++j)
      if (!w[v].is_zero()) out[j].add_product(w[v], vertices[v][j]);
  return out;
}

/// A random structure in 𝕐(Δ): each interim belief's Θ0 × Θ_{-i} marginal
/// is drawn from Δ_{i,θ_i}, then split randomly across opponent signals.
inline InformationStructure random_consistent_structure(const EconomicEnvironment& env,
                                                        const BeliefRestriction& restriction,
                                                        const GeneratorSpec& spec) {
  spec.validate();
  Rng rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  InformationStructure s;
  for (Player p : kPlayers) s.signals[idx(p)] = names(p == Player::first ? "x" : "y", rng.size(spec.signals));
  for (Player p : kPlayers) {
    Player q = opponent(p);
    std::size_t dim = env.num_states() * env.num_types(q);
    std::size_t ny = s.num_signals(q);
    for (std::size_t t = 0; t < env.num_types(p); ++t) {
      for (std::size_t y = 0; y < s.num_signals(p); ++y) {
        auto marg = sample_admissible(rng, restriction.at(p, t), dim);
        std::vector<Rational> row(dim * ny, Rational(0));
        for (std::size_t c = 0; c < dim; ++c) {
          if (marg[c].is_zero()) continue;
          auto split = random_distribution(rng, ny);
          for (std::size_t oy = 0; oy < ny; ++oy) row[c * ny + oy] = marg[c] * split[oy];
        }
        s.beliefs[idx(p)].push_back(std::move(row));
      }
    }
  }
  return s;
}

/// splitmix64 step, used to derive independent per-item seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t item) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (item + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// `count` consistent structures; structure k uses seed mix_seed(seed, k).
inline std::vector<InformationStructure> sample_structures(const EconomicEnvironment& env,
                                                           const BeliefRestriction& restriction,
                                                           GeneratorSpec spec, std::size_t count,
                                                           std::uint64_t seed) {
  std::vector<InformationStructure> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    spec.seed = mix_seed(seed, k);
    out.push_back(random_consistent_structure(env, restriction, spec));
  }
  return out;
}

}  // namespace infrob::gen
