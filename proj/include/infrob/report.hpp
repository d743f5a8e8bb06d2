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
#include <ostream>
#include <string>
#include <vector>

#include "infrob/io.hpp"
#include "infrob/robustness.hpp"
#include "infrob/solvers.hpp"

// Deterministic plain-text reports. Keys print as "playerN <type>" or
// "playerN <type> <signal>", always in index order.
namespace infrob::report {

struct KeyNames {
  const EconomicEnvironment& env;
  const InformationStructure* structure = nullptr;

  std::string operator()(Player p, std::size_t key) const {
    if (!structure) return player_name(p) + " " + env.types(p)[key];
    std::size_t ny = structure->num_signals(p);
    return player_name(p) + " " + env.types(p)[key / ny] + " " + structure->signals[idx(p)][key % ny];
  }
};

inline void write_correspondence(std::ostream& os, const ActionCorrespondence& c,
                                 const KeyNames& names) {
  for (Player p : kPlayers) {
    for (std::size_t k = 0; k < c.num_keys(p); ++k) {
      os << "  " << names(p, k) << ":";
      auto acts = c.actions(p, k);
      if (acts.empty()) os << " -";
      for (std::size_t a : acts) os << ' ' << names.env.actions(p)[a];
      os << '\n';
    }
  }
}

inline std::string conjecture_text(const EconomicEnvironment& env, const Conjecture& mu,
                                   const InformationStructure* structure) {
  std::string out;
  Player q = opponent(mu.player);
  for (std::size_t k = 0; k < mu.mass.size(); ++k) {
    if (mu.mass[k].is_zero()) continue;
    auto pt = mu.shape.point(k);
    out += ' ' + env.states()[pt.state] + ':' + env.types(q)[pt.opp_type];
    if (structure && mu.shape.has_signals()) out += ':' + structure->signals[idx(q)][pt.opp_signal];
    out += ':' + env.actions(q)[pt.opp_action] + '=' + mu.mass[k].to_string();
  }
  return out;
}

struct SolvePrintOptions {
  bool trace = false;
  bool witnesses = false;
};

inline void write_solve(std::ostream& os, const EconomicEnvironment& env, const SolveResult& r,
                        const InformationStructure* structure, const SolvePrintOptions& opt) {
  KeyNames names{env, structure};
  os << "concept: " << concept_name(r.kind) << '\n';
  os << "rounds: " << r.num_rounds << '\n';
  if (opt.trace) {
    for (std::size_t n = 0; n < r.rounds.size(); ++n) {
      os << "round " << n << ":\n";
      write_correspondence(os, r.rounds[n], names);
    }
  }
  os << "final:\n";
  write_correspondence(os, r.final, names);
  if (opt.witnesses) {
    os << "witnesses:\n";
    for (const auto& [key, w] : r.witnesses) {
      os << "  " << names(key.player, key.key) << ' ' << env.actions(key.player)[key.action] << ':'
         << conjecture_text(env, w.belief, structure);
      if (w.belief_element) os << " (belief " << *w.belief_element + 1 << ')';
      os << '\n';
    }
  }
}

inline void write_bne(std::ostream& os, const EconomicEnvironment& env,
                      const InformationStructure& s, const BneResult& r) {
  KeyNames names{env, &s};
  os << "equilibria: " << r.profiles.size() << '\n';
  for (std::size_t n = 0; n < r.profiles.size(); ++n) {
    os << "profile " << n + 1 << ":\n";
    for (Player p : kPlayers)
      for (std::size_t k = 0; k < r.profiles[n].actions[idx(p)].size(); ++k)
        os << "  " << names(p, k) << " -> " << env.actions(p)[r.profiles[n].actions[idx(p)][k]]
           << '\n';
  }
}

inline void write_consistency(std::ostream& os, const EconomicEnvironment& env,
                              const InformationStructure& s, const ConsistencyReport& r) {
  os << "consistent: " << (r.consistent ? "yes" : "no") << '\n';
  for (const auto& v : r.violations) {
    os << "violation: " << player_name(v.player) << ' ' << env.types(v.player)[v.type] << ' '
       << s.signals[idx(v.player)][v.signal] << " marginal";
    for (std::size_t k = 0; k < v.marginal.size(); ++k)
      if (!v.marginal[k].is_zero())
        os << ' ' << io::state_type_name(env, v.player, k) << '=' << v.marginal[k];
    os << '\n';
  }
}

inline void write_counterexamples(std::ostream& os, const EconomicEnvironment& env,
                                  const std::vector<Counterexample>& cx,
                                  const InformationStructure& canonical,
                                  const std::vector<InformationStructure>& samples) {
  os << "counterexamples: " << cx.size() << '\n';
  for (const auto& c : cx) {
    const auto& s = c.structure ? samples[*c.structure] : canonical;
    os << "  "
       << (c.direction == Counterexample::Direction::coverage ? "coverage" : "containment")
       << ' ' << (c.structure ? "sample " + std::to_string(*c.structure) : std::string("canonical"))
       << ' ' << player_name(c.player) << ' ' << env.types(c.player)[c.type] << ' '
       << s.signals[idx(c.player)][c.signal] << ' ' << env.actions(c.player)[c.action] << '\n';
  }
}

inline void write_union(std::ostream& os, const EconomicEnvironment& env, const UnionReport& r,
                        const std::vector<InformationStructure>& samples) {
  os << "check: union\n";
  os << "restricted final:\n";
  write_correspondence(os, r.restricted, KeyNames{env});
  std::size_t ok = 0;
  for (const auto& f : r.forward) ok += f.confirmed;
  os << "coverage: " << ok << '/' << r.forward.size()
     << " actions rationalizable at their own signal of the canonical structure\n";
  std::size_t sok = 0, checked = 0;
  for (const auto& s : r.reverse) {
    sok += s.confirmed;
    checked += s.checked;
  }
  os << "containment: " << sok << '/' << r.reverse.size() << " sampled structures ("
     << checked << " rationalizable actions checked)\n";
  write_counterexamples(os, env, r.counterexamples, r.canonical, samples);
}

inline void write_bne_union(std::ostream& os, const EconomicEnvironment& env,
                            const BneUnionReport& r,
                            const std::vector<InformationStructure>& samples) {
  os << "check: bne-union\n";
  os << "restricted final:\n";
  write_correspondence(os, r.restricted, KeyNames{env});
  os << "obedient profile: equilibrium " << (r.obedient_is_equilibrium ? "yes" : "no")
     << ", enumerated "
     << (r.obedient_enumerated ? (*r.obedient_enumerated ? "yes" : "no") : "skipped") << '\n';
  std::size_t ok = 0;
  for (const auto& c : r.coverage) ok += c.confirmed;
  os << "coverage: " << ok << '/' << r.coverage.size()
     << " actions played by the obedient profile at their own signal\n";
  std::size_t sok = 0, skipped = 0, checked = 0;
  for (const auto& s : r.containment) {
    sok += s.confirmed && !s.skipped;
    skipped += s.skipped;
    checked += s.checked;
  }
  os << "containment: " << sok << '/' << r.containment.size() - skipped
     << " sampled structures (" << checked << " equilibrium actions checked, " << skipped
     << " skipped over the enumeration cap)\n";
  write_counterexamples(os, env, r.counterexamples, r.canonical, samples);
}

}  // namespace infrob::report
