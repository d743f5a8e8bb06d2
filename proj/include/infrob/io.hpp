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
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "infrob/beliefs.hpp"
#include "infrob/generators.hpp"
#include "infrob/restriction.hpp"

// Text format for games, restrictions, information structures and generator
// specs. Line oriented; `#` starts a comment; sections are
//
//   [environment]   states = ..., playerN.actions = ..., playerN.types = ...,
//                   payoff <a1> <a2> <state> <t1> <t2> = <u1> <u2>
//   [restriction]   playerN <type> = unrestricted
//                   playerN <type> = support <state>:<opptype> ...
//                   playerN <type> = constraint <state>:<opptype>=<c> ... <=|>=|= <rhs>
//                   playerN <type> = belief <state>:<opptype>=<p> ...
//   [structure]     playerN.signals = ...,
//                   belief playerN <type> <signal> = <state>:<opptype>:<oppsignal>=<p> ...
//   [generator]     seed, actions, types, states, signals, payoff_range,
//                   denominator_bound
//
// Rationals are integers or p/q, never decimals.
namespace infrob::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Well-formed syntax, but the objects break a type invariant.
class SemanticError : public std::runtime_error {
 public:
  explicit SemanticError(std::vector<Violation> v)
      : std::runtime_error(join(v)), violations_(std::move(v)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<Violation>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "; ") + x.what;
    return s;
  }
  std::vector<Violation> violations_;
};

struct GameFile {
  std::optional<EconomicEnvironment> env;
  std::optional<BeliefRestriction> restriction;
  std::optional<InformationStructure> structure;
  std::optional<gen::GeneratorSpec> generator;
  friend bool operator==(const GameFile&, const GameFile&) = default;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#')
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

inline bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '_' || c == '-' || c == '.' || c == '\'';
    if (!ok) return false;
  }
  return true;
}

class SectionParser {
 public:
  explicit SectionParser(const Line& line) : line_(line) {}

  [[noreturn]] void fail(std::size_t tok, const std::string& msg) const {
    std::size_t col = tok < line_.tokens.size() ? line_.tokens[tok].column
                                                : (line_.tokens.empty() ? 1 : line_.tokens.back().column +
                                                   line_.tokens.back().text.size());
    throw ParseError(line_.number, col, msg);
  }
  [[noreturn]] void fail_at(std::size_t tok, std::size_t offset, const std::string& msg) const {
    throw ParseError(line_.number, line_.tokens.at(tok).column + offset, msg);
  }

  const std::vector<Token>& tokens() const { return line_.tokens; }
  std::size_t number() const { return line_.number; }

  /// Index of the "=" token; fails if missing.
  std::size_t equals() const {
    for (std::size_t k = 0; k < line_.tokens.size(); ++k)
      if (line_.tokens[k].text == "=") return k;
    fail(line_.tokens.size(), "expected '='");
  }

  Rational rational(std::size_t tok, std::string_view text, std::size_t offset = 0) const {
    try {
      return Rational::parse(text);
    } catch (const std::invalid_argument&) {
      fail_at(tok, offset, "expected a rational (integer or p/q), got '" + std::string(text) + "'");
    }
  }

  std::size_t lookup(std::size_t tok, std::string_view name, const std::vector<std::string>& set,
                     const char* what, std::size_t offset = 0) const {
    auto it = std::find(set.begin(), set.end(), name);
    if (it == set.end()) fail_at(tok, offset, std::string("unknown ") + what + " '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - set.begin());
  }

  std::vector<std::string> name_list(std::size_t from) const {
    std::vector<std::string> out;
    for (std::size_t k = from; k < line_.tokens.size(); ++k) {
      const auto& t = line_.tokens[k].text;
      if (!valid_name(t)) fail(k, "invalid name '" + t + "'");
      if (std::find(out.begin(), out.end(), t) != out.end()) fail(k, "duplicate name '" + t + "'");
      out.push_back(t);
    }
    if (out.empty()) fail(from, "expected at least one name");
    return out;
  }

  Player player(std::size_t tok, std::string_view text) const {
    if (text == "player1") return Player::first;
    if (text == "player2") return Player::second;
    fail(tok, "expected player1 or player2, got '" + std::string(text) + "'");
  }

 private:
  const Line& line_;
};

/// Splits "a:b:c=v" into name parts and value.
struct PointToken {
  std::vector<std::string> parts;
  std::vector<std::size_t> offsets;
  std::optional<std::string> value;
  std::size_t value_offset = 0;
};

inline PointToken split_point(std::string_view text) {
  PointToken out;
  std::size_t eq = text.find('=');
  std::string_view names = text.substr(0, eq);
  if (eq != std::string_view::npos) {
    out.value = std::string(text.substr(eq + 1));
    out.value_offset = eq + 1;
  }
  std::size_t start = 0;
  for (;;) {
    std::size_t colon = names.find(':', start);
    out.parts.emplace_back(names.substr(start, colon - start));
    out.offsets.push_back(start);
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  return out;
}

inline EconomicEnvironment parse_environment(const std::vector<Line>& lines,
                                             std::size_t header_line) {
  std::optional<std::vector<std::string>> states;
  std::array<std::optional<std::vector<std::string>>, 2> actions, types;
  std::vector<const Line*> payoff_lines;
  for (const auto& line : lines) {
    SectionParser ps(line);
    const auto& tk = ps.tokens();
    if (tk[0].text == "payoff") {
      payoff_lines.push_back(&line);
      continue;
    }
    if (tk.size() < 2 || tk[1].text != "=") ps.fail(1, "expected '<key> = ...'");
    auto assign = [&](std::optional<std::vector<std::string>>& dst) {
      if (dst) ps.fail(0, "duplicate key '" + tk[0].text + "'");
      dst = ps.name_list(2);
    };
    const std::string& key = tk[0].text;
    if (key == "states") assign(states);
    else if (key == "player1.actions") assign(actions[0]);
    else if (key == "player2.actions") assign(actions[1]);
    else if (key == "player1.types") assign(types[0]);
    else if (key == "player2.types") assign(types[1]);
    else ps.fail(0, "unknown key '" + key + "' in [environment]");
  }
  auto need = [&](const auto& v, const char* key) {
    if (!v) throw ParseError(header_line, 1, std::string("[environment] is missing '") + key + "'");
  };
  need(states, "states");
  need(actions[0], "player1.actions");
  need(actions[1], "player2.actions");
  need(types[0], "player1.types");
  need(types[1], "player2.types");
  EconomicEnvironment env(*states, {PlayerPrimitives{*actions[0], *types[0]},
                                    PlayerPrimitives{*actions[1], *types[1]}});
  std::vector<bool> seen(env.tensor_size(), false);
  for (const Line* line : payoff_lines) {
    SectionParser ps(*line);
    const auto& tk = ps.tokens();
    if (tk.size() != 9 || tk[6].text != "=")
      ps.fail(std::min<std::size_t>(tk.size(), 6),
              "expected 'payoff <a1> <a2> <state> <t1> <t2> = <u1> <u2>'");
    std::size_t a1 = ps.lookup(1, tk[1].text, env.actions(Player::first), "player1 action");
    std::size_t a2 = ps.lookup(2, tk[2].text, env.actions(Player::second), "player2 action");
    std::size_t s = ps.lookup(3, tk[3].text, env.states(), "state");
    std::size_t t1 = ps.lookup(4, tk[4].text, env.types(Player::first), "player1 type");
    std::size_t t2 = ps.lookup(5, tk[5].text, env.types(Player::second), "player2 type");
    std::size_t flat = env.tensor_index(a1, a2, s, t1, t2);
    if (seen[flat]) ps.fail(0, "duplicate payoff entry");
    seen[flat] = true;
    env.set_utility(Player::first, a1, a2, s, t1, t2, ps.rational(7, tk[7].text));
    env.set_utility(Player::second, a1, a2, s, t1, t2, ps.rational(8, tk[8].text));
  }
  std::vector<Violation> missing;
  for (std::size_t a1 = 0; a1 < env.num_actions(Player::first); ++a1)
    for (std::size_t a2 = 0; a2 < env.num_actions(Player::second); ++a2)
      for (std::size_t s = 0; s < env.num_states(); ++s)
        for (std::size_t t1 = 0; t1 < env.num_types(Player::first); ++t1)
          for (std::size_t t2 = 0; t2 < env.num_types(Player::second); ++t2)
            if (!seen[env.tensor_index(a1, a2, s, t1, t2)])
              missing.push_back({"missing payoff " + env.actions(Player::first)[a1] + " " +
                                 env.actions(Player::second)[a2] + " " + env.states()[s] + " " +
                                 env.types(Player::first)[t1] + " " +
                                 env.types(Player::second)[t2]});
  if (!missing.empty()) throw SemanticError(std::move(missing));
  return env;
}

inline BeliefRestriction parse_restriction(const std::vector<Line>& lines,
                                           const EconomicEnvironment& env) {
  BeliefRestriction r = BeliefRestriction::unrestricted(env);
  std::array<std::vector<bool>, 2> set{std::vector<bool>(env.num_types(Player::first), false),
                                       std::vector<bool>(env.num_types(Player::second), false)};
  for (const auto& line : lines) {
    SectionParser ps(line);
    const auto& tk = ps.tokens();
    if (tk.size() < 4 || tk[2].text != "=")
      ps.fail(std::min<std::size_t>(tk.size(), 2), "expected 'playerN <type> = <kind> ...'");
    Player p = ps.player(0, tk[0].text);
    Player q = opponent(p);
    std::size_t t = ps.lookup(1, tk[1].text, env.types(p), "payoff type");
    std::size_t dim = env.num_states() * env.num_types(q);
    auto& entry = r.entries[idx(p)][t];
    const std::string& kind = tk[3].text;

    auto point_index = [&](std::size_t tok, const PointToken& pt) {
      if (pt.parts.size() != 2) ps.fail(tok, "expected '<state>:<opptype>'");
      std::size_t s = ps.lookup(tok, pt.parts[0], env.states(), "state", pt.offsets[0]);
      std::size_t ot = ps.lookup(tok, pt.parts[1], env.types(q), "opponent type", pt.offsets[1]);
      return s * env.num_types(q) + ot;
    };
    auto claim = [&](bool accumulate, bool same_kind) {
      if (set[idx(p)][t] && !(accumulate && same_kind))
        ps.fail(0, "restriction for " + tk[0].text + " " + tk[1].text + " already given");
      set[idx(p)][t] = true;
    };

    if (kind == "unrestricted") {
      if (tk.size() != 4) ps.fail(4, "unexpected tokens after 'unrestricted'");
      claim(false, false);
      entry = Unrestricted{};
    } else if (kind == "support") {
      claim(false, false);
      SupportRestriction s{std::vector<bool>(dim, false)};
      if (tk.size() == 4) ps.fail(4, "support needs at least one point");
      for (std::size_t k = 4; k < tk.size(); ++k) {
        auto pt = split_point(tk[k].text);
        if (pt.value) ps.fail(k, "support points take no value");
        s.allowed[point_index(k, pt)] = true;
      }
      entry = std::move(s);
    } else if (kind == "constraint") {
      claim(true, std::holds_alternative<PolytopeRestriction>(entry));
      if (!std::holds_alternative<PolytopeRestriction>(entry)) entry = PolytopeRestriction{};
      LinearConstraint c{std::vector<Rational>(dim, Rational(0)), Relation::less_equal, Rational(0)};
      std::size_t k = 4;
      std::vector<bool> used(dim, false);
      for (; k < tk.size(); ++k) {
        const auto& text = tk[k].text;
        if (text == "<=" || text == ">=" || text == "=") break;
        auto pt = split_point(text);
        if (!pt.value) ps.fail(k, "expected '<state>:<opptype>=<coefficient>'");
        std::size_t at = point_index(k, pt);
        if (used[at]) ps.fail(k, "coordinate repeated in constraint");
        used[at] = true;
        c.coeffs[at] = ps.rational(k, *pt.value, pt.value_offset);
      }
      if (k + 2 != tk.size()) ps.fail(k, "expected '<=|>=|= <rhs>' at end of constraint");
      c.relation = tk[k].text == "<=" ? Relation::less_equal
                   : tk[k].text == ">=" ? Relation::greater_equal
                                       : Relation::equal;
      c.rhs = ps.rational(k + 1, tk[k + 1].text);
      std::get<PolytopeRestriction>(entry).constraints.push_back(std::move(c));
    } else if (kind == "belief") {
      claim(true, std::holds_alternative<FiniteBeliefSet>(entry));
      if (!std::holds_alternative<FiniteBeliefSet>(entry)) entry = FiniteBeliefSet{};
      std::vector<Rational> b(dim, Rational(0));
      std::vector<bool> used(dim, false);
      for (std::size_t k = 4; k < tk.size(); ++k) {
        auto pt = split_point(tk[k].text);
        if (!pt.value) ps.fail(k, "expected '<state>:<opptype>=<probability>'");
        std::size_t at = point_index(k, pt);
        if (used[at]) ps.fail(k, "coordinate repeated in belief");
        used[at] = true;
        b[at] = ps.rational(k, *pt.value, pt.value_offset);
      }
      if (!is_distribution(b))
        throw SemanticError({{"line " + std::to_string(ps.number()) + ": " + tk[0].text + " " +
                              tk[1].text + " belief is not a distribution"}});
      std::get<FiniteBeliefSet>(entry).beliefs.push_back(std::move(b));
    } else {
      ps.fail(3, "unknown restriction kind '" + kind + "'");
    }
  }
  auto v = validate_restriction(r, env);
  if (!v.empty()) throw SemanticError(std::move(v));
  return r;
}

inline InformationStructure parse_structure(const std::vector<Line>& lines,
                                            const EconomicEnvironment& env,
                                            std::size_t header_line) {
  InformationStructure s;
  std::array<bool, 2> have{false, false};
  std::vector<const Line*> belief_lines;
  for (const auto& line : lines) {
    SectionParser ps(line);
    const auto& tk = ps.tokens();
    if (tk[0].text == "belief") {
      belief_lines.push_back(&line);
      continue;
    }
    if (tk.size() < 2 || tk[1].text != "=") ps.fail(1, "expected '<key> = ...'");
    std::size_t p;
    if (tk[0].text == "player1.signals") p = 0;
    else if (tk[0].text == "player2.signals") p = 1;
    else ps.fail(0, "unknown key '" + tk[0].text + "' in [structure]");
    if (have[p]) ps.fail(0, "duplicate key '" + tk[0].text + "'");
    have[p] = true;
    s.signals[p] = ps.name_list(2);
  }
  for (std::size_t p = 0; p < 2; ++p)
    if (!have[p])
      throw ParseError(header_line, 1,
                       "[structure] is missing 'player" + std::to_string(p + 1) + ".signals'");
  std::array<std::vector<bool>, 2> seen;
  for (Player p : kPlayers) {
    std::size_t width = env.num_states() * env.num_types(opponent(p)) * s.num_signals(opponent(p));
    s.beliefs[idx(p)].assign(env.num_types(p) * s.num_signals(p),
                             std::vector<Rational>(width, Rational(0)));
    seen[idx(p)].assign(env.num_types(p) * s.num_signals(p), false);
  }
  for (const Line* line : belief_lines) {
    SectionParser ps(*line);
    const auto& tk = ps.tokens();
    if (tk.size() < 6 || tk[4].text != "=")
      ps.fail(std::min<std::size_t>(tk.size(), 4),
              "expected 'belief playerN <type> <signal> = <state>:<opptype>:<oppsignal>=<p> ...'");
    Player p = ps.player(1, tk[1].text);
    Player q = opponent(p);
    std::size_t t = ps.lookup(2, tk[2].text, env.types(p), "payoff type");
    std::size_t y = ps.lookup(3, tk[3].text, s.signals[idx(p)], "signal");
    std::size_t row_index = s.info_type_index(p, t, y);
    if (seen[idx(p)][row_index]) ps.fail(0, "duplicate belief row");
    seen[idx(p)][row_index] = true;
    auto& row = s.beliefs[idx(p)][row_index];
    std::vector<bool> used(row.size(), false);
    for (std::size_t k = 5; k < tk.size(); ++k) {
      auto pt = split_point(tk[k].text);
      if (pt.parts.size() != 3 || !pt.value)
        ps.fail(k, "expected '<state>:<opptype>:<oppsignal>=<probability>'");
      std::size_t st = ps.lookup(k, pt.parts[0], env.states(), "state", pt.offsets[0]);
      std::size_t ot = ps.lookup(k, pt.parts[1], env.types(q), "opponent type", pt.offsets[1]);
      std::size_t oy = ps.lookup(k, pt.parts[2], s.signals[idx(q)], "opponent signal", pt.offsets[2]);
      std::size_t at = (st * env.num_types(q) + ot) * s.num_signals(q) + oy;
      if (used[at]) ps.fail(k, "coordinate repeated in belief");
      used[at] = true;
      row[at] = ps.rational(k, *pt.value, pt.value_offset);
    }
  }
  std::vector<Violation> v;
  for (Player p : kPlayers)
    for (std::size_t t = 0; t < env.num_types(p); ++t)
      for (std::size_t y = 0; y < s.num_signals(p); ++y)
        if (!seen[idx(p)][s.info_type_index(p, t, y)])
          v.push_back({"missing belief row " + player_name(p) + " " + env.types(p)[t] + " " +
                       s.signals[idx(p)][y]});
  if (!v.empty()) throw SemanticError(std::move(v));
  v = validate_structure(s, env);
  if (!v.empty()) throw SemanticError(std::move(v));
  return s;
}

inline gen::GeneratorSpec parse_generator(const std::vector<Line>& lines) {
  gen::GeneratorSpec spec;
  std::vector<std::string> seen;
  for (const auto& line : lines) {
    SectionParser ps(line);
    const auto& tk = ps.tokens();
    if (tk.size() < 3 || tk[1].text != "=") ps.fail(1, "expected '<key> = <value>'");
    const std::string& key = tk[0].text;
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      ps.fail(0, "duplicate key '" + key + "'");
    seen.push_back(key);
    auto integer = [&](std::size_t k) -> std::int64_t {
      Rational r = ps.rational(k, tk[k].text);
      if (r.denominator() != 1 || !r.numerator().fits_slong_p())
        ps.fail(k, "expected an integer");
      return r.numerator().get_si();
    };
    auto arity = [&](std::size_t n) {
      if (tk.size() != 2 + n) ps.fail(std::min(tk.size(), 2 + n), "expected " + std::to_string(n) + " value(s)");
    };
    auto range = [&](gen::SizeRange& r) {
      arity(2);
      auto lo = integer(2), hi = integer(3);
      if (lo < 0 || hi < 0) ps.fail(2, "sizes must be nonnegative");
      r = {static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
    };
    if (key == "seed") {
      arity(1);
      const auto& t = tk[2].text;
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }))
        ps.fail(2, "seed must be an unsigned integer");
      try {
        spec.seed = std::stoull(t);
      } catch (const std::exception&) {
        ps.fail(2, "seed out of range");
      }
    } else if (key == "actions") range(spec.actions);
    else if (key == "types") range(spec.types);
    else if (key == "states") range(spec.states);
    else if (key == "signals") range(spec.signals);
    else if (key == "payoff_range") {
      arity(2);
      spec.payoff_lo = integer(2);
      spec.payoff_hi = integer(3);
    } else if (key == "denominator_bound") {
      arity(1);
      spec.denominator_bound = integer(2);
    } else {
      ps.fail(0, "unknown key '" + key + "' in [generator]");
    }
  }
  auto problems = spec.problems();
  if (!problems.empty()) {
    std::vector<Violation> v;
    for (auto& p : problems) v.push_back({"generator " + p});
    throw SemanticError(std::move(v));
  }
  return spec;
}

}  // namespace detail

inline GameFile parse_game_file(std::string_view text) {
  std::map<std::string, std::pair<std::size_t, std::vector<detail::Line>>> sections;
  std::string current;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    auto tokens = detail::tokenize(raw);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto& first = tokens[0].text;
    if (first.front() == '[') {
      if (tokens.size() != 1 || first.back() != ']')
        throw ParseError(number, tokens[0].column, "malformed section header");
      std::string name = first.substr(1, first.size() - 2);
      if (name != "environment" && name != "restriction" && name != "structure" &&
          name != "generator")
        throw ParseError(number, tokens[0].column + 1, "unknown section '" + name + "'");
      if (sections.count(name))
        throw ParseError(number, tokens[0].column, "duplicate section [" + name + "]");
      sections[name].first = number;
      current = name;
    } else {
      if (current.empty())
        throw ParseError(number, tokens[0].column, "content before the first section header");
      sections[current].second.push_back({number, std::move(tokens)});
    }
    if (end == text.size()) break;
  }

  GameFile out;
  if (auto it = sections.find("generator"); it != sections.end())
    out.generator = detail::parse_generator(it->second.second);
  auto env_it = sections.find("environment");
  if (env_it == sections.end()) {
    for (const char* dep : {"restriction", "structure"})
      if (auto it = sections.find(dep); it != sections.end())
        throw ParseError(it->second.first, 1,
                         std::string("[") + dep + "] requires an [environment] section");
    return out;
  }
  out.env = detail::parse_environment(env_it->second.second, env_it->second.first);
  if (auto it = sections.find("restriction"); it != sections.end())
    out.restriction = detail::parse_restriction(it->second.second, *out.env);
  if (auto it = sections.find("structure"); it != sections.end())
    out.structure = detail::parse_structure(it->second.second, *out.env, it->second.first);
  return out;
}

// ---------------------------------------------------------------------------
// Canonical writers.

inline void write_environment(std::ostream& os, const EconomicEnvironment& env) {
  auto list = [&](const std::vector<std::string>& v) {
    for (const auto& s : v) os << ' ' << s;
    os << '\n';
  };
  os << "[environment]\nstates =";
  list(env.states());
  for (Player p : kPlayers) {
    os << player_name(p) << ".actions =";
    list(env.actions(p));
    os << player_name(p) << ".types =";
    list(env.types(p));
  }
  for (std::size_t a1 = 0; a1 < env.num_actions(Player::first); ++a1)
    for (std::size_t a2 = 0; a2 < env.num_actions(Player::second); ++a2)
      for (std::size_t s = 0; s < env.num_states(); ++s)
        for (std::size_t t1 = 0; t1 < env.num_types(Player::first); ++t1)
          for (std::size_t t2 = 0; t2 < env.num_types(Player::second); ++t2)
            os << "payoff " << env.actions(Player::first)[a1] << ' '
               << env.actions(Player::second)[a2] << ' ' << env.states()[s] << ' '
               << env.types(Player::first)[t1] << ' ' << env.types(Player::second)[t2] << " = "
               << env.utility(Player::first, a1, a2, s, t1, t2) << ' '
               << env.utility(Player::second, a1, a2, s, t1, t2) << '\n';
}

inline std::string state_type_name(const EconomicEnvironment& env, Player p, std::size_t k) {
  std::size_t nt = env.num_types(opponent(p));
  return env.states()[k / nt] + ":" + env.types(opponent(p))[k % nt];
}

inline void write_restriction(std::ostream& os, const EconomicEnvironment& env,
                              const BeliefRestriction& r) {
  os << "[restriction]\n";
  for (Player p : kPlayers) {
    for (std::size_t t = 0; t < env.num_types(p); ++t) {
      std::string head = player_name(p) + " " + env.types(p)[t] + " = ";
      const auto& e = r.at(p, t);
      if (std::holds_alternative<Unrestricted>(e)) {
        os << head << "unrestricted\n";
      } else if (const auto* s = std::get_if<SupportRestriction>(&e)) {
        os << head << "support";
        for (std::size_t k = 0; k < s->allowed.size(); ++k)
          if (s->allowed[k]) os << ' ' << state_type_name(env, p, k);
        os << '\n';
      } else if (const auto* poly = std::get_if<PolytopeRestriction>(&e)) {
        for (const auto& c : poly->constraints) {
          os << head << "constraint";
          for (std::size_t k = 0; k < c.coeffs.size(); ++k)
            if (!c.coeffs[k].is_zero()) os << ' ' << state_type_name(env, p, k) << '=' << c.coeffs[k];
          os << ' '
             << (c.relation == Relation::less_equal      ? "<="
                 : c.relation == Relation::greater_equal ? ">="
                                                         : "=")
             << ' ' << c.rhs << '\n';
        }
      } else {
        for (const auto& b : std::get<FiniteBeliefSet>(e).beliefs) {
          os << head << "belief";
          for (std::size_t k = 0; k < b.size(); ++k)
            if (!b[k].is_zero()) os << ' ' << state_type_name(env, p, k) << '=' << b[k];
          os << '\n';
        }
      }
    }
  }
}

inline void write_structure(std::ostream& os, const EconomicEnvironment& env,
                            const InformationStructure& s) {
  os << "[structure]\n";
  for (Player p : kPlayers) {
    os << player_name(p) << ".signals =";
    for (const auto& y : s.signals[idx(p)]) os << ' ' << y;
    os << '\n';
  }
  for (Player p : kPlayers) {
    Player q = opponent(p);
    std::size_t nt = env.num_types(q), ny = s.num_signals(q);
    for (std::size_t t = 0; t < env.num_types(p); ++t) {
      for (std::size_t y = 0; y < s.num_signals(p); ++y) {
        os << "belief " << player_name(p) << ' ' << env.types(p)[t] << ' '
           << s.signals[idx(p)][y] << " =";
        const auto& row = s.belief(p, t, y);
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (row[k].is_zero()) continue;
          std::size_t oy = k % ny, ot = (k / ny) % nt, st = k / (ny * nt);
          os << ' ' << env.states()[st] << ':' << env.types(q)[ot] << ':' << s.signals[idx(q)][oy]
             << '=' << row[k];
        }
        os << '\n';
      }
    }
  }
}

inline void write_generator(std::ostream& os, const gen::GeneratorSpec& g) {
  auto range = [&](const char* k, const gen::SizeRange& r) {
    os << k << " = " << r.lo << ' ' << r.hi << '\n';
  };
  os << "[generator]\nseed = " << g.seed << '\n';
  range("actions", g.actions);
  range("types", g.types);
  range("states", g.states);
  range("signals", g.signals);
  os << "payoff_range = " << g.payoff_lo << ' ' << g.payoff_hi << '\n';
  os << "denominator_bound = " << g.denominator_bound << '\n';
}

inline std::string serialize(const GameFile& f) {
  std::ostringstream os;
  bool first = true;
  auto gap = [&] {
    if (!first) os << '\n';
    first = false;
  };
  if (f.env) {
    gap();
    write_environment(os, *f.env);
    if (f.restriction) {
      gap();
      write_restriction(os, *f.env, *f.restriction);
    }
    if (f.structure) {
      gap();
      write_structure(os, *f.env, *f.structure);
    }
  }
  if (f.generator) {
    gap();
    write_generator(os, *f.generator);
  }
  return os.str();
}

}  // namespace infrob::io
