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

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "infrob/generators.hpp"
#include "infrob/io.hpp"
#include "infrob/report.hpp"
#include "infrob/robustness.hpp"
#include "infrob/solvers.hpp"

namespace infrob::cli {

/// Input problem reported with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kOk = 0;
inline constexpr int kCounterexample = 1;
inline constexpr int kInputError = 2;

namespace detail {

inline io::GameFile load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return io::parse_game_file(buf.str());
}

inline const EconomicEnvironment& need_env(const io::GameFile& f) {
  if (!f.env) throw InputError("environment block required");
  return *f.env;
}
inline const InformationStructure& need_structure(const io::GameFile& f) {
  if (!f.structure) throw InputError("structure block required");
  return *f.structure;
}
inline BeliefRestriction restriction_or_unrestricted(const io::GameFile& f) {
  return f.restriction ? *f.restriction : BeliefRestriction::unrestricted(*f.env);
}

}  // namespace detail

/// Runs one command line. Output goes to `out`, diagnostics to `err`.
inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rationalizability and informational-robustness solver for finite two-player games",
               "infrob"};
  app.require_subcommand(1);

  std::string concept_arg, file, mode, what, spec_file;
  bool trace = false, witnesses = false;
  std::size_t samples = 20;
  std::uint64_t seed = 0, cap = BneOptions{}.cap;

  auto* solve = app.add_subcommand("solve", "Iterated elimination: bfr, dr or icr");
  solve->add_option("concept", concept_arg, "bfr | dr | icr")
      ->required()
      ->check(CLI::IsMember({"bfr", "dr", "icr"}));
  solve->add_option("file", file, "game file")->required();
  solve->add_flag("--trace", trace, "print every elimination round");
  solve->add_flag("--witnesses", witnesses, "print a justifying belief per surviving action");

  auto* bne = app.add_subcommand("bne", "Enumerate pure Bayes-Nash equilibria");
  bne->add_option("file", file, "game file with a structure block")->required();
  bne->add_option("--cap", cap, "maximum number of profiles to enumerate");

  auto* consistent = app.add_subcommand("consistent", "Check a structure against a restriction");
  consistent->add_option("file", file, "game file")->required();

  auto* canonical = app.add_subcommand("canonical", "Emit the action-signal canonical structure");
  canonical->add_option("file", file, "game file")->required();

  auto* check = app.add_subcommand("check", "Verify a union characterization on sampled structures");
  check->add_option("mode", mode, "union | bne-union")
      ->required()
      ->check(CLI::IsMember({"union", "bne-union"}));
  check->add_option("file", file, "game file")->required();
  check->add_option("--samples", samples, "number of sampled consistent structures");
  check->add_option("--seed", seed, "sampling seed");
  check->add_option("--cap", cap, "per-structure equilibrium enumeration cap");

  auto* generate = app.add_subcommand("gen", "Draw a random environment or structure");
  generate->add_option("what", what, "env | structure")
      ->required()
      ->check(CLI::IsMember({"env", "structure"}));
  generate->add_option("--spec", spec_file, "file with a [generator] section")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInputError;
  }

  try {
    if (*solve) {
      auto f = detail::load(file);
      const auto& env = detail::need_env(f);
      report::SolvePrintOptions opt{trace, witnesses};
      if (concept_arg == "bfr") {
        report::write_solve(out, env, solve_bfr(env), nullptr, opt);
      } else if (concept_arg == "dr") {
        if (!f.restriction) throw InputError("restriction block required");
        report::write_solve(out, env, solve_delta_r(env, *f.restriction), nullptr, opt);
      } else {
        const auto& s = detail::need_structure(f);
        report::write_solve(out, env, solve_icr(env, s), &s, opt);
      }
      return kOk;
    }
    if (*bne) {
      auto f = detail::load(file);
      const auto& env = detail::need_env(f);
      const auto& s = detail::need_structure(f);
      report::write_bne(out, env, s, enumerate_pure_bne(env, s, BneOptions{cap}));
      return kOk;
    }
    if (*consistent) {
      auto f = detail::load(file);
      const auto& env = detail::need_env(f);
      const auto& s = detail::need_structure(f);
      auto rep = is_consistent(env, s, detail::restriction_or_unrestricted(f));
      report::write_consistency(out, env, s, rep);
      return rep.consistent ? kOk : kCounterexample;
    }
    if (*canonical) {
      auto f = detail::load(file);
      const auto& env = detail::need_env(f);
      auto r = detail::restriction_or_unrestricted(f);
      auto dr = solve_delta_r(env, r, SolveOptions{false});
      io::write_structure(out, env, canonical_structure(env, r, dr));
      return kOk;
    }
    if (*check) {
      auto f = detail::load(file);
      const auto& env = detail::need_env(f);
      auto r = detail::restriction_or_unrestricted(f);
      auto spec = f.generator.value_or(gen::GeneratorSpec{});
      auto sampled = gen::sample_structures(env, r, spec, samples, seed);
      out << "samples: " << samples << "\nseed: " << seed << '\n';
      if (mode == "union") {
        auto rep = check_union(env, r, sampled);
        report::write_union(out, env, rep, sampled);
        return rep.counterexamples.empty() ? kOk : kCounterexample;
      }
      auto rep = check_bne_union(env, r, sampled, BneOptions{cap});
      report::write_bne_union(out, env, rep, sampled);
      return rep.counterexamples.empty() ? kOk : kCounterexample;
    }
    if (*generate) {
      auto f = detail::load(spec_file);
      if (!f.generator) throw InputError("generator block required");
      if (what == "env") {
        io::write_environment(out, gen::random_environment(*f.generator));
        return kOk;
      }
      const auto& env = detail::need_env(f);
      io::write_structure(
          out, env,
          gen::random_consistent_structure(env, detail::restriction_or_unrestricted(f), *f.generator));
      return kOk;
    }
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const io::SemanticError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInputError;
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace infrob::cli
