// Copyright 2026 The qcjkls Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "qcjkls/error.hpp"

namespace {

using namespace qcjkls::cli;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcjkls: quandle colorings and cocycle state-sum invariants of braid closures"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "pretty", cache, quandle_file, cocycle_file;
  std::uint64_t assume = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
  app.add_option("--budget", cfg.budget, "Largest number of tuples to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--tolerance", cfg.tolerance, "Tolerance for limit detection")->check(CLI::PositiveNumber);
  app.add_option("--cache", cache, "JSON-lines result cache (default: $QCJKLS_CACHE)");
  app.add_option("--quandle", quandle_file, "Quandle JSON file; used with the trivial cocycle")->check(CLI::ExistingFile);
  app.add_option("--cocycle", cocycle_file, "Cocycle JSON file")->check(CLI::ExistingFile);
  auto* assume_opt = app.add_option("--assume-crossing-number", assume, "Crossing number to use for f")
                         ->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  app.add_flag("--affine", cfg.affine, "Solve Alexander quandle colorings as a linear system");

  auto* quandle = app.add_subcommand("quandle", "Build or check quandle tables");
  quandle->require_subcommand(1);
  auto* build = quandle->add_subcommand("build", "Emit a quandle table");
  std::string kind;
  std::uint32_t modulus = 0;
  std::string poly;
  build->add_option("kind", kind, "s4 or alexander")->required()->check(CLI::IsMember({"s4", "alexander"}));
  build->add_option("--mod", modulus, "Coefficient modulus n");
  build->add_option("--poly", poly, "Quotient polynomial in T, e.g. \"T^2+T+1\"");
  auto* check = quandle->add_subcommand("check", "Check the quandle axioms of a table file");
  std::string check_file;
  check->add_option("file", check_file, "Quandle JSON file")->required()->check(CLI::ExistingFile);

  auto* cocycle = app.add_subcommand("cocycle", "Check 2-cocycle conditions");
  cocycle->require_subcommand(1);
  auto* ccheck = cocycle->add_subcommand("check", "Check a cocycle file (default: the built-in S4 cocycle)");
  std::string cocycle_check_file;
  ccheck->add_option("file", cocycle_check_file, "Cocycle JSON file")->check(CLI::ExistingFile);

  auto* invariant = app.add_subcommand("invariant", "State-sum invariant of a braid closure");
  std::string braid;
  invariant->add_option("braid", braid, "Braid word such as \"s1^3\" or \"B3: s1 s2^-1\"")->required();

  auto* colorings = app.add_subcommand("colorings", "List the quandle colorings of a braid closure");
  std::string coloring_braid;
  bool count_only = false;
  colorings->add_option("braid", coloring_braid, "Braid word")->required();
  colorings->add_flag("--count", count_only, "Print only the number of colorings");

  auto* family = app.add_subcommand("family", "Sweep one of the braid families");
  std::string family_id, family_range;
  std::uint32_t m = 0, step = 1;
  bool verify = false;
  family->add_option("id", family_id, "Kn, KPrime, K0, Km or KPrimeM (Km:2 also accepted)")->required();
  family->add_option("--n", family_range, "Index range A..B")->required();
  family->add_option("--m", m, "Parameter m for Km and KPrimeM");
  family->add_option("--step", step, "Step through the range")->check(CLI::PositiveNumber);
  family->add_flag("--verify", verify, "Cross-check closed forms by brute force within the budget");

  auto* limits = app.add_subcommand("limits", "Limit points of several families and their separation");
  std::vector<std::string> families;
  std::string limits_range = "10..200";
  std::uint32_t limits_step = 10;
  limits->add_option("--families", families, "Family ids, comma separated")->required()->delimiter(',');
  limits->add_option("--n", limits_range, "Index range A..B");
  limits->add_option("--step", limits_step, "Step through the range")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  cfg.format = format == "json" ? Format::kJson : format == "csv" ? Format::kCsv : Format::kPretty;
  if (!cache.empty()) {
    cfg.cache_path = cache;
  } else if (const char* env = std::getenv("QCJKLS_CACHE"); env && *env) {
    cfg.cache_path = env;
  }
  if (!quandle_file.empty()) cfg.quandle_file = quandle_file;
  if (!cocycle_file.empty()) cfg.cocycle_file = cocycle_file;
  if (assume_opt->count()) cfg.assume_crossing_number = assume;

  const Streams io{std::cout, std::cerr};
  try {
    if (build->parsed()) {
      if (kind == "alexander" && (modulus == 0 || poly.empty())) {
        std::cerr << "error: quandle build alexander needs --mod and --poly\n";
        return kExitBadInput;
      }
      return cmd_quandle_build(cfg, io, kind, modulus, poly);
    }
    if (check->parsed()) return cmd_quandle_check(cfg, io, check_file);
    if (ccheck->parsed())
      return cmd_cocycle_check(cfg, io,
                               cocycle_check_file.empty() ? std::nullopt
                                                          : std::optional<std::filesystem::path>(cocycle_check_file));
    if (invariant->parsed()) return cmd_invariant(cfg, io, braid);
    if (colorings->parsed()) return cmd_colorings(cfg, io, coloring_braid, count_only);
    if (family->parsed()) return cmd_family(cfg, io, family_id, parse_range(family_range, step), m, verify);
    if (limits->parsed()) return cmd_limits(cfg, io, families, parse_range(limits_range, limits_step));
  } catch (const qcjkls::BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRefused;
  } catch (const qcjkls::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRefused;
  } catch (const qcjkls::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
