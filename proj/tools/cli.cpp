// Copyright 2026 The realvar Authors
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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "bench.hpp"
#include "realvar/corpus.hpp"
#include "realvar/io.hpp"

namespace realvar::cli {

namespace {

struct SolveArgs {
  std::string mode = "real";
  std::string criterion = "dims";
  std::string policy = "extended";
  std::string selector = "greedy";
  int t_start = -1;
  int t_max = -1;
  int t_extra = 1;
  double rank_tol = 0.0;  // 0 keeps the default (or REALVAR_RANK_TOL)
  double imag_tol = VerifyOptions{}.imag_tol;
  double residual_tol = VerifyOptions{}.residual_tol;
  std::uint64_t seed = 1;
  bool json = false;
  std::string file;
};

SolveConfig to_config(const SolveArgs& a) {
  SolveConfig cfg;
  cfg.mode = a.mode == "complex" ? Mode::Complex : Mode::Real;
  cfg.criterion = a.criterion == "rank" ? Criterion::Rank
                  : a.criterion == "both" ? Criterion::Both
                                          : Criterion::Dims;
  cfg.policy = a.policy == "strict" ? Policy::Strict : Policy::Extended;
  cfg.selector = a.selector == "pivots" ? Selector::Pivots : Selector::Greedy;
  cfg.t_start = a.t_start;
  cfg.t_max = a.t_max;
  cfg.t_extra = a.t_extra;
  if (a.rank_tol > 0.0) cfg.rank_tol.relative = a.rank_tol;
  cfg.verify.imag_tol = a.imag_tol;
  cfg.verify.residual_tol = a.residual_tol;
  cfg.seed = a.seed;
  return cfg;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int report(const PolySystem& sys, const SolveConfig& cfg, const SolveResult& res, bool json,
           std::ostream& out, std::ostream& err) {
  if (json)
    out << result_to_json(sys, cfg, res).dump(2) << "\n";
  else
    out << render_tables(res) << "\n" << render_summary(sys, cfg, res);
  if (res.success) return kExitOk;
  if (res.t_max_exhausted) {
    err << "realvar: " << res.message << "\n";
    return kExitTMax;
  }
  err << "realvar: " << res.message << "\n";
  return kExitError;
}

void add_solve_options(CLI::App& app, SolveArgs& a) {
  app.add_option("--mode", a.mode, "real or complex roots")
      ->check(CLI::IsMember({"real", "complex"}))
      ->capture_default_str();
  app.add_option("--criterion", a.criterion, "stopping test: dims, rank or both")
      ->check(CLI::IsMember({"dims", "rank", "both"}))
      ->capture_default_str();
  app.add_option("--policy", a.policy, "strict: D <= s <= t/2; extended: 1 <= s <= t")
      ->check(CLI::IsMember({"strict", "extended"}))
      ->capture_default_str();
  app.add_option("--selector", a.selector, "quotient basis selection: greedy or pivots")
      ->check(CLI::IsMember({"greedy", "pivots"}))
      ->capture_default_str();
  app.add_option("--t-start", a.t_start, "first order (default: max generator degree)");
  app.add_option("--t-max", a.t_max, "last order (default: t-start + 6)");
  app.add_option("--t-extra", a.t_extra, "orders to try past a failed extraction")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--rank-tol", a.rank_tol, "relative rank tolerance (default 1e-8 or REALVAR_RANK_TOL)")
      ->check(CLI::PositiveNumber);
  app.add_option("--imag-tol", a.imag_tol, "imaginary part accepted as real")->capture_default_str();
  app.add_option("--residual-tol", a.residual_tol, "scaled residual gate for real roots")
      ->capture_default_str();
  app.add_option("--seed", a.seed, "seed for the random combination in root extraction")
      ->capture_default_str();
  app.add_flag("--json", a.json, "print the versioned JSON document instead of tables");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"realvar: real roots of polynomial systems by prolongation-projection", "realvar"};
  app.require_subcommand(1);

  SolveArgs sa;
  CLI::App* solve_cmd = app.add_subcommand("solve", "solve the system in FILE ('-' reads stdin)");
  add_solve_options(*solve_cmd, sa);
  solve_cmd->add_option("FILE", sa.file, "system file")->required();

  bool all = false, list = false, json = false;
  int criterion = 0;
  std::string name;
  CLI::App* bench_cmd = app.add_subcommand("bench", "embedded corpus and acceptance checks");
  bench_cmd->add_flag("--all", all, "run every acceptance criterion");
  bench_cmd->add_flag("--list", list, "list the embedded systems");
  bench_cmd->add_option("--criterion", criterion, "run a single acceptance criterion")
      ->check(CLI::Range(1, bench::kCriteria));
  bench_cmd->add_flag("--json", json, "JSON output for a single system");
  bench_cmd->add_option("NAME", name, "solve one embedded system (real mode, both criteria)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (solve_cmd->parsed()) {
      const PolySystem sys = parse_system(slurp(sa.file));
      const SolveConfig cfg = to_config(sa);
      return report(sys, cfg, solve(sys, cfg), sa.json, out, err);
    }
    if (list) {
      for (const auto& b : corpus()) out << b.name << "  " << b.description << "\n";
      return kExitOk;
    }
    if (all || criterion > 0) {
      const int lo = all ? 1 : criterion, hi = all ? bench::kCriteria : criterion;
      int failed = 0;
      for (int id = lo; id <= hi; ++id) {
        bench::CriterionReport r = bench::run_criterion(id);
        failed += !r.pass;
        out << bench::format_report(r) << std::flush;
      }
      out << (hi - lo + 1 - failed) << "/" << (hi - lo + 1) << " criteria passed\n";
      return failed == 0 ? kExitOk : kExitError;
    }
    if (!name.empty()) {
      const PolySystem sys = load_bench(name);
      SolveConfig cfg;
      cfg.criterion = Criterion::Both;
      return report(sys, cfg, solve(sys, cfg), json, out, err);
    }
    err << "realvar bench: give --all, --list, --criterion N or a system name\n";
    return kExitError;
  } catch (const ParseError& e) {
    err << "realvar: " << sa.file << ":" << e.line() << ":" << e.column() << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "realvar: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace realvar::cli
