// Copyright 2026 The Monopath Authors
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

// monopath: phase-transition experiments for monotone-path reachability in
// vertex-ordered Erdos-Renyi graphs.
//
//   monopath exact    --n ... --p ... [--eps E]
//   monopath simulate --n ... (--p ... | --b ...) [--trials T] [--seed S]
//   monopath sweep    --n ... --x ... [--trials T] [--seed S]
//   monopath gumbel   --a ... --p ... [--trials T] [--seed S]
//   monopath limit    (--x ... | --b ...)
//   monopath paths    --a ... --p ... [--trials T] [--seed S]
//   monopath rest     --a ... --p ... [--trials T] [--seed S]
//
// Grids are comma lists ("0.1,0.2") or tagged ranges "lin:start:stop:count" /
// "geom:start:stop:count".  Output goes to stdout, or to --out PATH, or to
// $MONOPATH_OUT_DIR/<command>.<format> when the variable is set.
// Exit codes: 0 ok, 2 bad arguments, 3 numerical failure, 4 I/O failure.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monopath/asymptotics.hpp"
#include "monopath/experiment.hpp"

namespace {

using monopath::Command;
using monopath::ExperimentSpec;
using monopath::OutputFormat;
using monopath::SpecError;

std::vector<double> parse_real_grid(const std::string& text, const char* flag) {
  const auto fail = [flag](const std::string& why) -> std::vector<double> {
    throw SpecError(std::string(flag) + ": " + why);
  };
  const auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      const std::size_t pos = s.find(sep, start);
      parts.push_back(s.substr(start, pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    return parts;
  };
  const auto to_double = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) fail("cannot parse number '" + s + "'");
      return v;
    } catch (const SpecError&) {
      throw;
    } catch (const std::exception&) {
      fail("cannot parse number '" + s + "'");
      return 0.0;
    }
  };

  const bool lin = text.rfind("lin:", 0) == 0;
  const bool geom = text.rfind("geom:", 0) == 0;
  if (lin || geom) {
    const auto parts = split(text.substr(lin ? 4 : 5), ':');
    if (parts.size() != 3) fail("range needs start:stop:count");
    const double start = to_double(parts[0]);
    const double stop = to_double(parts[1]);
    const long count = std::strtol(parts[2].c_str(), nullptr, 10);
    if (count < 1) fail("range count must be >= 1");
    if (geom && (start * stop <= 0.0)) fail("geom range needs nonzero same-sign endpoints");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
      const double f = count == 1 ? 0.0
                                  : static_cast<double>(i) / static_cast<double>(count - 1);
      grid.push_back(lin ? start + (stop - start) * f
                         : start * std::pow(stop / start, f));
    }
    return grid;
  }

  std::vector<double> grid;
  for (const auto& part : split(text, ',')) {
    if (part.empty()) fail("empty grid entry");
    grid.push_back(to_double(part));
  }
  if (grid.empty()) fail("empty grid");
  return grid;
}

std::vector<std::int64_t> parse_int_grid(const std::string& text, const char* flag) {
  std::vector<std::int64_t> grid;
  for (double v : parse_real_grid(text, flag)) {
    const double r = std::llround(v);
    if (std::abs(v - r) > 1e-6 * std::max(1.0, std::abs(v)) || r < 1)
      throw SpecError(std::string(flag) + ": entries must be positive integers");
    grid.push_back(static_cast<std::int64_t>(r));
  }
  return grid;
}

struct RawArgs {
  std::string n, p, x, a, b;
  std::int64_t trials = 10000;
  std::uint64_t seed = 0;
  double eps = 0.0;
  int threads = 1;
  std::string format = "csv";
  std::string out;
};

void add_common_options(CLI::App* cmd, RawArgs& raw) {
  cmd->add_option("--n", raw.n, "grid of n values");
  cmd->add_option("--p", raw.p, "grid of p values");
  cmd->add_option("--x", raw.x, "grid of x (window coordinate) values");
  cmd->add_option("--a", raw.a, "grid of a (exploration budget) values");
  cmd->add_option("--b", raw.b, "grid of b (calibration constant) values");
  cmd->add_option("--trials", raw.trials, "Monte Carlo trials per cell");
  cmd->add_option("--seed", raw.seed, "master seed");
  cmd->add_option("--eps", raw.eps, "DP truncation epsilon");
  cmd->add_option("--threads", raw.threads, "worker threads (results identical for any value)");
  cmd->add_option("--format", raw.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", raw.out, "output path (default: stdout or $MONOPATH_OUT_DIR)");
}

ExperimentSpec build_spec(Command command, const RawArgs& raw) {
  ExperimentSpec spec;
  spec.command = command;
  if (!raw.n.empty()) spec.n_grid = parse_int_grid(raw.n, "--n");
  if (!raw.p.empty()) spec.p_grid = parse_real_grid(raw.p, "--p");
  if (!raw.x.empty()) spec.x_grid = parse_real_grid(raw.x, "--x");
  if (!raw.a.empty()) spec.a_grid = parse_real_grid(raw.a, "--a");
  if (!raw.b.empty()) spec.b_grid = parse_real_grid(raw.b, "--b");
  if (raw.trials < 1) throw SpecError("--trials must be >= 1");
  spec.trials = raw.trials;
  spec.master_seed = raw.seed;
  if (raw.eps < 0.0) throw SpecError("--eps must be >= 0");
  spec.truncation_eps = raw.eps;
  if (raw.threads < 1) throw SpecError("--threads must be >= 1");
  spec.threads = raw.threads;
  spec.format = raw.format == "json" ? OutputFormat::json : OutputFormat::csv;
  if (!raw.out.empty()) {
    spec.output_path = raw.out;
  } else if (const char* dir = std::getenv("MONOPATH_OUT_DIR");
             dir != nullptr && *dir != '\0') {
    spec.output_path = std::string(dir) + "/" + monopath::command_name(command) +
                       "." + raw.format;
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monotone-path reachability phase transition toolkit"};
  app.require_subcommand(1);

  RawArgs raw;
  const std::pair<const char*, Command> command_table[] = {
      {"exact", Command::exact},     {"simulate", Command::simulate},
      {"limit", Command::limit},     {"sweep", Command::sweep},
      {"gumbel", Command::gumbel},   {"paths", Command::paths},
      {"rest", Command::rest},
  };
  for (const auto& [name, cmd] : command_table)
    add_common_options(app.add_subcommand(name), raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "monopath: " << e.what() << std::endl;
    return 2;
  }

  Command command = Command::limit;
  for (const auto& [name, cmd] : command_table)
    if (app.get_subcommand(name)->parsed()) command = cmd;

  try {
    const ExperimentSpec spec = build_spec(command, raw);
    const monopath::Table table = monopath::run_command(spec);
    monopath::write_output(spec, table);
  } catch (const SpecError& e) {
    std::cerr << "monopath: " << e.what() << std::endl;
    return 2;
  } catch (const monopath::IoError& e) {
    std::cerr << "monopath: " << e.what() << std::endl;
    return 4;
  } catch (const monopath::NumericalError& e) {
    std::cerr << "monopath: " << e.what() << std::endl;
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "monopath: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "monopath: " << e.what() << std::endl;
    return 3;
  }
  return 0;
}
