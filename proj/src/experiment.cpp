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

#include "monopath/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>

#include <json.hpp>

#include "monopath/asymptotics.hpp"
#include "monopath/exact.hpp"
#include "monopath/gap_process.hpp"
#include "monopath/montecarlo.hpp"
#include "monopath/stats.hpp"

namespace monopath {
namespace {

constexpr std::int64_t kExactFullDpLimit = 50000;

void require(bool ok, const char* message) {
  if (!ok) throw SpecError(message);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using Row = std::vector<Cell>;

// Runs one row's computation, turning any engine failure into an error-column
// entry so a sweep survives individual bad cells.
template <typename Fn>
void guarded_row(Table& table, Row coords, std::size_t result_cols, Fn&& fn) {
  Row row = std::move(coords);
  try {
    fn(row);
    row.emplace_back(std::string());
  } catch (const std::exception& e) {
    for (std::size_t i = 0; i < result_cols; ++i) row.emplace_back(std::string());
    row.emplace_back(std::string(e.what()));
  }
  table.rows.push_back(std::move(row));
}

Table cmd_exact(const ExperimentSpec& spec) {
  require(!spec.n_grid.empty(), "exact: --n grid is required");
  require(!spec.p_grid.empty(), "exact: --p grid is required");
  for (std::int64_t n : spec.n_grid)
    require(n <= kExactFullDpLimit || spec.truncation_eps > 0.0,
            "exact: n > 50000 needs --eps > 0 (full DP is quadratic)");
  Table t;
  t.columns = {"n", "p", "prob_exact", "truncation_mass", "error"};
  for (std::int64_t n : spec.n_grid)
    for (double p : spec.p_grid)
      guarded_row(t, {n, p}, 2, [&](Row& row) {
        const ReachProbability r = reach_prob_dp(n, p, spec.truncation_eps);
        row.emplace_back(r.value);
        row.emplace_back(r.truncation_mass);
      });
  return t;
}

Table cmd_simulate(const ExperimentSpec& spec) {
  require(!spec.n_grid.empty(), "simulate: --n grid is required");
  require(!spec.p_grid.empty() || !spec.b_grid.empty(),
          "simulate: --p or --b grid is required");
  require(spec.p_grid.empty() || spec.b_grid.empty(),
          "simulate: --p and --b are mutually exclusive");
  require(spec.trials >= 2, "simulate: --trials must be >= 2");
  Table t;
  t.columns = {"n", "p", "prob_mc", "std_error", "error"};
  const auto add_row = [&](std::int64_t n, double p) {
    guarded_row(t, {n, p}, 2, [&](Row& row) {
      const EstimateWithError est =
          estimate(spec.master_seed, spec.trials, spec.threads,
                   [n, p](RngStream& s) { return simulate_reach(n, p, s) ? 1.0 : 0.0; });
      row.emplace_back(est.mean);
      row.emplace_back(est.std_error);
    });
  };
  for (std::int64_t n : spec.n_grid) {
    if (!spec.p_grid.empty()) {
      for (double p : spec.p_grid) add_row(n, p);
    } else {
      for (double b : spec.b_grid) {
        try {
          add_row(n, solve_p_from_b(n, b));
        } catch (const std::exception& e) {
          t.rows.push_back({n, std::string(), std::string(), std::string(),
                            std::string(e.what())});
        }
      }
    }
  }
  return t;
}

Table cmd_sweep(const ExperimentSpec& spec) {
  require(!spec.n_grid.empty(), "sweep: --n grid is required");
  require(!spec.x_grid.empty(), "sweep: --x grid is required");
  require(spec.trials >= 100, "sweep: --trials must be >= 100");
  Table t;
  t.columns = {"n", "x", "p", "prob_mc", "std_error", "limit_prob", "error"};
  for (std::int64_t n : spec.n_grid)
    for (double x : spec.x_grid)
      guarded_row(t, {n, x}, 4, [&](Row& row) {
        const CriticalSequence cs = critical_p(n, x);
        const EstimateWithError est = estimate(
            spec.master_seed, spec.trials, spec.threads, [&cs, n](RngStream& s) {
              return simulate_reach(n, cs.p, s) ? 1.0 : 0.0;
            });
        row.emplace_back(cs.p);
        row.emplace_back(est.mean);
        row.emplace_back(est.std_error);
        row.emplace_back(limit_prob(x));
      });
  return t;
}

Table cmd_gumbel(const ExperimentSpec& spec) {
  require(!spec.a_grid.empty(), "gumbel: --a grid is required");
  require(!spec.p_grid.empty(), "gumbel: --p grid is required");
  require(spec.trials >= 2, "gumbel: --trials must be >= 2");
  Table t;
  t.columns = {"a", "p", "ks_distance", "mean", "se", "target_mean", "error"};
  for (double a : spec.a_grid)
    for (double p : spec.p_grid)
      guarded_row(t, {a, p}, 4, [&](Row& row) {
        const std::vector<double> stats =
            run_trials(spec.master_seed, spec.trials, spec.threads,
                       [a, p](RngStream& s) { return exploration_statistic(a, p, s); });
        const double shift = log_expm1(a);
        std::vector<double> centered(stats);
        for (double& v : centered) v -= shift;
        const double ks =
            ks_distance(EmpiricalSample(std::move(centered)), gumbel_cdf);
        const SummaryStats s = summarize(stats);
        row.emplace_back(ks);
        row.emplace_back(s.mean);
        row.emplace_back(s.std_error);
        row.emplace_back(std::numbers::egamma + shift);
      });
  return t;
}

Table cmd_limit(const ExperimentSpec& spec) {
  std::vector<double> xs = spec.x_grid;
  if (xs.empty())
    for (double b : spec.b_grid) {
      require(b > 0.0, "limit: --b values must be > 0");
      xs.push_back(std::log(b));
    }
  require(!xs.empty(), "limit: --x or --b grid is required");
  Table t;
  t.columns = {"x", "limit_prob", "limit_prob_tanh", "f_b", "error"};
  for (double x : xs)
    guarded_row(t, {x}, 3, [&](Row& row) {
      row.emplace_back(limit_prob(x));
      row.emplace_back(limit_prob_tanh(x, 1e-10));
      row.emplace_back(f_of_b(std::exp(x)));
    });
  return t;
}

Table cmd_paths(const ExperimentSpec& spec) {
  require(!spec.a_grid.empty(), "paths: --a grid is required");
  require(!spec.p_grid.empty(), "paths: --p grid is required");
  require(spec.trials >= 1, "paths: --trials must be >= 1");
  Table t;
  t.columns = {"a",          "p",           "k", "empirical_pmf",
               "geometric_pmf", "tv_distance", "error"};
  for (double a : spec.a_grid)
    for (double p : spec.p_grid) {
      try {
        const std::vector<BigCount> counts =
            run_trials(spec.master_seed, spec.trials, spec.threads,
                       [a, p](RngStream& s) { return sample_path_count(a, p, s); });
        std::map<std::int64_t, double> pmf;
        const double w = 1.0 / static_cast<double>(spec.trials);
        std::int64_t cap = 1;
        for (const BigCount& c : counts) {
          // A count too large for int64 would fold into the tail bucket; at
          // the parameters this command accepts it cannot actually occur.
          const std::int64_t k =
              c.fits_uint64() && c.to_uint64() <= 0x7FFFFFFFFFFFFFFEULL
                  ? static_cast<std::int64_t>(c.to_uint64())
                  : std::numeric_limits<std::int64_t>::max();
          pmf[k] += w;
          cap = std::max(cap, k);
        }
        const double success = std::exp(-a);
        const auto geometric_pmf = [success](std::int64_t k) {
          return k >= 1 ? success * std::pow(1.0 - success, static_cast<double>(k - 1))
                        : 0.0;
        };
        const double tv = tv_distance_discrete(pmf, geometric_pmf, cap);
        for (const auto& [k, freq] : pmf)
          t.rows.push_back(
              {a, p, k, freq, geometric_pmf(k), tv, std::string()});
      } catch (const std::exception& e) {
        t.rows.push_back({a, p, std::string(), std::string(), std::string(),
                          std::string(), std::string(e.what())});
      }
    }
  return t;
}

Table cmd_rest(const ExperimentSpec& spec) {
  require(!spec.a_grid.empty(), "rest: --a grid is required");
  require(!spec.p_grid.empty(), "rest: --p grid is required");
  require(spec.trials >= 2, "rest: --trials must be >= 2");
  Table t;
  t.columns = {"a", "p", "mean_r", "se", "target", "var_r", "error"};
  for (double a : spec.a_grid)
    for (double p : spec.p_grid)
      guarded_row(t, {a, p}, 4, [&](Row& row) {
        const std::vector<double> values =
            run_trials(spec.master_seed, spec.trials, spec.threads,
                       [a, p](RngStream& s) { return sample_rest_term(a, p, s); });
        const SummaryStats s = summarize(values);
        row.emplace_back(s.mean);
        row.emplace_back(s.std_error);
        row.emplace_back(log_expm1(a) - std::log(a));
        row.emplace_back(s.variance);
      });
  return t;
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::exact: return "exact";
    case Command::simulate: return "simulate";
    case Command::limit: return "limit";
    case Command::sweep: return "sweep";
    case Command::gumbel: return "gumbel";
    case Command::paths: return "paths";
    case Command::rest: return "rest";
  }
  return "?";
}

Table run_command(const ExperimentSpec& spec) {
  switch (spec.command) {
    case Command::exact: return cmd_exact(spec);
    case Command::simulate: return cmd_simulate(spec);
    case Command::limit: return cmd_limit(spec);
    case Command::sweep: return cmd_sweep(spec);
    case Command::gumbel: return cmd_gumbel(spec);
    case Command::paths: return cmd_paths(spec);
    case Command::rest: return cmd_rest(spec);
  }
  throw SpecError("unknown command");
}

std::string to_csv(const Table& table) {
  std::string out;
  const auto append_escaped = [&out](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
      out += s;
      return;
    }
    out += '"';
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    out += '"';
  };
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    append_escaped(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (const auto* iv = std::get_if<std::int64_t>(&row[i]))
        out += std::to_string(*iv);
      else if (const auto* dv = std::get_if<double>(&row[i]))
        out += format_double(*dv);
      else
        append_escaped(std::get<std::string>(row[i]));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string& key = table.columns[i];
      if (const auto* iv = std::get_if<std::int64_t>(&row[i]))
        obj[key] = *iv;
      else if (const auto* dv = std::get_if<double>(&row[i]))
        obj[key] = *dv;
      else
        obj[key] = std::get<std::string>(row[i]);
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

void write_output(const ExperimentSpec& spec, const Table& table) {
  const std::string payload =
      spec.format == OutputFormat::csv ? to_csv(table) : to_json(table);
  if (spec.output_path.empty()) {
    std::cout << payload;
    if (!std::cout) throw IoError("failed to write to standard output");
    return;
  }
  std::ofstream out(spec.output_path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + spec.output_path);
  out << payload;
  out.flush();
  if (!out) throw IoError("failed while writing: " + spec.output_path);
}

}  // namespace monopath
