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

#ifndef MONOPATH_EXPERIMENT_HPP
#define MONOPATH_EXPERIMENT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace monopath {

enum class Command { exact, simulate, limit, sweep, gumbel, paths, rest };
enum class OutputFormat { csv, json };

const char* command_name(Command c);

/// Invalid or inconsistent experiment description; maps to exit code 2.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Output could not be written; maps to exit code 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Declarative description of one experiment run.  Results are a pure
 * function of (spec, master_seed), independent of the thread count.
 */
struct ExperimentSpec {
  Command command = Command::limit;
  std::vector<std::int64_t> n_grid;
  std::vector<double> p_grid;
  std::vector<double> x_grid;
  std::vector<double> a_grid;
  std::vector<double> b_grid;
  std::int64_t trials = 10000;
  std::uint64_t master_seed = 0;
  double truncation_eps = 0.0;
  int threads = 1;
  OutputFormat format = OutputFormat::csv;
  std::string output_path;  // empty means standard output
};

// One table cell; failed rows keep their coordinates and carry the message in
// the trailing "error" column, with the result cells left as empty strings.
using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Runs the command described by the spec.  Row-level engine failures are
/// reported in the table's error column; spec-level problems throw SpecError.
Table run_command(const ExperimentSpec& spec);

/// CSV with a header row; doubles carry 17 significant digits so the values
/// survive a parse round-trip bit-exactly.
std::string to_csv(const Table& table);

/// The same table as a JSON array of row objects (column order preserved).
std::string to_json(const Table& table);

/// Serializes per spec.format and writes to spec.output_path or stdout.
void write_output(const ExperimentSpec& spec, const Table& table);

}  // namespace monopath

#endif  // MONOPATH_EXPERIMENT_HPP
