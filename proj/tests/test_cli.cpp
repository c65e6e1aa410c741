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

// Drives the installed binary end to end: output schemas, format round
// trips, determinism across thread counts, and the exit-code contract.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const std::string kCli = MONOPATH_CLI_PATH;

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream cs(line);
    std::string cell;
    while (std::getline(cs, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.push_back("");
    rows.push_back(std::move(cells));
  }
  return rows;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "monopath_cli_tests";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("exact command emits the documented schema and values") {
  const fs::path out = scratch_dir() / "exact.csv";
  REQUIRE(run("exact --n 2,3 --p 0.5 --out " + out.string()) == 0);
  const auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"n", "p", "prob_exact",
                                            "truncation_mass", "error"});
  CHECK(std::stod(rows[1][2]) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::stod(rows[2][2]) == doctest::Approx(0.625).epsilon(1e-14));
  CHECK(rows[1][4].empty());
}

TEST_CASE("sweep output is byte-identical for 1 and 8 worker threads") {
  const fs::path one = scratch_dir() / "sweep1.csv";
  const fs::path eight = scratch_dir() / "sweep8.csv";
  const std::string common = "sweep --n 500 --x 0 --trials 2000 --seed 7 ";
  REQUIRE(run(common + "--threads 1 --out " + one.string()) == 0);
  REQUIRE(run(common + "--threads 8 --out " + eight.string()) == 0);
  CHECK(slurp(one) == slurp(eight));
}

TEST_CASE("csv and json outputs carry the same values") {
  const fs::path csv = scratch_dir() / "limit.csv";
  const fs::path json = scratch_dir() / "limit.json";
  REQUIRE(run("limit --x lin:-2:2:9 --format csv --out " + csv.string()) == 0);
  REQUIRE(run("limit --x lin:-2:2:9 --format json --out " + json.string()) == 0);

  const auto rows = parse_csv(slurp(csv));
  const nlohmann::json parsed = nlohmann::json::parse(slurp(json));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() + 1 == rows.size());
  for (std::size_t r = 0; r < parsed.size(); ++r)
    for (std::size_t c = 0; c + 1 < rows[0].size(); ++c) {
      const double from_csv = std::stod(rows[r + 1][c]);
      const double from_json = parsed[r][rows[0][c]].get<double>();
      CHECK(from_csv == from_json);  // bit-exact round trip
    }
}

TEST_CASE("limit rows satisfy limit_prob = 1 - f_b") {
  const fs::path out = scratch_dir() / "limit_id.csv";
  REQUIRE(run("limit --x lin:-6:6:13 --out " + out.string()) == 0);
  const auto rows = parse_csv(slurp(out));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double lp = std::stod(rows[r][1]);
    const double tanh_form = std::stod(rows[r][2]);
    const double fb = std::stod(rows[r][3]);
    CHECK(std::abs(lp - (1.0 - fb)) < 1e-10);
    CHECK(std::abs(lp - tanh_form) < 1e-8);
  }
}

TEST_CASE("invalid flag combinations exit 2 and leave no output behind") {
  const fs::path out = scratch_dir() / "never_written.csv";
  fs::remove(out);
  CHECK(run("exact --n 2 --out " + out.string()) == 2);          // missing --p
  CHECK(run("exact --p 0.5 --out " + out.string()) == 2);        // missing --n
  CHECK(run("frobnicate --n 2 --out " + out.string()) == 2);     // unknown command
  CHECK(run("exact --n 2 --p 2.0 --out " + out.string()) == 0);  // engine error -> row
  fs::remove(out);
  CHECK(run("exact --n 0 --p 0.5 --out " + out.string()) == 2);  // bad grid entry
  CHECK(run("sweep --n 100 --x 0 --trials 50") == 2);            // too few trials
  CHECK(run("exact --n 2 --p geom:0:1:4") == 2);                 // bad geom range
  CHECK(!fs::exists(out));
}

TEST_CASE("large-n exact runs are refused unless truncation is enabled") {
  CHECK(run("exact --n 60000 --p 0.0005") == 2);
  const fs::path out = scratch_dir() / "big_exact.csv";
  REQUIRE(run("exact --n 60000 --p 0.0005 --eps 1e-12 --out " + out.string()) == 0);
  const auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() == 2);
  CHECK(std::stod(rows[1][2]) > 0.0);
  CHECK(std::stod(rows[1][3]) > 0.0);   // some mass was actually truncated
  CHECK(std::stod(rows[1][3]) < 1e-9);  // ... but a bounded amount
}

TEST_CASE("engine errors are reported per row while the sweep continues") {
  const fs::path out = scratch_dir() / "partial.csv";
  REQUIRE(run("exact --n 2,3 --p 0.5,2.0 --out " + out.string()) == 0);
  const auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() == 5);
  CHECK(rows[1][4].empty());        // p = 0.5 fine
  CHECK(!rows[2][4].empty());       // p = 2.0 refused by the engine
  CHECK(rows[2][2].empty());        // no value fabricated
  CHECK(rows[3][4].empty());
}

TEST_CASE("paths command emits a normalized pmf with k >= 1") {
  const fs::path out = scratch_dir() / "paths.csv";
  REQUIRE(run("paths --a 1 --p 0.01 --trials 2000 --seed 3 --out " +
              out.string()) == 0);
  const auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() >= 2);
  double mass = 0.0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    CHECK(std::stoll(rows[r][2]) >= 1);
    mass += std::stod(rows[r][3]);
    CHECK(std::stod(rows[r][5]) == std::stod(rows[1][5]));  // shared tv column
  }
  CHECK(std::abs(mass - 1.0) < 1e-12);
}

TEST_CASE("the output directory variable is honored and flags win") {
  const fs::path dir = scratch_dir() / "envout";
  fs::create_directories(dir);
  fs::remove(dir / "limit.csv");
  const std::string env = "MONOPATH_OUT_DIR=" + dir.string() + " ";
  const int status = std::system((env + kCli + " limit --x 0 >/dev/null 2>&1").c_str());
  REQUIRE(WEXITSTATUS(status) == 0);
  CHECK(fs::exists(dir / "limit.csv"));

  const fs::path explicit_out = scratch_dir() / "explicit.csv";
  fs::remove(explicit_out);
  fs::remove(dir / "limit2.csv");
  const int status2 = std::system(
      (env + kCli + " limit --x 0 --out " + explicit_out.string() + " >/dev/null 2>&1")
          .c_str());
  REQUIRE(WEXITSTATUS(status2) == 0);
  CHECK(fs::exists(explicit_out));

  // unwritable target -> exit 4
  CHECK(run("limit --x 0 --out /nonexistent_dir_zzz/out.csv") == 4);
}
