// Copyright 2026 The wnl Authors
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

#include <doctest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

const std::string kCli = WNL_CLI_PATH;
const std::string kData = WNL_TEST_DATA_DIR;

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "wnl_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("grid of the vacuum") {
  const fs::path out = scratch("vacuum.csv");
  REQUIRE(run("grid --state " + kData + "/vacuum.json --grid 101,101 --box -4,4,-4,4 --out " +
              out.string()) == 0);
  const auto rows = read_csv(out);
  REQUIRE(rows.size() == 10202);
  CHECK(rows[0] == std::vector<std::string>{"x", "p", "w"});
  CHECK(rows[1][0] == "-4");
  CHECK(rows[2][1] == "-3.9199999999999999");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][2]) > 0.0);
}

TEST_CASE("grid of a pure cat shows negativity") {
  const fs::path out = scratch("cat.csv");
  REQUIRE(run("grid --state " + kData + "/cat_even.json --out " + out.string()) == 0);
  const auto rows = read_csv(out);
  bool negative = false;
  for (std::size_t i = 1; i < rows.size(); ++i) negative = negative || std::stod(rows[i][2]) < 0.0;
  CHECK(negative);
}

TEST_CASE("grid input errors") {
  CHECK(run("grid --state " + kData + "/invalid/malformed.json") == 2);
  CHECK(run("grid --state " + kData + "/invalid/non_hermitian.json") == 2);
  CHECK(run("grid --state " + kData + "/invalid/mixed_sigma.json") == 2);
  CHECK(run("grid") == 2);
  CHECK(run("grid --state " + kData + "/missing.json") == 3);
  CHECK(run("grid --state " + kData + "/vacuum.json --out /nonexistent_dir/x.csv") == 3);
  CHECK(run("grid --state " + kData + "/vacuum.json --box 1,0,0,1") == 2);
  CHECK(run("frobnicate") == 2);
}

TEST_CASE("cat sweep rows") {
  const fs::path out = scratch("cat_sweep.csv");
  REQUIRE(run("cat-sweep --re-beta 0.5,1.0 --out " + out.string()) == 0);
  const auto rows = read_csv(out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"re_beta", "delta_c_numeric", "delta_c_analytic",
                                            "abs_err", "status"});
  CHECK(std::stod(rows[2][2]) == doctest::Approx(0.135335).epsilon(1e-6));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][4] == "ok");
    CHECK(std::stod(rows[i][3]) <= 1e-3);
  }
}

TEST_CASE("cat sweep from a config file") {
  const fs::path cfg = scratch("cat.json");
  std::ofstream(cfg) << R"({"re_beta": {"start": 0.5, "stop": 1.0, "step": 0.25}, "tol": 1e-3})";
  const fs::path out = scratch("cat_cfg.csv");
  REQUIRE(run("cat-sweep --config " + cfg.string() + " --out " + out.string()) == 0);
  CHECK(read_csv(out).size() == 4);

  const fs::path empty = scratch("empty.json");
  std::ofstream(empty) << R"({"re_beta": []})";
  CHECK(run("cat-sweep --config " + empty.string()) == 2);
  CHECK(run("cat-sweep --re-beta 3.5") == 2);
}

TEST_CASE("circle sweep rows") {
  const fs::path out = scratch("circle_sweep.csv");
  REQUIRE(run("circle-sweep --d 1,8 --out " + out.string()) == 0);
  const auto rows = read_csv(out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"d", "delta_c_numeric", "delta_c_bound", "status"});
  CHECK(std::stod(rows[1][2]) == doctest::Approx(0.0935).epsilon(0.01));
  CHECK(rows[2][3] == "ok");
  CHECK(std::stod(rows[2][1]) <= std::stod(rows[2][2]));
  CHECK(run("circle-sweep --m 63 --d 2") == 2);
  CHECK(run("circle-sweep --d 9") == 2);
}

TEST_CASE("circle radial profile") {
  const fs::path out = scratch("radial.csv");
  REQUIRE(run("circle-radial --r-max 4 --samples 41 --out " + out.string()) == 0);
  const auto rows = read_csv(out);
  REQUIRE(rows.size() == 42);
  CHECK(rows[0] ==
        std::vector<std::string>{"r", "w_exact", "w_bessel", "j0_over_pi", "in_window"});
  CHECK(std::stod(rows[1][1]) > 0);
  CHECK(std::stod(rows[1][2]) > 0);
  CHECK(std::stod(rows[1][3]) > 0);
  bool flagged = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][4] == "0") {
      flagged = true;
      CHECK(rows[i][2].empty());
    }
  }
  CHECK(flagged);
}

TEST_CASE("verify exit codes and determinism") {
  const fs::path a = scratch("verify_a.txt");
  const fs::path b = scratch("verify_b.txt");
  CHECK(run("verify --suite rescaling --suite diagonal --seed 3 --out " + a.string()) == 0);
  CHECK(run("verify --suite rescaling --suite diagonal --seed 3 --out " + b.string()) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(run("verify --suite qndm --inject-fault") == 1);
  CHECK(run("verify --suite bogus") == 2);
}
