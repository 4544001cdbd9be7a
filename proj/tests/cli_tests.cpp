// Copyright 2026 The qperc developers
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

// End-to-end checks of the qperc binary. The path to the binary comes from
// the QPERC_CLI environment variable (set by ctest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "qperc_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run(const std::string& args) {
  const char* cli = std::getenv("QPERC_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "QPERC_CLI must point at the qperc binary");
  const fs::path out_path = work_dir() / "stdout.txt";
  const fs::path err_path = work_dir() / "stderr.txt";
  const std::string cmd = std::string(cli) + " " + args + " > " + out_path.string() +
                          " 2> " + err_path.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out_path);
  r.err = read_file(err_path);
  return r;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

fs::path dataset_path(const char* name, const std::string& text) {
  const fs::path p = work_dir() / name;
  write_file(p, text);
  return p;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

const std::string kNotDataset = "|0> -> |1>\n|1> -> |0>\n";
const std::string kHadamardDataset =
    "|0> -> 0.70710678118654752*|0> + 0.70710678118654752*|1>\n"
    "|1> -> 0.70710678118654752*|0> - 0.70710678118654752*|1>\n";
const std::string kXorDataset =
    "|00> -> |0>\n|01> -> |1>\n|10> -> |1>\n|11> -> |0>\n";
const std::string kCswapDataset =
    "|000> -> |00>\n|001> -> |01>\n|010> -> |10>\n|011> -> |11>\n"
    "|100> -> |00>\n|101> -> |10>\n|110> -> |01>\n|111> -> |11>\n";

}  // namespace

TEST_CASE("train/eval/verify on the involution dataset") {
  const fs::path qds = dataset_path("not.qds", kNotDataset);
  const fs::path qpm = work_dir() / "not.qpm";

  const RunResult train =
      run("train " + qds.string() + " --mode analytic --out " + qpm.string());
  CHECK(train.exit_code == 0);
  CHECK(contains(train.out, "mode: Unitary"));
  CHECK(contains(train.out, "[UNITARY]"));
  CHECK(contains(train.out, "singular values: 1, 1"));
  CHECK(fs::exists(qpm));

  const RunResult eval = run("eval " + qpm.string() + " \"|0>\"");
  CHECK(eval.exit_code == 0);
  CHECK(eval.out == "|1>\n");

  const RunResult verify = run("verify " + qpm.string() + " " + qds.string());
  CHECK(verify.exit_code == 0);
  CHECK(contains(verify.out, "2/2 PASS"));

  const RunResult info = run("info " + qpm.string());
  CHECK(info.exit_code == 0);
  CHECK(contains(info.out, "mode: Unitary"));
  CHECK(contains(info.out, "w: 2x2"));
}

TEST_CASE("iterative training reports the non-unitary drift") {
  const fs::path qds = dataset_path("not_iter.qds", kNotDataset);
  const RunResult train = run("train " + qds.string() +
                              " --mode iterative --eta 0.1 --iters 25 --pair 2");
  CHECK(train.exit_code == 0);
  CHECK(contains(train.out, "0.9282102"));
  CHECK(contains(train.out, "[NOT UNITARY]"));
  CHECK(contains(train.out, "mode: Decomposed"));
}

TEST_CASE("superposition outputs print unthresholded") {
  const fs::path qds = dataset_path("hadamard.qds", kHadamardDataset);
  const fs::path qpm = work_dir() / "hadamard.qpm";
  REQUIRE(run("train " + qds.string() + " --out " + qpm.string()).exit_code == 0);

  const RunResult eval = run("eval " + qpm.string() + " \"|1>\"");
  CHECK(eval.exit_code == 0);
  CHECK(eval.out == "0.70710678*|0> - 0.70710678*|1>\n");

  const RunResult forced = run("eval " + qpm.string() + " \"|0>\" --force-measure");
  CHECK(forced.exit_code == 0);
  CHECK(forced.out == "|0> + |1>\n");
}

TEST_CASE("dissipative gates go through the decomposition") {
  const fs::path xor_qds = dataset_path("xor.qds", kXorDataset);
  const fs::path xor_qpm = work_dir() / "xor.qpm";
  const RunResult train = run("train " + xor_qds.string() + " --scale --out " +
                              xor_qpm.string());
  CHECK(train.exit_code == 0);
  CHECK(contains(train.out, "mode: Decomposed"));
  CHECK(contains(train.out, "singular values: 0.70710678, 0.70710678"));

  const RunResult eval = run("eval " + xor_qpm.string() + " \"|10>\"");
  CHECK(eval.out == "|1>\n");
  const RunResult raw = run("eval " + xor_qpm.string() + " \"|01>\" --raw");
  CHECK(raw.out == "0.70710678*|1>\n");

  const RunResult verify = run("verify " + xor_qpm.string() + " " + xor_qds.string());
  CHECK(verify.exit_code == 0);
  CHECK(contains(verify.out, "4/4 PASS"));

  const fs::path cswap_qds = dataset_path("cswap.qds", kCswapDataset);
  const fs::path cswap_qpm = work_dir() / "cswap.qpm";
  REQUIRE(run("train " + cswap_qds.string() + " --out " + cswap_qpm.string())
              .exit_code == 0);
  const RunResult cswap_eval = run("eval " + cswap_qpm.string() + " \"|011>\"");
  CHECK(cswap_eval.out == "|11>\n");
  const RunResult cswap_verify =
      run("verify " + cswap_qpm.string() + " " + cswap_qds.string());
  CHECK(cswap_verify.exit_code == 0);
  CHECK(contains(cswap_verify.out, "8/8 PASS"));

  const RunResult decompose = run("decompose " + xor_qpm.string());
  CHECK(decompose.exit_code == 0);
  CHECK(contains(decompose.out, "0.70710678"));
  CHECK(contains(decompose.out, "w_new:"));
}

TEST_CASE("verify flags corrupted data with a nonzero exit") {
  const fs::path qds = dataset_path("cnot.qds",
                                    "|00> -> |00>\n|01> -> |01>\n"
                                    "|10> -> |11>\n|11> -> |10>\n");
  const fs::path qpm = work_dir() / "cnot.qpm";
  REQUIRE(run("train " + qds.string() + " --out " + qpm.string()).exit_code == 0);

  const fs::path corrupted = dataset_path("cnot_bad.qds",
                                          "|00> -> |00>\n|01> -> |01>\n"
                                          "|10> -> |11>\n|11> -> |11>\n");
  const RunResult verify = run("verify " + qpm.string() + " " + corrupted.string());
  CHECK(verify.exit_code == 1);
  CHECK(contains(verify.out, "FAIL"));
  CHECK(contains(verify.out, "3/4"));
}

TEST_CASE("input problems exit with code 2") {
  const fs::path bad = dataset_path("bad.qds", "|0> -> |1>\n|1> ->\n");
  const RunResult train = run("train " + bad.string());
  CHECK(train.exit_code == 2);
  CHECK(contains(train.err, "line 2"));

  const RunResult missing = run("info " + (work_dir() / "missing.qpm").string());
  CHECK(missing.exit_code == 2);

  const RunResult unknown = run("demo toffoli");
  CHECK(unknown.exit_code == 2);
  CHECK(contains(unknown.err, "not, hadamard, cnot, cswap, xor"));

  const fs::path qds = dataset_path("not2.qds", kNotDataset);
  const fs::path qpm = work_dir() / "not2.qpm";
  REQUIRE(run("train " + qds.string() + " --out " + qpm.string()).exit_code == 0);
  const RunResult mismatched = run("eval " + qpm.string() + " \"|00>\"");
  CHECK(mismatched.exit_code == 2);

  const RunResult garbage = run("eval " + qpm.string() + " \"|0> +\"");
  CHECK(garbage.exit_code == 2);

  const RunResult no_args = run("train");
  CHECK(no_args.exit_code == 2);
}

TEST_CASE("demo covers every builtin gate") {
  for (const char* gate : {"not", "hadamard", "cnot", "cswap", "xor"}) {
    CAPTURE(gate);
    const RunResult demo = run(std::string("demo ") + gate);
    CHECK(demo.exit_code == 0);
    CHECK(contains(demo.out, "PASS"));
  }
}

TEST_CASE("conflicting duplicate inputs warn but train") {
  const fs::path qds = dataset_path("conflict.qds", "|0> -> |0>\n|0> -> |1>\n");
  const RunResult train = run("train " + qds.string());
  CHECK(train.exit_code == 0);
  CHECK(contains(train.err, "warning"));
  CHECK(contains(train.err, "disagree"));
}
