// Copyright 2026 The relbound authors.
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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef RELBOUND_CLI_PATH
#error "RELBOUND_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(RELBOUND_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_file(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/relbound_cli_") + name;
  std::ofstream f(path);
  REQUIRE(f.good());
  f << content;
  return path;
}

const char kTw3[] = R"({
  "input": 3, "output": 3,
  "rows": [["3/4", "1/4", 0], [0, "3/4", "1/4"], ["1/4", 0, "3/4"]]
})";

const char kTw5[] = R"({
  "input": 5, "output": 5,
  "rows": [["1/2", "1/2", 0, 0, 0],
           [0, "1/2", "1/2", 0, 0],
           [0, 0, "1/2", "1/2", 0],
           [0, 0, 0, "1/2", "1/2"],
           ["1/2", 0, 0, 0, "1/2"]]
})";

const char kId2[] = R"({
  "input": 2, "output": 2,
  "rows": [[1, 0], [0, 1]]
})";

const char kBsc[] = R"({
  "input": 2, "output": 2,
  "rows": [["9/10", "1/10"], ["1/10", "9/10"]]
})";

TEST_CASE("info reports exact and numeric quantities") {
  std::string ch = write_file("tw3.json", kTw3);
  RunResult r = run("info --channel " + ch);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("2/3") != std::string::npos);
  CHECK(r.output.find("psi_inf") != std::string::npos);
  CHECK(r.output.find("0.584962500721") != std::string::npos);
  CHECK(r.output.find("capacity") != std::string::npos);

  RunResult js = run("info --channel " + ch + " --format json");
  CHECK(js.exit_code == 0);
  CHECK(js.output.find("\"r_inf\"") != std::string::npos);
  CHECK(js.output.find("\"psi_inf\": \"2/3\"") != std::string::npos);

  RunResult csv = run("info --channel " + ch + " --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("psi_inf,2/3") != std::string::npos);
}

TEST_CASE("info exit codes follow the parse/validation contract") {
  RunResult missing = run("info --channel /tmp/relbound_does_not_exist.json");
  CHECK(missing.exit_code == 2);

  std::string bad = write_file("bad.json", "{ nope");
  CHECK(run("info --channel " + bad).exit_code == 2);

  std::string short_row = write_file("short.json", R"({
    "input": 1, "output": 2, "rows": [["1/2", "1/3"]]
  })");
  RunResult rr = run("info --channel " + short_row);
  CHECK(rr.exit_code == 3);
  CHECK(rr.output.find("row 0") != std::string::npos);

  CHECK(run("nonsense-subcommand").exit_code != 0);
}

TEST_CASE("sweep writes the requested CSV grid") {
  std::string ch = write_file("bsc.json", kBsc);
  RunResult r = run("sweep --channel " + ch +
                    " --rmin 0.2 --rmax 0.4 --step 0.1 --jobs 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("R,E_sp,E_r", 0) == 0);
  int lines = 0;
  for (char c : r.output) lines += c == '\n';
  CHECK(lines == 4);  // header + three rates

  std::string tw5 = write_file("tw5.json", kTw5);
  RunResult inf = run("sweep --channel " + tw5 +
                      " --rmin 1.0 --rmax 1.2 --step 0.1 --bounds sp");
  CHECK(inf.exit_code == 0);
  CHECK(inf.output.find("inf") != std::string::npos);

  RunResult ex = run("sweep --channel " + tw5 +
                     " --rmin 1.0 --rmax 1.1 --step 0.1 --bounds ex --k 2");
  CHECK(ex.exit_code == 0);
  CHECK(ex.output.rfind("R,E_ex_2", 0) == 0);
  CHECK(ex.output.find("inf") != std::string::npos);

  RunResult badstep = run("sweep --channel " + ch +
                          " --rmin 0.2 --rmax 0.1 --step 0.1");
  CHECK(badstep.exit_code == 3);

  RunResult badbound = run("sweep --channel " + ch +
                           " --rmin 0.1 --rmax 0.2 --step 0.1 --bounds zz");
  CHECK(badbound.exit_code == 3);
}

TEST_CASE("product reports additivity and super-additivity") {
  std::string a = write_file("id2.json", kId2);
  std::string b = write_file("tw3b.json", kTw3);
  RunResult r = run("product --channel-a " + a + " --channel-b " + b);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("R_inf additivity") != std::string::npos);
  CHECK(r.output.find("super-additive") != std::string::npos);

  RunResult same = run("product --channel-a " + b + " --channel-b " + b);
  CHECK(same.exit_code == 0);
  CHECK(same.output.find("additive on this pair") != std::string::npos);
}

TEST_CASE("product respects the size cap with exit code 4") {
  std::string big;
  big += R"({"input": 65, "output": 65, "rows": [)";
  for (int i = 0; i < 65; ++i) {
    big += i ? ",[" : "[";
    for (int j = 0; j < 65; ++j) {
      big += j ? ",\"1/65\"" : "\"1/65\"";
    }
    big += "]";
  }
  big += "]}";
  std::string path = write_file("big.json", big);
  RunResult r = run("product --channel-a " + path + " --channel-b " + path);
  CHECK(r.exit_code == 4);
}

TEST_CASE("approx emits the trace CSV") {
  std::string ch = write_file("tw3c.json", kTw3);
  RunResult r = run("approx --channel " + ch + " --quantity r_inf --n-max 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("N,value,error_bound,target", 0) == 0);
  int lines = 0;
  for (char c : r.output) lines += c == '\n';
  CHECK(lines == 7);

  RunResult fb = run("approx --channel " + ch + " --quantity c0_fb --n-max 3");
  CHECK(fb.exit_code == 0);
  CHECK(fb.output.find(",,") != std::string::npos);
}

TEST_CASE("semidecide exit codes distinguish accepted from undetermined") {
  std::string ch = write_file("tw3d.json", kTw3);
  RunResult yes = run("semidecide --channel " + ch +
                      " --quantity r_inf --lambda 0.7 --budget 100");
  CHECK(yes.exit_code == 0);
  CHECK(yes.output.find("accepted") != std::string::npos);

  RunResult no = run("semidecide --channel " + ch +
                     " --quantity r_inf --lambda 0.5 --budget 50");
  CHECK(no.exit_code == 10);
  CHECK(no.output.find("undetermined") != std::string::npos);

  RunResult bad = run("semidecide --channel " + ch +
                      " --quantity r_inf --lambda -1 --budget 50");
  CHECK(bad.exit_code == 3);
}

TEST_CASE("outputs can be redirected to files") {
  std::string ch = write_file("tw3e.json", kTw3);
  std::string out = "/tmp/relbound_cli_sweep_out.csv";
  std::remove(out.c_str());
  RunResult r = run("sweep --channel " + ch +
                    " --rmin 0.6 --rmax 0.7 --step 0.1 --bounds r --out " +
                    out);
  CHECK(r.exit_code == 0);
  std::ifstream f(out);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  CHECK(header == "R,E_r");
}

}  // namespace
