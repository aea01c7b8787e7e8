// Copyright 2026 The SSE Toolkit Authors
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

// Drives the sse binary end to end through temporary files.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "generators.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SSE_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class TempDir {
 public:
  TempDir() {
    std::string pattern = (fs::temp_directory_path() / "sse-cli-XXXXXX").string();
    REQUIRE(::mkdtemp(pattern.data()) != nullptr);
    path_ = pattern;
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void write(const std::string& path, const std::string& data) {
  std::ofstream(path, std::ios::binary) << data;
}

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("encode writes the hand-traced payload and decode restores sorted lines") {
  TempDir dir;
  write(dir.file("w.txt"), "dog\ncar\ncat\ncard\n");
  const auto enc = run("encode " + dir.file("w.txt") + " " + dir.file("w.sse"));
  REQUIRE(enc.code == 0);
  const auto report = nlohmann::json::parse(enc.out);
  CHECK(report["schema_version"] == 1);
  CHECK(report["command"] == "encode");
  CHECK(report.contains("elapsed_ms"));
  CHECK(read(dir.file("w.sse")) == std::string("SSE1\x01\x00\x20", 7) + "car\n   d\n  t\ndog\n");

  REQUIRE(run("decode " + dir.file("w.sse") + " " + dir.file("w.out")).code == 0);
  CHECK(read(dir.file("w.out")) == "car\ncard\ncat\ndog\n");
}

TEST_CASE("stdin and stdout streaming") {
  TempDir dir;
  write(dir.file("w.txt"), "b\na\n");
  const auto enc = run("encode --mode counted - - < " + dir.file("w.txt"));
  CHECK(enc.code == 0);
  CHECK(enc.out == std::string("SSE1\x01\x01\x20", 7) + "0 a\n0 b\n");
  write(dir.file("w.sse"), enc.out);
  const auto dec = run("decode - - < " + dir.file("w.sse"));
  CHECK(dec.code == 0);
  CHECK(dec.out == "a\nb\n");
}

TEST_CASE("exit codes") {
  TempDir dir;
  write(dir.file("space.txt"), "hello world\n");
  CHECK(run("encode " + dir.file("space.txt") + " " + dir.file("x.sse")).code == 2);
  CHECK(run("encode --empty auto " + dir.file("space.txt") + " " + dir.file("x.sse")).code == 0);
  CHECK(run("encode " + dir.file("missing.txt") + " " + dir.file("x.sse")).code == 3);
  CHECK(run("encode --max-bytes 4 " + dir.file("space.txt") + " " + dir.file("x.sse")).code == 3);

  write(dir.file("bad.sse"), std::string("XXE1\x01\x00\x20", 7) + "a\n");
  CHECK(run("decode " + dir.file("bad.sse") + " " + dir.file("o.txt")).code == 4);
  write(dir.file("trunc.sse"), std::string("SSE1\x01\x00\x20", 7) + "car\n   d");
  CHECK(run("decode " + dir.file("trunc.sse") + " " + dir.file("o.txt")).code == 5);
  write(dir.file("corrupt.sse"), std::string("SSE1\x01\x00\x20", 7) + "  x\n");
  CHECK(run("decode " + dir.file("corrupt.sse") + " " + dir.file("o.txt")).code == 5);

  CHECK(run("bench --gen word:100:1 --codec 'cmd:nonexistent-tool-xyz {in} {out}'").code == 6);
  CHECK(run("bogus").code == 1);
}

TEST_CASE("property: encode then decode is the identity on sorted files") {
  TempDir dir;
  gen::Rng rng(404);
  for (int iter = 0; iter < 25; ++iter) {
    auto lines = gen::line_set(rng, ' ', 30);
    std::sort(lines.begin(), lines.end());
    std::string text;
    for (const auto& l : lines) text += l + "\n";
    write(dir.file("in.txt"), text);
    const std::string mode = iter % 2 ? "counted" : "literal";
    REQUIRE(run("encode --mode " + mode + " " + dir.file("in.txt") + " " + dir.file("c.sse")).code == 0);
    REQUIRE(run("decode " + dir.file("c.sse") + " " + dir.file("out.txt")).code == 0);
    CHECK(read(dir.file("out.txt")) == text);
  }
}

TEST_CASE("analyze reports entropies and formula checks") {
  TempDir dir;
  REQUIRE(run("gen word:3000:5 --out " + dir.file("words.txt")).code == 0);
  const auto r = run("analyze " + dir.file("words.txt"));
  REQUIRE(r.code == 0);
  const auto res = nlohmann::json::parse(r.out)["results"];
  CHECK(res["target_ratio"].get<double>() < res["source_ratio"].get<double>());
  CHECK(res["formula_checks"]["all"] == true);

  write(dir.file("flat.txt"), "ab\ncd\nef\n");
  const auto flat = nlohmann::json::parse(run("analyze " + dir.file("flat.txt")).out)["results"];
  CHECK(flat["target_ratio"] == flat["source_ratio"]);
  CHECK(flat["empty_count"] == 0);
}

TEST_CASE("simulate writes reproducible csv") {
  TempDir dir;
  const std::string args = "simulate --sizes 2..6 --trials 3 --lines 200 --seed 9 --out ";
  REQUIRE(run(args + dir.file("a.csv")).code == 0);
  REQUIRE(run(args + dir.file("b.csv")).code == 0);
  REQUIRE(run(args + dir.file("c.csv") + " --serial").code == 0);
  const auto a = read(dir.file("a.csv"));
  CHECK(a == read(dir.file("b.csv")));
  CHECK(a == read(dir.file("c.csv")));
  CHECK(std::count(a.begin(), a.end(), '\n') == 2 + 5);
}

TEST_CASE("bench emits table columns") {
  const auto r = run("bench --gen url:2000:42 --codec builtin");
  REQUIRE(r.code == 0);
  const auto res = nlohmann::json::parse(r.out)["results"];
  CHECK(res["sse"]["entropy_ratio"].get<double>() < res["source"]["entropy_ratio"].get<double>());
  CHECK(res.contains("ratio_of_ratios"));
  CHECK(res["codec"] == "builtin:huffman-order0");
}
