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

// Command-line front end: encode, decode, analyze, simulate, bench, gen.
//
// Exit codes:
//   0 success
//   1 usage error
//   2 empty symbol occurs in the input (or no free byte for --empty auto)
//   3 I/O error
//   4 not an SSE container (magic, version or flags)
//   5 corrupt or truncated container
//   6 external compressor missing, failed or timed out

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sse/backend.hpp"
#include "sse/container.hpp"
#include "sse/corpus.hpp"
#include "sse/entropy.hpp"
#include "sse/error.hpp"
#include "sse/simulate.hpp"
#include "sse/transform.hpp"

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kSchemaVersion = 1;
constexpr std::uint64_t kDefaultMaxBytes = std::uint64_t{1} << 30;

int exit_code(sse::Errc code) {
  switch (code) {
    case sse::Errc::AlphabetViolation:
    case sse::Errc::AllBytesUsed:
    case sse::Errc::InvalidLine:
      return 2;
    case sse::Errc::IoError:
      return 3;
    case sse::Errc::BadMagic:
    case sse::Errc::BadVersion:
    case sse::Errc::BadFlags:
      return 4;
    case sse::Errc::CorruptStream:
    case sse::Errc::MalformedLine:
    case sse::Errc::TruncatedPayload:
      return 5;
    case sse::Errc::ToolNotFound:
    case sse::Errc::NonZeroExit:
    case sse::Errc::Timeout:
      return 6;
    case sse::Errc::EmptyText:
    case sse::Errc::EmptyInput:
    case sse::Errc::LengthMismatch:
    case sse::Errc::DomainError:
      return 1;
  }
  return 1;
}

struct TransformFlags {
  std::string empty = "0x20";
  std::string mode = "literal";
  bool ci_sort = false;
  bool crlf = false;
  std::uint64_t max_bytes = kDefaultMaxBytes;

  void add_to(CLI::App& cmd, bool with_mode = true) {
    cmd.add_option("--empty", empty, "Empty symbol: 'auto' or a byte such as 0x20")
        ->capture_default_str();
    if (with_mode) {
      cmd.add_option("--mode", mode, "Empty-run representation")
          ->check(CLI::IsMember({"literal", "counted"}))
          ->capture_default_str();
    }
    cmd.add_flag("--ci-sort", ci_sort, "Sort case-insensitively (stored bytes are unchanged)");
    cmd.add_flag("--crlf", crlf, "Strip one trailing CR from each input line");
    cmd.add_option("--max-bytes", max_bytes, "Refuse inputs larger than this")
        ->capture_default_str();
  }

  sse::SseConfig resolve(const sse::LineSet& lines) const {
    sse::SseConfig config;
    config.run_mode = mode == "counted" ? sse::RunMode::Counted : sse::RunMode::Literal;
    config.collation =
        ci_sort ? sse::Collation::CaseInsensitiveByteWise : sse::Collation::ByteWise;
    if (empty == "auto") {
      config.empty_symbol = sse::choose_empty_symbol(lines);
    } else {
      std::size_t used = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(empty, &used, 0);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != empty.size() || value > 0xFF) {
        throw sse::Error(sse::Errc::DomainError, "--empty expects 'auto' or a byte value");
      }
      config.empty_symbol = static_cast<std::uint8_t>(value);
    }
    return config;
  }
};

json config_json(const sse::SseConfig& config) {
  return {{"empty_symbol", config.empty_symbol},
          {"mode", config.run_mode == sse::RunMode::Counted ? "counted" : "literal"},
          {"collation", config.collation == sse::Collation::ByteWise ? "bytewise"
                                                                      : "case-insensitive"}};
}

std::string read_input(const std::string& path, std::uint64_t max_bytes) {
  std::string data;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    data = buffer.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sse::Error(sse::Errc::IoError, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw sse::Error(sse::Errc::IoError, "failed reading " + path);
    data = buffer.str();
  }
  if (data.size() > max_bytes) {
    throw sse::Error(sse::Errc::IoError, path + " exceeds --max-bytes (" +
                                             std::to_string(max_bytes) + ")");
  }
  return data;
}

void write_output(const std::string& path, std::string_view data) {
  if (path == "-") {
    std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
    std::cout.flush();
    if (!std::cout) throw sse::Error(sse::Errc::IoError, "failed writing standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw sse::Error(sse::Errc::IoError, "cannot create " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.close();
  if (!out) throw sse::Error(sse::Errc::IoError, "failed writing " + path);
}

class Report {
 public:
  explicit Report(std::string command) : start_(Clock::now()) {
    doc_["schema_version"] = kSchemaVersion;
    doc_["command"] = std::move(command);
    doc_["inputs"] = json::array();
  }

  void input(const std::string& path, std::size_t bytes) {
    doc_["inputs"].push_back({{"path", path}, {"bytes", bytes}});
  }
  json& config() { return doc_["config"]; }
  json& results() { return doc_["results"]; }

  // Goes to stderr when stdout carries data.
  void emit(bool stdout_busy = false) {
    doc_["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    (stdout_busy ? std::cerr : std::cout) << doc_.dump(2) << '\n';
  }

 private:
  Clock::time_point start_;
  json doc_;
};

int cmd_encode(const std::string& in_path, const std::string& out_path,
               const TransformFlags& flags) {
  Report report("encode");
  const std::string data = read_input(in_path, flags.max_bytes);
  report.input(in_path, data.size());
  const auto lines = sse::corpus::read_lines(std::string_view(data), flags.crlf);
  const auto config = flags.resolve(lines);
  const std::string container = sse::encode_container(lines, config);
  write_output(out_path, container);
  report.config() = config_json(config);
  report.results() = {{"lines", lines.size()},
                      {"container_bytes", container.size()},
                      {"payload_bytes", container.size() - sse::kHeaderSize},
                      {"output", out_path}};
  report.emit(out_path == "-");
  return 0;
}

int cmd_decode(const std::string& in_path, const std::string& out_path) {
  Report report("decode");
  const std::string data = read_input(in_path, kDefaultMaxBytes);
  report.input(in_path, data.size());
  const auto container = sse::deserialize(data);
  const auto lines = sse::sse_decode(container.records, container.header.config());
  const std::string text = sse::join_lines(lines);
  write_output(out_path, text);
  report.config() = config_json(container.header.config());
  report.results() = {{"lines", lines.size()}, {"bytes", text.size()}, {"output", out_path}};
  report.emit(out_path == "-");
  return 0;
}

int cmd_analyze(const std::string& source_path, const TransformFlags& flags) {
  Report report("analyze");
  const std::string data = read_input(source_path, flags.max_bytes);
  report.input(source_path, data.size());
  const auto lines = sse::corpus::read_lines(std::string_view(data), flags.crlf);
  auto config = flags.resolve(lines);
  // Set Empty analysis is defined on the length-preserving representation.
  config.run_mode = sse::RunMode::Literal;
  const auto records = sse::sse_encode(lines, config);
  const std::string source = sse::join_lines(sse::sort_lines(lines, config.collation));
  const std::string target =
      sse::serialize_payload(records, sse::ContainerHeader::from_config(config));
  report.config() = config_json(config);
  report.results() = sse::to_json(sse::sse_entropy_report(source, target, config.empty_symbol));
  report.emit();
  return 0;
}

struct SimulateFlags {
  std::string sizes = "2..52";
  sse::simulate::StudyConfig study;
  std::string out = "-";
  bool serial = false;
};

int cmd_simulate(SimulateFlags flags) {
  Report report("simulate");
  const auto dots = flags.sizes.find("..");
  if (dots == std::string::npos) {
    throw sse::Error(sse::Errc::DomainError, "--sizes expects a..b");
  }
  try {
    flags.study.min_alphabet = std::stoul(flags.sizes.substr(0, dots));
    flags.study.max_alphabet = std::stoul(flags.sizes.substr(dots + 2));
  } catch (const std::exception&) {
    throw sse::Error(sse::Errc::DomainError, "--sizes expects a..b");
  }
  const auto rows = flags.serial ? sse::simulate::serial::run_study(flags.study)
                                 : sse::simulate::run_study(flags.study);
  std::ostringstream csv;
  sse::simulate::write_csv(csv, flags.study, rows);
  write_output(flags.out, csv.str());
  report.config() = sse::simulate::to_json(flags.study);
  report.results() = {{"rows", rows.size()}, {"output", flags.out}};
  report.emit(flags.out == "-");
  return 0;
}

struct BenchFlags {
  std::string corpus_path;
  std::string gen;
  std::string codec = "builtin";
  double timeout_s = 300.0;
  TransformFlags transform;
};

int cmd_bench(const BenchFlags& flags) {
  Report report("bench");
  sse::LineSet lines;
  if (!flags.gen.empty()) {
    const auto spec = sse::corpus::parse_spec(flags.gen);
    lines = sse::corpus::generate(spec);
    report.config()["corpus"] = {{"family", sse::corpus::to_string(spec.family)},
                                 {"count", spec.count},
                                 {"seed", spec.seed}};
  } else if (!flags.corpus_path.empty()) {
    const std::string data = read_input(flags.corpus_path, flags.transform.max_bytes);
    report.input(flags.corpus_path, data.size());
    lines = sse::corpus::read_lines(std::string_view(data), flags.transform.crlf);
  } else {
    throw sse::Error(sse::Errc::DomainError, "bench needs a corpus path or --gen");
  }

  std::unique_ptr<sse::Codec> codec;
  if (flags.codec == "builtin") {
    codec = std::make_unique<sse::HuffmanCodec>();
  } else if (flags.codec.rfind("cmd:", 0) == 0) {
    codec = std::make_unique<sse::ExternalCodec>(
        flags.codec.substr(4),
        std::chrono::milliseconds(static_cast<std::int64_t>(flags.timeout_s * 1000.0)));
  } else {
    throw sse::Error(sse::Errc::DomainError, "--codec expects 'builtin' or 'cmd:<template>'");
  }
  const auto config = flags.transform.resolve(lines);
  report.config()["transform"] = config_json(config);
  report.config()["codec"] = codec->describe();
  report.results() = sse::to_json(sse::compare_corpus(lines, config, *codec));
  report.emit();
  return 0;
}

int cmd_gen(const std::string& spec_text, const std::string& out_path) {
  Report report("gen");
  const auto spec = sse::corpus::parse_spec(spec_text);
  const auto lines = sse::corpus::generate(spec);
  const std::string text = sse::join_lines(lines);
  write_output(out_path, text);
  report.config() = {{"family", sse::corpus::to_string(spec.family)},
                     {"count", spec.count},
                     {"seed", spec.seed}};
  report.results() = {{"lines", lines.size()}, {"bytes", text.size()}, {"output", out_path}};
  report.emit(out_path == "-");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sort and Set Empty transform for line-order-independent text"};
  app.require_subcommand(1);

  std::string in_path, out_path;
  TransformFlags encode_flags;
  auto* encode = app.add_subcommand("encode", "Sort, set empty and write an .sse container");
  encode->add_option("input", in_path, "Text file, '-' for stdin")->required();
  encode->add_option("output", out_path, "Container file, '-' for stdout")->required();
  encode_flags.add_to(*encode);

  auto* decode = app.add_subcommand("decode", "Restore the sorted lines from a container");
  decode->add_option("input", in_path, "Container file, '-' for stdin")->required();
  decode->add_option("output", out_path, "Text file, '-' for stdout")->required();

  TransformFlags analyze_flags;
  auto* analyze = app.add_subcommand("analyze", "Order-0 entropy before and after Set Empty");
  analyze->add_option("source", in_path, "Text file, '-' for stdin")->required();
  analyze_flags.add_to(*analyze);

  SimulateFlags sim;
  auto* simulate = app.add_subcommand("simulate", "Random-alphabet entropy study as CSV");
  simulate->add_option("--sizes", sim.sizes, "Alphabet sizes a..b")->capture_default_str();
  simulate->add_option("--trials", sim.study.trials_per_size)->capture_default_str();
  simulate->add_option("--lines", sim.study.lines_per_corpus)->capture_default_str();
  simulate->add_option("--min-len", sim.study.min_line_length)->capture_default_str();
  simulate->add_option("--max-len", sim.study.max_line_length)->capture_default_str();
  simulate->add_option("--seed", sim.study.seed)->capture_default_str();
  simulate->add_option("--out", sim.out, "CSV path, '-' for stdout")->capture_default_str();
  simulate->add_flag("--serial", sim.serial, "Use the single-threaded reference kernels");

  BenchFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "Source vs SSE compression ratios");
  bench->add_option("corpus", bench_flags.corpus_path, "Line file");
  bench->add_option("--gen", bench_flags.gen, "Synthetic corpus family:count:seed");
  bench->add_option("--codec", bench_flags.codec, "builtin or cmd:\"tool {in} {out}\"")
      ->capture_default_str();
  bench->add_option("--timeout", bench_flags.timeout_s, "External tool timeout in seconds")
      ->capture_default_str();
  bench_flags.transform.add_to(*bench);

  std::string gen_spec;
  std::string gen_out = "-";
  auto* gen = app.add_subcommand("gen", "Write a synthetic corpus");
  gen->add_option("spec", gen_spec, "family:count:seed (word, url, hex)")->required();
  gen->add_option("--out", gen_out, "Output path, '-' for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*encode) return cmd_encode(in_path, out_path, encode_flags);
    if (*decode) return cmd_decode(in_path, out_path);
    if (*analyze) return cmd_analyze(in_path, analyze_flags);
    if (*simulate) return cmd_simulate(sim);
    if (*bench) return cmd_bench(bench_flags);
    if (*gen) return cmd_gen(gen_spec, gen_out);
  } catch (const sse::Error& e) {
    std::cerr << "sse: " << sse::to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "sse: internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
