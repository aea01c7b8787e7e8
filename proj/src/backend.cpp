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

#include "sse/backend.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include "sse/container.hpp"
#include "sse/error.hpp"

namespace sse {

CodecResult make_result(std::size_t original_size, std::size_t compressed_size) {
  CodecResult r;
  r.original_size = original_size;
  r.compressed_size = compressed_size;
  r.ratio = original_size == 0 ? 0.0
                               : static_cast<double>(compressed_size) /
                                     static_cast<double>(original_size);
  return r;
}

namespace huffman {

namespace {

// Code lengths of an optimal prefix code via the two-queue construction.
// Leaves are ordered by (weight, symbol) and leaves win ties, which makes the
// result deterministic.
CodeLengths build_lengths(const std::array<std::uint64_t, 256>& weights) {
  CodeLengths lengths{};
  std::vector<std::pair<std::uint64_t, unsigned>> leaves;
  for (unsigned b = 0; b < 256; ++b) {
    if (weights[b] != 0) leaves.emplace_back(weights[b], b);
  }
  if (leaves.empty()) return lengths;
  if (leaves.size() == 1) {
    lengths[leaves[0].second] = 1;
    return lengths;
  }
  std::sort(leaves.begin(), leaves.end());

  const std::size_t n = leaves.size();
  // Nodes 0..n-1 are leaves, n.. are internal.
  std::vector<std::uint64_t> weight(2 * n - 1);
  std::vector<std::size_t> parent(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) weight[i] = leaves[i].first;

  std::size_t next_leaf = 0;
  std::size_t next_internal = n;
  std::size_t created = n;
  auto pop = [&]() {
    if (next_leaf < n && (next_internal == created || weight[next_leaf] <= weight[next_internal])) {
      return next_leaf++;
    }
    return next_internal++;
  };
  while (created < 2 * n - 1) {
    const std::size_t a = pop();
    const std::size_t b = pop();
    weight[created] = weight[a] + weight[b];
    parent[a] = parent[b] = created;
    ++created;
  }
  // The root is the last node; depths follow parents in reverse creation order.
  std::vector<unsigned> depth(2 * n - 1, 0);
  for (std::size_t i = 2 * n - 1; i-- > 0;) {
    if (i != 2 * n - 2) depth[i] = depth[parent[i]] + 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    lengths[leaves[i].second] = static_cast<std::uint8_t>(std::min(depth[i], 255U));
  }
  return lengths;
}

struct Canonical {
  std::array<std::uint32_t, 256> codes{};
  // Symbols ordered by (length, value).
  std::vector<std::uint8_t> order;
};

Canonical assign_codes(const CodeLengths& lengths) {
  Canonical c;
  for (unsigned b = 0; b < 256; ++b) {
    if (lengths[b] != 0) c.order.push_back(static_cast<std::uint8_t>(b));
  }
  std::stable_sort(c.order.begin(), c.order.end(),
                   [&](std::uint8_t x, std::uint8_t y) { return lengths[x] < lengths[y]; });
  std::uint64_t code = 0;
  unsigned previous = 0;
  for (const auto sym : c.order) {
    code <<= (lengths[sym] - previous);
    previous = lengths[sym];
    c.codes[sym] = static_cast<std::uint32_t>(code);
    ++code;
  }
  return c;
}

class BitWriter {
 public:
  explicit BitWriter(std::string& out) : out_(out) {}

  void put(std::uint32_t code, unsigned length) {
    buffer_ = (buffer_ << length) | code;
    pending_ += length;
    while (pending_ >= 8) {
      pending_ -= 8;
      out_ += static_cast<char>((buffer_ >> pending_) & 0xFF);
    }
  }

  void flush() {
    if (pending_ > 0) out_ += static_cast<char>((buffer_ << (8 - pending_)) & 0xFF);
    pending_ = 0;
  }

 private:
  std::string& out_;
  std::uint64_t buffer_ = 0;
  unsigned pending_ = 0;
};

[[noreturn]] void corrupt(const std::string& what) { throw Error(Errc::CorruptStream, what); }

}  // namespace

CodeLengths code_lengths(const ByteHistogram& hist) {
  auto weights = hist.counts;
  auto lengths = build_lengths(weights);
  // Flatten the distribution until the tree fits the table's length limit.
  while (*std::max_element(lengths.begin(), lengths.end()) > kMaxCodeLength) {
    for (auto& w : weights) {
      if (w != 0) w = std::max<std::uint64_t>(1, w >> 1);
    }
    lengths = build_lengths(weights);
  }
  return lengths;
}

std::uint64_t packed_bits(const CodeLengths& lengths, const ByteHistogram& hist) noexcept {
  std::uint64_t bits = 0;
  for (unsigned b = 0; b < 256; ++b) bits += hist.counts[b] * lengths[b];
  return bits;
}

}  // namespace huffman

std::string huffman_encode(std::string_view input) {
  if (input.empty()) throw Error(Errc::EmptyInput, "cannot Huffman-code an empty input");
  const auto hist = histogram(input);
  const auto lengths = huffman::code_lengths(hist);
  const auto canonical = huffman::assign_codes(lengths);

  std::string out;
  out.reserve(huffman::kHeaderSize + huffman::packed_bits(lengths, hist) / 8 + 1);
  for (const auto len : lengths) out += static_cast<char>(len);
  std::uint64_t size = input.size();
  for (int i = 0; i < 8; ++i) out += static_cast<char>((size >> (8 * i)) & 0xFF);

  huffman::BitWriter writer(out);
  for (const char c : input) {
    const auto sym = static_cast<unsigned char>(c);
    writer.put(canonical.codes[sym], lengths[sym]);
  }
  writer.flush();
  return out;
}

std::string huffman_decode(std::string_view coded) {
  using huffman::corrupt;
  if (coded.size() < huffman::kHeaderSize) corrupt("Huffman stream shorter than its header");

  huffman::CodeLengths lengths{};
  std::array<std::uint32_t, huffman::kMaxCodeLength + 1> count{};
  std::uint64_t kraft = 0;  // in units of 2^-32
  for (unsigned b = 0; b < 256; ++b) {
    const auto len = static_cast<std::uint8_t>(coded[b]);
    if (len > huffman::kMaxCodeLength) corrupt("code length exceeds 32 bits");
    lengths[b] = len;
    if (len != 0) {
      ++count[len];
      kraft += std::uint64_t{1} << (huffman::kMaxCodeLength - len);
    }
  }
  if (kraft > (std::uint64_t{1} << huffman::kMaxCodeLength)) {
    corrupt("code lengths violate the Kraft inequality");
  }
  std::uint64_t size = 0;
  for (int i = 0; i < 8; ++i) {
    size |= std::uint64_t{static_cast<unsigned char>(coded[huffman::kTableSize + i])} << (8 * i);
  }
  const std::string_view payload = coded.substr(huffman::kHeaderSize);
  if (size == 0) {
    if (!payload.empty()) corrupt("trailing bytes after an empty stream");
    return {};
  }
  if (kraft == 0) corrupt("empty code table with a nonzero declared length");
  if (size > payload.size() * 8) corrupt("declared length exceeds the coded bits");

  const auto canonical = huffman::assign_codes(lengths);
  // first_code[len] / first_index[len] locate each length's block of codes.
  std::array<std::uint64_t, huffman::kMaxCodeLength + 2> first_code{};
  std::array<std::uint32_t, huffman::kMaxCodeLength + 2> first_index{};
  std::uint64_t code = 0;
  std::uint32_t index = 0;
  for (unsigned len = 1; len <= huffman::kMaxCodeLength; ++len) {
    code <<= 1;
    first_code[len] = code;
    first_index[len] = index;
    code += count[len];
    index += count[len];
  }

  std::string out;
  out.reserve(size);
  std::size_t bit = 0;
  const std::size_t total_bits = payload.size() * 8;
  while (out.size() < size) {
    std::uint64_t value = 0;
    unsigned len = 0;
    while (true) {
      if (bit >= total_bits) corrupt("Huffman stream ends inside a codeword");
      const auto byte = static_cast<unsigned char>(payload[bit >> 3]);
      value = (value << 1) | ((byte >> (7 - (bit & 7))) & 1U);
      ++bit;
      ++len;
      if (len > huffman::kMaxCodeLength) corrupt("invalid codeword");
      if (value - first_code[len] < count[len]) {
        out += static_cast<char>(canonical.order[first_index[len] + (value - first_code[len])]);
        break;
      }
    }
  }
  if ((bit + 7) / 8 != payload.size()) corrupt("trailing bytes after the last codeword");
  return out;
}

CodecResult HuffmanCodec::compress(std::string_view input) const {
  if (input.empty()) return make_result(0, 0);
  return make_result(input.size(), huffman_encode(input).size());
}

namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (const char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

std::string substitute(std::string_view tmpl, const std::string& in, const std::string& out) {
  std::string cmd;
  for (std::size_t i = 0; i < tmpl.size();) {
    if (tmpl.substr(i, 4) == "{in}") {
      cmd += shell_quote(in);
      i += 4;
    } else if (tmpl.substr(i, 5) == "{out}") {
      cmd += shell_quote(out);
      i += 5;
    } else {
      cmd += tmpl[i++];
    }
  }
  return cmd;
}

std::string read_small_file(const std::filesystem::path& path, std::size_t limit = 4096) {
  std::ifstream f(path, std::ios::binary);
  std::string s(limit, '\0');
  f.read(s.data(), static_cast<std::streamsize>(limit));
  s.resize(static_cast<std::size_t>(f.gcount()));
  return s;
}

struct TempFiles {
  std::filesystem::path input;
  std::filesystem::path output;
  std::filesystem::path diagnostics;
  bool keep = false;

  ~TempFiles() {
    if (keep) return;
    std::error_code ec;
    std::filesystem::remove(input, ec);
    std::filesystem::remove(output, ec);
    std::filesystem::remove(diagnostics, ec);
  }

  std::string describe() const {
    return " (kept: " + input.string() + ", " + output.string() + ", " + diagnostics.string() +
           ")";
  }
};

}  // namespace

CodecResult external_compress(std::string_view command_template, std::string_view input,
                              std::chrono::milliseconds timeout) {
  std::string pattern = (std::filesystem::temp_directory_path() / "sse-XXXXXX").string();
  const int fd = ::mkstemp(pattern.data());
  if (fd < 0) throw Error(Errc::IoError, std::string("mkstemp: ") + std::strerror(errno));

  TempFiles tmp;
  tmp.input = pattern;
  tmp.output = pattern + ".out";
  tmp.diagnostics = pattern + ".err";
  {
    std::size_t written = 0;
    while (written < input.size()) {
      const ssize_t n = ::write(fd, input.data() + written, input.size() - written);
      if (n < 0) {
        ::close(fd);
        throw Error(Errc::IoError, std::string("write: ") + std::strerror(errno));
      }
      written += static_cast<std::size_t>(n);
    }
    ::close(fd);
  }

  const std::string cmd = substitute(command_template, tmp.input.string(), tmp.output.string());
  const pid_t pid = ::fork();
  if (pid < 0) throw Error(Errc::IoError, std::string("fork: ") + std::strerror(errno));
  if (pid == 0) {
    ::setpgid(0, 0);
    const int devnull = ::open("/dev/null", O_RDONLY);
    const int diag = ::open(tmp.diagnostics.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
    if (devnull >= 0) ::dup2(devnull, STDIN_FILENO);
    if (diag >= 0) {
      ::dup2(diag, STDOUT_FILENO);
      ::dup2(diag, STDERR_FILENO);
    }
    ::execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }

  const auto deadline = std::chrono::steady_clock::now() + timeout;
  int status = 0;
  while (true) {
    const pid_t done = ::waitpid(pid, &status, WNOHANG);
    if (done == pid) break;
    if (done < 0 && errno != EINTR) {
      tmp.keep = true;
      throw Error(Errc::IoError, std::string("waitpid: ") + std::strerror(errno));
    }
    if (std::chrono::steady_clock::now() >= deadline) {
      ::kill(-pid, SIGKILL);
      ::kill(pid, SIGKILL);
      ::waitpid(pid, &status, 0);
      tmp.keep = true;
      throw Error(Errc::Timeout, "command timed out: " + cmd + tmp.describe());
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }

  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    tmp.keep = true;
    const std::string diag = read_small_file(tmp.diagnostics);
    if (WIFEXITED(status) && WEXITSTATUS(status) == 127) {
      throw Error(Errc::ToolNotFound, "command not found: " + cmd + "\n" + diag + tmp.describe());
    }
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
    throw Error(Errc::NonZeroExit, "command exited with status " + std::to_string(code) + ": " +
                                       cmd + "\n" + diag + tmp.describe());
  }

  std::error_code ec;
  const auto size = std::filesystem::file_size(tmp.output, ec);
  if (ec) {
    tmp.keep = true;
    throw Error(Errc::IoError, "command produced no output file: " + cmd + tmp.describe());
  }
  return make_result(input.size(), static_cast<std::size_t>(size));
}

CodecResult ExternalCodec::compress(std::string_view input) const {
  return external_compress(template_, input, timeout_);
}

PipelineResult measure_pipeline(const LineSet& input, const SseConfig& config, const Codec& codec) {
  const auto sorted = sort_lines(input, config.collation);
  const auto records = sse_encode(sorted, config);
  const std::string source = join_lines(sorted);
  const std::string payload = serialize_payload(records, ContainerHeader::from_config(config));

  PipelineResult r;
  r.source = codec.compress(source);
  r.sse = codec.compress(payload);
  r.ratio_of_ratios = r.source.ratio == 0.0 ? 0.0 : r.sse.ratio / r.source.ratio;
  return r;
}

ComparisonRow compare_corpus(const LineSet& input, const SseConfig& config, const Codec& codec) {
  if (input.empty()) throw Error(Errc::EmptyText, "cannot benchmark an empty corpus");
  ComparisonRow row;
  row.lines = input.size();
  row.codec = codec.describe();
  const auto sorted = sort_lines(input, config.collation);
  const auto records = sse_encode(sorted, config);
  const std::string payload = serialize_payload(records, ContainerHeader::from_config(config));
  row.source_entropy_ratio = compression_ratio(shannon_entropy(histogram(join_lines(sorted))));
  row.sse_entropy_ratio = compression_ratio(shannon_entropy(histogram(payload)));
  row.entropy_ratio_of_ratios =
      row.source_entropy_ratio == 0.0 ? 0.0 : row.sse_entropy_ratio / row.source_entropy_ratio;
  row.actual = measure_pipeline(sorted, config, codec);
  return row;
}

nlohmann::json to_json(const CodecResult& r) {
  return {{"original_size", r.original_size},
          {"compressed_size", r.compressed_size},
          {"ratio", r.ratio}};
}

nlohmann::json to_json(const ComparisonRow& row) {
  return {
      {"lines", row.lines},
      {"codec", row.codec},
      {"source", {{"entropy_ratio", row.source_entropy_ratio}, {"actual", to_json(row.actual.source)}}},
      {"sse", {{"entropy_ratio", row.sse_entropy_ratio}, {"actual", to_json(row.actual.sse)}}},
      {"ratio_of_ratios",
       {{"entropy", row.entropy_ratio_of_ratios}, {"actual", row.actual.ratio_of_ratios}}},
  };
}

}  // namespace sse
