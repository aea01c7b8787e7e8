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

#ifndef SSE_BACKEND_HPP
#define SSE_BACKEND_HPP

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sse/entropy.hpp"
#include "sse/transform.hpp"

namespace sse {

struct CodecResult {
  std::size_t original_size = 0;
  std::size_t compressed_size = 0;
  double ratio = 0.0;  // compressed / original
};

CodecResult make_result(std::size_t original_size, std::size_t compressed_size);

namespace huffman {

inline constexpr unsigned kMaxCodeLength = 32;
inline constexpr std::size_t kTableSize = 256;
inline constexpr std::size_t kHeaderSize = kTableSize + 8;

using CodeLengths = std::array<std::uint8_t, 256>;

// Optimal prefix-code lengths for the histogram, capped at kMaxCodeLength.
// A lone symbol gets a 1-bit code.
CodeLengths code_lengths(const ByteHistogram& hist);

// Number of payload bits the lengths produce for the histogram.
std::uint64_t packed_bits(const CodeLengths& lengths, const ByteHistogram& hist) noexcept;

}  // namespace huffman

// Canonical order-0 Huffman: 256-byte code-length table, 8-byte little-endian
// original length, MSB-first packed codewords zero-padded to a byte.
// Throws Errc::EmptyInput.
std::string huffman_encode(std::string_view input);

// Throws Errc::CorruptStream on an invalid table or a short stream.
std::string huffman_decode(std::string_view coded);

class Codec {
 public:
  virtual ~Codec() = default;
  virtual CodecResult compress(std::string_view input) const = 0;
  // Identifies the exact settings, recorded in benchmark reports.
  virtual std::string describe() const = 0;
};

class HuffmanCodec final : public Codec {
 public:
  CodecResult compress(std::string_view input) const override;
  std::string describe() const override { return "builtin:huffman-order0"; }
};

inline constexpr std::chrono::seconds kDefaultToolTimeout{300};

// Runs `command_template` through /bin/sh with {in} and {out} replaced by
// temporary file paths and measures the size of {out}. Temporaries are removed
// on success and kept (paths in the error message) on failure.
// Throws ToolNotFound, NonZeroExit, Timeout or IoError.
CodecResult external_compress(std::string_view command_template, std::string_view input,
                              std::chrono::milliseconds timeout = kDefaultToolTimeout);

class ExternalCodec final : public Codec {
 public:
  explicit ExternalCodec(std::string command_template,
                         std::chrono::milliseconds timeout = kDefaultToolTimeout)
      : template_(std::move(command_template)), timeout_(timeout) {}

  CodecResult compress(std::string_view input) const override;
  std::string describe() const override { return "cmd:" + template_; }

 private:
  std::string template_;
  std::chrono::milliseconds timeout_;
};

struct PipelineResult {
  CodecResult source;
  CodecResult sse;
  double ratio_of_ratios = 0.0;  // sse.ratio / source.ratio
};

// Compresses the sorted source text and the SSE payload (header excluded)
// with the same codec.
PipelineResult measure_pipeline(const LineSet& input, const SseConfig& config, const Codec& codec);

// Entropy and codec columns for one corpus, source arm against SSE arm.
struct ComparisonRow {
  std::size_t lines = 0;
  double source_entropy_ratio = 0.0;
  double sse_entropy_ratio = 0.0;
  double entropy_ratio_of_ratios = 0.0;
  PipelineResult actual;
  std::string codec;
};

ComparisonRow compare_corpus(const LineSet& input, const SseConfig& config, const Codec& codec);

nlohmann::json to_json(const CodecResult& result);
nlohmann::json to_json(const ComparisonRow& row);

}  // namespace sse

#endif  // SSE_BACKEND_HPP
