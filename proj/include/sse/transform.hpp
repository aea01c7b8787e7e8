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

#ifndef SSE_TRANSFORM_HPP
#define SSE_TRANSFORM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sse {

// Lines never contain the separator byte; duplicates and empty lines are legal.
using LineSet = std::vector<std::string>;

inline constexpr std::uint8_t kLineFeed = 0x0A;
inline constexpr std::uint8_t kCarriageReturn = 0x0D;
inline constexpr std::uint8_t kDefaultEmptySymbol = 0x20;

enum class RunMode : std::uint8_t { Literal = 0, Counted = 1 };
enum class Collation : std::uint8_t { ByteWise = 0, CaseInsensitiveByteWise = 1 };

struct SseConfig {
  std::uint8_t empty_symbol = kDefaultEmptySymbol;
  RunMode run_mode = RunMode::Literal;
  Collation collation = Collation::ByteWise;

  friend bool operator==(const SseConfig&, const SseConfig&) = default;
};

// One line after Set Empty: `elided` prefix bytes are shared with the previous
// sorted line, `suffix` holds the rest.
struct TransformedLine {
  std::size_t elided = 0;
  std::string suffix;

  friend bool operator==(const TransformedLine&, const TransformedLine&) = default;
};

struct AlphabetViolation {
  std::size_t line = 0;
  std::size_t offset = 0;

  friend bool operator==(const AlphabetViolation&, const AlphabetViolation&) = default;
};

LineSet sort_lines(LineSet input, Collation collation = Collation::ByteWise);

std::size_t common_prefix_len(std::string_view a, std::string_view b) noexcept;

// Returns the first occurrence of `empty_symbol`, or nullopt when the text is
// free of it.
std::optional<AlphabetViolation> validate_alphabet(const LineSet& input,
                                                   std::uint8_t empty_symbol);

// Smallest byte outside {LF, CR} absent from every line. Throws
// Errc::AllBytesUsed.
std::uint8_t choose_empty_symbol(const LineSet& input);

// Throws Errc::AlphabetViolation when the empty symbol occurs in the input,
// Errc::InvalidLine when a line carries LF, Errc::DomainError when the empty
// symbol is LF or CR.
std::vector<TransformedLine> sse_encode(const LineSet& input, const SseConfig& config);

// Front-codes lines that are already in sorted order. The elision of each
// line depends only on its predecessor, so this runs in parallel.
std::vector<TransformedLine> set_empty(const LineSet& sorted);

// Throws Errc::CorruptStream when a record elides more than its predecessor
// holds or the first record elides anything.
LineSet sse_decode(const std::vector<TransformedLine>& records, const SseConfig& config);

// Lines joined with one LF after each, the byte layout the analyses work on.
std::string join_lines(const LineSet& lines);

namespace serial {

// Single-threaded reference for set_empty.
std::vector<TransformedLine> set_empty(const LineSet& sorted);

}  // namespace serial

}  // namespace sse

#endif  // SSE_TRANSFORM_HPP
