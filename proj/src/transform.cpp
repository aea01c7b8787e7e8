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

#include "sse/transform.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "sse/error.hpp"
#include "sse/parallel.hpp"

namespace sse {

namespace {

unsigned char fold_case(unsigned char c) noexcept {
  return (c >= 'A' && c <= 'Z') ? static_cast<unsigned char>(c + ('a' - 'A')) : c;
}

// Case-folded key first, raw bytes as tie-break, so the order is total and
// the output deterministic.
bool case_insensitive_less(const std::string& a, const std::string& b) noexcept {
  const bool folded_less = std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
        return fold_case(static_cast<unsigned char>(x)) < fold_case(static_cast<unsigned char>(y));
      });
  if (folded_less) return true;
  const bool folded_greater = std::lexicographical_compare(
      b.begin(), b.end(), a.begin(), a.end(), [](char x, char y) {
        return fold_case(static_cast<unsigned char>(x)) < fold_case(static_cast<unsigned char>(y));
      });
  if (folded_greater) return false;
  return std::string_view(a) < std::string_view(b);
}

std::string byte_name(std::uint8_t b) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "0x%02X", b);
  return buf;
}

void check_lines(const LineSet& input, const SseConfig& config) {
  if (config.empty_symbol == kLineFeed || config.empty_symbol == kCarriageReturn) {
    throw Error(Errc::DomainError,
                "empty symbol " + byte_name(config.empty_symbol) + " collides with line framing");
  }
  if (config.run_mode == RunMode::Counted && config.empty_symbol >= '0' &&
      config.empty_symbol <= '9') {
    throw Error(Errc::DomainError, "a digit cannot delimit counted runs");
  }
  for (std::size_t k = 0; k < input.size(); ++k) {
    if (input[k].find(static_cast<char>(kLineFeed)) != std::string::npos) {
      throw Error(Errc::InvalidLine, "line " + std::to_string(k) + " contains a line feed");
    }
  }
  if (const auto violation = validate_alphabet(input, config.empty_symbol)) {
    throw Error(Errc::AlphabetViolation,
                "empty symbol " + byte_name(config.empty_symbol) + " occurs in line " +
                    std::to_string(violation->line) + " at offset " +
                    std::to_string(violation->offset) + "; try --empty auto");
  }
}

TransformedLine elide(const std::string& previous, const std::string& current) {
  const std::size_t shared = common_prefix_len(previous, current);
  return TransformedLine{shared, current.substr(shared)};
}

}  // namespace

LineSet sort_lines(LineSet input, Collation collation) {
  if (collation == Collation::CaseInsensitiveByteWise) {
    std::sort(input.begin(), input.end(), case_insensitive_less);
  } else {
    // std::string compares as unsigned char through char_traits<char>.
    std::sort(input.begin(), input.end());
  }
  return input;
}

std::size_t common_prefix_len(std::string_view a, std::string_view b) noexcept {
  const std::size_t limit = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < limit && a[i] == b[i]) ++i;
  return i;
}

std::optional<AlphabetViolation> validate_alphabet(const LineSet& input,
                                                   std::uint8_t empty_symbol) {
  for (std::size_t k = 0; k < input.size(); ++k) {
    const auto pos = input[k].find(static_cast<char>(empty_symbol));
    if (pos != std::string::npos) return AlphabetViolation{k, pos};
  }
  return std::nullopt;
}

std::uint8_t choose_empty_symbol(const LineSet& input) {
  std::array<bool, 256> used{};
  for (const auto& line : input) {
    for (const char c : line) used[static_cast<unsigned char>(c)] = true;
  }
  for (unsigned b = 0; b < 256; ++b) {
    if (b == kLineFeed || b == kCarriageReturn) continue;
    if (!used[b]) return static_cast<std::uint8_t>(b);
  }
  throw Error(Errc::AllBytesUsed, "every eligible byte value occurs in the input");
}

std::vector<TransformedLine> set_empty(const LineSet& sorted) {
  std::vector<TransformedLine> out(sorted.size());
  const auto n = static_cast<std::ptrdiff_t>(sorted.size());
  if (n == 0) return out;
  out[0] = TransformedLine{0, sorted[0]};
#pragma omp parallel for schedule(static) if (n > 4096)
  for (std::ptrdiff_t k = 1; k < n; ++k) {
    out[k] = elide(sorted[k - 1], sorted[k]);
  }
  return out;
}

namespace serial {

std::vector<TransformedLine> set_empty(const LineSet& sorted) {
  std::vector<TransformedLine> out;
  out.reserve(sorted.size());
  const std::string* previous = nullptr;
  for (const auto& line : sorted) {
    out.push_back(previous ? elide(*previous, line) : TransformedLine{0, line});
    previous = &line;
  }
  return out;
}

}  // namespace serial

std::vector<TransformedLine> sse_encode(const LineSet& input, const SseConfig& config) {
  check_lines(input, config);
  return set_empty(sort_lines(input, config.collation));
}

LineSet sse_decode(const std::vector<TransformedLine>& records, const SseConfig& config) {
  LineSet out;
  out.reserve(records.size());
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& rec = records[k];
    const std::size_t available = k == 0 ? 0 : out.back().size();
    if (rec.elided > available) {
      throw Error(Errc::CorruptStream, "record " + std::to_string(k) + " elides " +
                                           std::to_string(rec.elided) + " bytes but only " +
                                           std::to_string(available) + " are available");
    }
    if (rec.suffix.find(static_cast<char>(kLineFeed)) != std::string::npos ||
        rec.suffix.find(static_cast<char>(config.empty_symbol)) != std::string::npos) {
      throw Error(Errc::CorruptStream,
                  "record " + std::to_string(k) + " carries a framing or empty-symbol byte");
    }
    std::string line;
    line.reserve(rec.elided + rec.suffix.size());
    if (k > 0) line.append(out.back(), 0, rec.elided);
    line += rec.suffix;
    out.push_back(std::move(line));
  }
  return out;
}

std::string join_lines(const LineSet& lines) {
  std::size_t size = 0;
  for (const auto& line : lines) size += line.size() + 1;
  std::string text;
  text.reserve(size);
  for (const auto& line : lines) {
    text += line;
    text += static_cast<char>(kLineFeed);
  }
  return text;
}

}  // namespace sse
