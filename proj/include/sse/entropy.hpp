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

#ifndef SSE_ENTROPY_HPP
#define SSE_ENTROPY_HPP

#include <array>
#include <cstdint>
#include <string_view>

#include <nlohmann/json.hpp>

namespace sse {

// Occurrences of every byte value; the line separator counts like any other.
struct ByteHistogram {
  std::array<std::uint64_t, 256> counts{};
  std::uint64_t total = 0;

  std::size_t distinct() const noexcept;
  ByteHistogram& operator+=(const ByteHistogram& other) noexcept;

  friend bool operator==(const ByteHistogram&, const ByteHistogram&) = default;
};

// Chunked across threads and merged by integer addition.
ByteHistogram histogram(std::string_view text);

// Order-0 Shannon entropy in bits per byte. Throws Errc::EmptyText.
double shannon_entropy(const ByteHistogram& hist);

// Theoretical compression ratio of an order-0 coder: H / 8.
constexpr double compression_ratio(double bits_per_byte) noexcept { return bits_per_byte / 8.0; }

// The four count/probability relations between a text and its literal-mode
// SSE image, evaluated in integer arithmetic:
//   counts_bounded       q'_i <= q_i for every byte other than the empty symbol
//   empty_count_balance  q0 == sum (q_i - q'_i)
//   probabilities_bounded 0 <= p'_i <= p_i <= 1
//   empty_probability    0 <= p0 <= 1 and p0 == sum (p_i - p'_i)
struct FormulaChecks {
  bool counts_bounded = false;
  bool empty_count_balance = false;
  bool probabilities_bounded = false;
  bool empty_probability = false;

  bool all() const noexcept {
    return counts_bounded && empty_count_balance && probabilities_bounded && empty_probability;
  }
};

struct EntropyReport {
  ByteHistogram source_hist;
  ByteHistogram target_hist;
  std::uint8_t empty_symbol = 0x20;
  double source_entropy = 0.0;
  double target_entropy = 0.0;
  double source_ratio = 0.0;
  double target_ratio = 0.0;
  std::uint64_t empty_count = 0;
  FormulaChecks formula_checks;

  // False when any formula check failed: the pair is not a literal-mode
  // encode of the source.
  bool consistent() const noexcept { return formula_checks.all(); }
};

// Throws Errc::LengthMismatch when the texts differ in length and
// Errc::EmptyText when they are empty.
EntropyReport sse_entropy_report(std::string_view source_text,
                                 std::string_view transformed_text,
                                 std::uint8_t empty_symbol);

nlohmann::json to_json(const ByteHistogram& hist);
nlohmann::json to_json(const EntropyReport& report);

namespace serial {

ByteHistogram histogram(std::string_view text);

}  // namespace serial

}  // namespace sse

#endif  // SSE_ENTROPY_HPP
