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

#include "sse/entropy.hpp"

#include <cmath>
#include <vector>

#include "sse/error.hpp"
#include "sse/parallel.hpp"

namespace sse {

namespace {

constexpr std::size_t kChunkSize = 1 << 20;

}  // namespace

std::size_t ByteHistogram::distinct() const noexcept {
  std::size_t n = 0;
  for (const auto c : counts) n += c != 0;
  return n;
}

ByteHistogram& ByteHistogram::operator+=(const ByteHistogram& other) noexcept {
  for (std::size_t b = 0; b < counts.size(); ++b) counts[b] += other.counts[b];
  total += other.total;
  return *this;
}

namespace serial {

ByteHistogram histogram(std::string_view text) {
  ByteHistogram hist;
  for (const char c : text) ++hist.counts[static_cast<unsigned char>(c)];
  hist.total = text.size();
  return hist;
}

}  // namespace serial

ByteHistogram histogram(std::string_view text) {
  if (text.size() <= kChunkSize) return serial::histogram(text);
  const auto chunks = static_cast<std::ptrdiff_t>((text.size() + kChunkSize - 1) / kChunkSize);
  std::vector<ByteHistogram> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < chunks; ++i) {
    partial[i] = serial::histogram(text.substr(static_cast<std::size_t>(i) * kChunkSize, kChunkSize));
  }
  ByteHistogram hist;
  for (const auto& p : partial) hist += p;
  return hist;
}

double shannon_entropy(const ByteHistogram& hist) {
  if (hist.total == 0) throw Error(Errc::EmptyText, "entropy of an empty text is undefined");
  const auto m = static_cast<double>(hist.total);
  double h = 0.0;
  for (const auto q : hist.counts) {
    if (q == 0) continue;
    const double p = static_cast<double>(q) / m;
    h += p * std::log2(m / static_cast<double>(q));
  }
  return h;
}

EntropyReport sse_entropy_report(std::string_view source_text, std::string_view transformed_text,
                                 std::uint8_t empty_symbol) {
  if (source_text.size() != transformed_text.size()) {
    throw Error(Errc::LengthMismatch,
                "source has " + std::to_string(source_text.size()) + " bytes, transformed has " +
                    std::to_string(transformed_text.size()));
  }
  if (source_text.empty()) throw Error(Errc::EmptyText, "cannot analyze an empty text");

  EntropyReport r;
  r.empty_symbol = empty_symbol;
  r.source_hist = histogram(source_text);
  r.target_hist = histogram(transformed_text);
  r.source_entropy = shannon_entropy(r.source_hist);
  r.target_entropy = shannon_entropy(r.target_hist);
  r.source_ratio = compression_ratio(r.source_entropy);
  r.target_ratio = compression_ratio(r.target_entropy);
  r.empty_count = r.target_hist.counts[empty_symbol];

  const std::uint64_t m = r.source_hist.total;
  bool bounded = true;
  bool probs_bounded = true;
  std::uint64_t removed = 0;
  for (unsigned b = 0; b < 256; ++b) {
    if (b == empty_symbol) continue;
    const auto q = r.source_hist.counts[b];
    const auto q_new = r.target_hist.counts[b];
    if (q_new > q) {
      bounded = false;
      probs_bounded = false;
      continue;
    }
    // Both probabilities share the denominator m, so p'_i <= p_i <= 1 reduces
    // to q'_i <= q_i <= m.
    if (q > m) probs_bounded = false;
    removed += q - q_new;
  }
  r.formula_checks.counts_bounded = bounded;
  r.formula_checks.probabilities_bounded = probs_bounded;
  r.formula_checks.empty_count_balance = bounded && r.empty_count == removed;
  r.formula_checks.empty_probability =
      bounded && r.empty_count <= m && r.empty_count == removed;
  return r;
}

nlohmann::json to_json(const ByteHistogram& hist) {
  nlohmann::json counts = nlohmann::json::object();
  for (unsigned b = 0; b < 256; ++b) {
    if (hist.counts[b] != 0) counts[std::to_string(b)] = hist.counts[b];
  }
  return {{"counts", counts}, {"total", hist.total}};
}

nlohmann::json to_json(const EntropyReport& r) {
  return {
      {"source_hist", to_json(r.source_hist)},
      {"target_hist", to_json(r.target_hist)},
      {"empty_symbol", r.empty_symbol},
      {"source_entropy", r.source_entropy},
      {"target_entropy", r.target_entropy},
      {"source_ratio", r.source_ratio},
      {"target_ratio", r.target_ratio},
      {"empty_count", r.empty_count},
      {"formula_checks",
       {{"counts_bounded", r.formula_checks.counts_bounded},
        {"empty_count_balance", r.formula_checks.empty_count_balance},
        {"probabilities_bounded", r.formula_checks.probabilities_bounded},
        {"empty_probability", r.formula_checks.empty_probability},
        {"all", r.formula_checks.all()}}},
  };
}

}  // namespace sse
