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

#ifndef SSE_SIMULATE_HPP
#define SSE_SIMULATE_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "sse/transform.hpp"

namespace sse::simulate {

using Rng = std::mt19937_64;

struct StudyConfig {
  std::size_t min_alphabet = 2;
  std::size_t max_alphabet = 52;
  std::size_t trials_per_size = 100;
  std::size_t lines_per_corpus = 2000;
  std::size_t min_line_length = 3;
  std::size_t max_line_length = 12;
  std::uint64_t seed = 42;

  // Throws Errc::DomainError on an invalid configuration.
  void validate() const;
};

struct StudyRow {
  std::size_t alphabet_size = 0;
  double source_mean = 0.0;
  double source_min = 0.0;
  double source_max = 0.0;
  double target_mean = 0.0;
  double target_min = 0.0;
  double target_max = 0.0;
  double ratio_mean = 0.0;  // target_mean / source_mean

  friend bool operator==(const StudyRow&, const StudyRow&) = default;
};

// Letters 'A'-'Z' then 'a'-'z'.
inline constexpr std::size_t kMaxAlphabet = 52;
unsigned char alphabet_byte(std::size_t index);

// Uniform draw from the probability simplex via normalised exponentials.
std::vector<double> sample_probabilities(std::size_t n, Rng& rng);

LineSet generate_corpus(const std::vector<double>& probs, const StudyConfig& cfg, Rng& rng);

// Seed of trial `trial` for alphabet size `n`; independent of scheduling.
std::uint64_t trial_seed(std::uint64_t master, std::size_t n, std::size_t trial) noexcept;

std::vector<StudyRow> run_study(const StudyConfig& cfg);

void write_csv(std::ostream& out, const StudyConfig& cfg, const std::vector<StudyRow>& rows);
nlohmann::json to_json(const StudyConfig& cfg);

namespace serial {

std::vector<StudyRow> run_study(const StudyConfig& cfg);

}  // namespace serial

}  // namespace sse::simulate

#endif  // SSE_SIMULATE_HPP
