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

#include "sse/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "sse/entropy.hpp"
#include "sse/error.hpp"
#include "sse/parallel.hpp"

namespace sse::simulate {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct TrialResult {
  double source_entropy = 0.0;
  double target_entropy = 0.0;
};

std::string literal_text(const std::vector<TransformedLine>& records, char empty) {
  std::string text;
  for (const auto& rec : records) {
    text.append(rec.elided, empty);
    text += rec.suffix;
    text += static_cast<char>(kLineFeed);
  }
  return text;
}

template <bool Parallel>
TrialResult run_trial(const StudyConfig& cfg, std::size_t n, std::size_t trial) {
  Rng rng(trial_seed(cfg.seed, n, trial));
  const auto probs = sample_probabilities(n, rng);
  const auto sorted = sort_lines(generate_corpus(probs, cfg, rng));
  const auto records = Parallel ? set_empty(sorted) : sse::serial::set_empty(sorted);
  const std::string source = join_lines(sorted);
  const std::string target = literal_text(records, static_cast<char>(kDefaultEmptySymbol));
  const auto report = sse_entropy_report(source, target, kDefaultEmptySymbol);
  if (!report.consistent()) {
    throw std::logic_error("formula checks failed for alphabet " + std::to_string(n) +
                           " trial " + std::to_string(trial));
  }
  return {report.source_entropy, report.target_entropy};
}

std::vector<StudyRow> aggregate(const StudyConfig& cfg, const std::vector<TrialResult>& trials) {
  std::vector<StudyRow> rows;
  const std::size_t per = cfg.trials_per_size;
  for (std::size_t n = cfg.min_alphabet; n <= cfg.max_alphabet; ++n) {
    const std::size_t base = (n - cfg.min_alphabet) * per;
    StudyRow row;
    row.alphabet_size = n;
    row.source_min = row.target_min = std::numeric_limits<double>::infinity();
    row.source_max = row.target_max = -std::numeric_limits<double>::infinity();
    double source_sum = 0.0;
    double target_sum = 0.0;
    for (std::size_t t = 0; t < per; ++t) {
      const auto& r = trials[base + t];
      source_sum += r.source_entropy;
      target_sum += r.target_entropy;
      row.source_min = std::min(row.source_min, r.source_entropy);
      row.source_max = std::max(row.source_max, r.source_entropy);
      row.target_min = std::min(row.target_min, r.target_entropy);
      row.target_max = std::max(row.target_max, r.target_entropy);
    }
    row.source_mean = source_sum / static_cast<double>(per);
    row.target_mean = target_sum / static_cast<double>(per);
    row.ratio_mean = row.target_mean / row.source_mean;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

void StudyConfig::validate() const {
  if (min_alphabet < 2 || max_alphabet < min_alphabet || max_alphabet > kMaxAlphabet) {
    throw Error(Errc::DomainError, "alphabet sizes must satisfy 2 <= min <= max <= 52");
  }
  if (trials_per_size == 0 || lines_per_corpus == 0) {
    throw Error(Errc::DomainError, "trial and line counts must be at least 1");
  }
  if (min_line_length == 0 || max_line_length < min_line_length) {
    throw Error(Errc::DomainError, "line lengths must satisfy 1 <= min <= max");
  }
}

unsigned char alphabet_byte(std::size_t index) {
  if (index >= kMaxAlphabet) throw Error(Errc::DomainError, "alphabet index out of range");
  return static_cast<unsigned char>(index < 26 ? 'A' + index : 'a' + (index - 26));
}

std::vector<double> sample_probabilities(std::size_t n, Rng& rng) {
  if (n < 2) throw Error(Errc::DomainError, "an alphabet needs at least two symbols");
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> probs(n);
  double sum = 0.0;
  for (auto& p : probs) {
    // Exponential draws are almost surely positive; retry the measure-zero case.
    do {
      p = draw(rng);
    } while (p <= 0.0);
    sum += p;
  }
  for (auto& p : probs) p /= sum;
  return probs;
}

LineSet generate_corpus(const std::vector<double>& probs, const StudyConfig& cfg, Rng& rng) {
  if (probs.empty() || probs.size() > kMaxAlphabet) {
    throw Error(Errc::DomainError, "alphabet must have 1 to 52 symbols");
  }
  std::uniform_int_distribution<std::size_t> length(cfg.min_line_length, cfg.max_line_length);
  std::discrete_distribution<std::size_t> symbol(probs.begin(), probs.end());
  LineSet lines(cfg.lines_per_corpus);
  for (auto& line : lines) {
    line.resize(length(rng));
    for (auto& c : line) c = static_cast<char>(alphabet_byte(symbol(rng)));
  }
  return lines;
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t n, std::size_t trial) noexcept {
  return splitmix64(splitmix64(master ^ splitmix64(n)) + trial);
}

std::vector<StudyRow> run_study(const StudyConfig& cfg) {
  cfg.validate();
  const std::size_t sizes = cfg.max_alphabet - cfg.min_alphabet + 1;
  const auto total = static_cast<std::ptrdiff_t>(sizes * cfg.trials_per_size);
  std::vector<TrialResult> trials(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < total; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    trials[idx] = run_trial<true>(cfg, cfg.min_alphabet + idx / cfg.trials_per_size,
                                  idx % cfg.trials_per_size);
  }
  return aggregate(cfg, trials);
}

namespace serial {

std::vector<StudyRow> run_study(const StudyConfig& cfg) {
  cfg.validate();
  std::vector<TrialResult> trials;
  for (std::size_t n = cfg.min_alphabet; n <= cfg.max_alphabet; ++n) {
    for (std::size_t t = 0; t < cfg.trials_per_size; ++t) {
      trials.push_back(run_trial<false>(cfg, n, t));
    }
  }
  return aggregate(cfg, trials);
}

}  // namespace serial

nlohmann::json to_json(const StudyConfig& cfg) {
  return {
      {"alphabet_sizes", {cfg.min_alphabet, cfg.max_alphabet}},
      {"trials_per_size", cfg.trials_per_size},
      {"lines_per_corpus", cfg.lines_per_corpus},
      {"line_length", {cfg.min_line_length, cfg.max_line_length}},
      {"seed", cfg.seed},
      {"probabilities", "uniform on the simplex (normalised exponentials)"},
      {"symbols", "A-Z then a-z"},
      {"empty_symbol", kDefaultEmptySymbol},
  };
}

void write_csv(std::ostream& out, const StudyConfig& cfg, const std::vector<StudyRow>& rows) {
  out << "# " << to_json(cfg).dump() << '\n';
  out << "alphabet_size,source_mean,source_min,source_max,target_mean,target_min,target_max,"
         "ratio_mean\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%.9f,%.9f,%.9f,%.9f,%.9f,%.9f,%.9f\n", r.alphabet_size,
                  r.source_mean, r.source_min, r.source_max, r.target_mean, r.target_min,
                  r.target_max, r.ratio_mean);
    out << buf;
  }
}

}  // namespace sse::simulate
