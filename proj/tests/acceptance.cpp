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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "sse/backend.hpp"
#include "sse/container.hpp"
#include "sse/corpus.hpp"
#include "sse/entropy.hpp"
#include "sse/simulate.hpp"
#include "sse/theory.hpp"
#include "sse/transform.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// Length-law tallies shared by criteria 1, 6 and 9.
struct LengthLaw {
  std::size_t checked = 0;
  std::size_t violations = 0;

  void check(const sse::LineSet& lines, std::string_view payload) {
    std::size_t expected = 0;
    for (const auto& l : lines) expected += l.size() + 1;
    ++checked;
    violations += payload.size() != expected;
  }
};

LengthLaw g_length_law;

// Formula tallies gathered during criterion 1 for criterion 3.
struct FormulaTally {
  std::size_t encodes = 0;
  std::size_t failures = 0;
};

FormulaTally g_formulas;

constexpr std::size_t kRoundTripCases = 10000;

bool formulas_hold(const std::string& source, const std::string& payload, std::uint8_t empty) {
  if (source.size() != payload.size()) return false;
  if (source.empty()) return true;
  const auto q = sse::serial::histogram(source);
  const auto q_new = sse::serial::histogram(payload);
  std::uint64_t removed = 0;
  for (unsigned b = 0; b < 256; ++b) {
    if (b == empty) continue;
    if (q_new.counts[b] > q.counts[b]) return false;
    removed += q.counts[b] - q_new.counts[b];
  }
  if (q_new.counts[empty] != removed) return false;
  return sse::sse_entropy_report(source, payload, empty).consistent();
}

Outcome round_trip() {
  const auto start = Clock::now();
  gen::Rng rng(0x5EED0001);
  std::size_t runs = 0, failures = 0;
  for (std::size_t i = 0; i < kRoundTripCases; ++i) {
    const auto lines = gen::line_set(rng);
    for (const auto mode : {sse::RunMode::Literal, sse::RunMode::Counted}) {
      for (const auto collation :
           {sse::Collation::ByteWise, sse::Collation::CaseInsensitiveByteWise}) {
        const sse::SseConfig config{0x20, mode, collation};
        const std::string bytes = sse::encode_container(lines, config);
        const auto sorted = sse::sort_lines(lines, collation);
        ++runs;
        failures += sse::decode_container(bytes) != sorted;
        if (mode == sse::RunMode::Literal) {
          const std::string_view payload = std::string_view(bytes).substr(sse::kHeaderSize);
          g_length_law.check(lines, payload);
          ++g_formulas.encodes;
          g_formulas.failures +=
              !formulas_hold(sse::join_lines(sorted), std::string(payload), config.empty_symbol);
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  return {failures == 0 && elapsed < 60.0,
          fmt("%zu line sets x 4 configs, %zu mismatches, %.1f s (limit 60 s)", kRoundTripCases,
              failures, elapsed)};
}

Outcome extremum() {
  const double at = sse::theory::y(1.0 / std::exp(1.0));
  const double err = std::abs(at - 0.530737845423043);
  constexpr int kPoints = 10000;
  double best_x = 0.0, best_y = -1.0;
  for (int i = 1; i <= kPoints; ++i) {
    const double x = static_cast<double>(i) / kPoints;
    const double v = sse::theory::y(x);
    if (v > best_y) best_y = v, best_x = x;
  }
  const double arg_err = std::abs(best_x - 0.367879441171442);
  return {err <= 1e-12 && arg_err <= 1e-4,
          fmt("|y(1/e) - 0.530737845423043| = %.2e (<= 1e-12), grid argmax %.4f off by %.2e (<= "
              "1e-4)",
              err, best_x, arg_err)};
}

Outcome formula_suite() {
  return {g_formulas.encodes == 2 * kRoundTripCases && g_formulas.failures == 0,
          fmt("%zu literal encodes, %zu violations of (1)-(4)", g_formulas.encodes,
              g_formulas.failures)};
}

Outcome monotonicity() {
  gen::Rng rng(0x5EED0004);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<sse::theory::ProbabilityPair> below, above;
  for (int i = 0; i < 100000; ++i) {
    const double p = unit(rng);
    const double reduced = p * unit(rng);
    (p <= sse::theory::YFunctionFacts::argmax ? below : above).push_back({reduced, p});
  }
  std::size_t below_violations = 0, above_violations = 0;
  for (const auto& v : sse::theory::entropy_delta_bound_check(below)) below_violations += !v.holds;
  for (const auto& v : sse::theory::entropy_delta_bound_check(above)) above_violations += !v.holds;
  return {below_violations == 0 && above_violations > 0,
          fmt("%zu pairs with p <= 1/e: %zu violations; %zu pairs with p > 1/e: %zu violations",
              below.size(), below_violations, above.size(), above_violations)};
}

Outcome two_character_failure() {
  const auto ex = sse::theory::two_symbol_counterexample();
  const auto records = sse::sse_encode(ex.lines, sse::SseConfig{});
  const bool round_trips =
      sse::join_lines(sse::sse_decode(records, sse::SseConfig{})) == ex.source_text;
  return {ex.target_entropy >= ex.source_entropy && round_trips,
          fmt("%zu lines, H = %.6f, H' = %.6f, round trip %s", ex.lines.size(),
              ex.source_entropy, ex.target_entropy, round_trips ? "ok" : "FAILED")};
}

Outcome table_directions() {
  namespace corpus = sse::corpus;
  const auto start = Clock::now();
  const sse::HuffmanCodec codec;
  const sse::SseConfig config{};
  auto row = [&](corpus::Family f) {
    const auto lines = corpus::generate({f, 10000, 42});
    const auto bytes = sse::encode_container(lines, config);
    g_length_law.check(lines, std::string_view(bytes).substr(sse::kHeaderSize));
    return sse::compare_corpus(lines, config, codec);
  };
  const auto word = row(corpus::Family::WordList);
  const auto url = row(corpus::Family::UrlList);
  const auto hex = row(corpus::Family::HexList);
  const double elapsed = seconds_since(start);

  const bool ordering =
      url.sse_entropy_ratio < word.sse_entropy_ratio && word.sse_entropy_ratio < hex.sse_entropy_ratio;
  const bool reductions = url.sse_entropy_ratio < url.source_entropy_ratio &&
                          word.sse_entropy_ratio < word.source_entropy_ratio;
  const bool hex_weak = hex.entropy_ratio_of_ratios > 0.85 && hex.actual.ratio_of_ratios > 0.85;
  return {ordering && reductions && hex_weak && elapsed < 30.0,
          fmt("SSE entropy ratio url %.4f < word %.4f < hex %.4f; source url %.4f word %.4f; hex "
              "ratio of ratios entropy %.4f actual %.4f (> 0.85); %.1f s",
              url.sse_entropy_ratio, word.sse_entropy_ratio, hex.sse_entropy_ratio,
              url.source_entropy_ratio, word.source_entropy_ratio, hex.entropy_ratio_of_ratios,
              hex.actual.ratio_of_ratios, elapsed)};
}

Outcome codec_bounds() {
  gen::Rng rng(0x5EED0007);
  std::size_t out_of_bounds = 0, mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::string in = gen::bytes(rng, 4096);
    const auto coded = sse::huffman_encode(in);
    mismatches += sse::huffman_decode(coded) != in;
    const auto h = sse::histogram(in);
    const double m = static_cast<double>(in.size());
    const double entropy = sse::shannon_entropy(h);
    const auto bits =
        static_cast<double>(sse::huffman::packed_bits(sse::huffman::code_lengths(h), h));
    // Slack covers floating-point rounding of H*m only.
    out_of_bounds += bits < entropy * m - 1e-6 || bits > (entropy + 1.0) * m + 1e-6;
  }
  return {out_of_bounds == 0 && mismatches == 0,
          fmt("1000 inputs: %zu outside [H*m, (H+1)*m], %zu round-trip mismatches", out_of_bounds,
              mismatches)};
}

Outcome simulation_band() {
  const auto start = Clock::now();
  const sse::simulate::StudyConfig cfg;  // defaults
  const auto rows = sse::simulate::run_study(cfg);
  const auto again = sse::simulate::run_study(cfg);
  std::ostringstream a, b;
  sse::simulate::write_csv(a, cfg, rows);
  sse::simulate::write_csv(b, cfg, again);
  const double elapsed = seconds_since(start);

  std::size_t out_of_band = 0, not_reduced = 0;
  double lo = 1.0, hi = 0.0;
  std::string offenders;
  for (const auto& r : rows) {
    if (r.alphabet_size < 5) continue;
    lo = std::min(lo, r.ratio_mean);
    hi = std::max(hi, r.ratio_mean);
    if (r.ratio_mean < 0.5 || r.ratio_mean > 0.9) {
      ++out_of_band;
      if (offenders.size() < 60) offenders += " " + std::to_string(r.alphabet_size);
    }
    not_reduced += !(r.target_mean < r.source_mean);
  }
  const bool identical = a.str() == b.str();
  return {out_of_band == 0 && not_reduced == 0 && identical && elapsed < 300.0,
          fmt("ratio_mean over n=5..52 in [%.4f, %.4f] (band [0.5, 0.9]); %zu sizes out of band%s; "
              "%zu sizes without reduction; CSV %s; %.1f s for two runs",
              lo, hi, out_of_band, offenders.empty() ? "" : (" (n =" + offenders + ")").c_str(),
              not_reduced, identical ? "identical" : "DIFFERS", elapsed)};
}

Outcome length_law() {
  return {g_length_law.checked == 2 * kRoundTripCases + 3 && g_length_law.violations == 0,
          fmt("%zu literal payloads checked, %zu violations", g_length_law.checked,
              g_length_law.violations)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"1 round-trip soundness", round_trip},
      {"2 analytic extremum", extremum},
      {"3 formula suite (1)-(4)", formula_suite},
      {"4 monotonicity (5)/(6)", monotonicity},
      {"5 two-character failure", two_character_failure},
      {"6 directional compression table", table_directions},
      {"7 built-in codec bounds", codec_bounds},
      {"8 simulation band", simulation_band},
      {"9 literal-mode length law", length_law},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
