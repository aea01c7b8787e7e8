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

#include "sse/theory.hpp"

#include <cmath>

#include "sse/entropy.hpp"
#include "sse/error.hpp"

namespace sse::theory {

namespace {

double term(double p) { return p == 0.0 ? 0.0 : y(p); }

// Maximiser of H' - H found by exhaustive search; see the theory tests.
const LineSet& witness_lines() {
  static const LineSet lines = {"abbb", "bbbb", "bbbb", "bbbb"};
  return lines;
}

}  // namespace

double y(double x) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw Error(Errc::DomainError, "y(x) is defined on (0, 1] only");
  }
  return x * std::log2(1.0 / x);
}

std::vector<BoundVerdict> entropy_delta_bound_check(std::span<const ProbabilityPair> pairs) {
  std::vector<BoundVerdict> out;
  out.reserve(pairs.size());
  for (const auto& [reduced, original] : pairs) {
    if (!(reduced >= 0.0 && reduced <= original && original <= 1.0)) {
      throw Error(Errc::DomainError, "probability pair must satisfy 0 <= p' <= p <= 1");
    }
    BoundVerdict v;
    v.guaranteed = original <= YFunctionFacts::argmax;
    v.reduced_term = term(reduced);
    v.original_term = term(original);
    v.holds = v.reduced_term <= v.original_term;
    out.push_back(v);
  }
  return out;
}

Counterexample two_symbol_counterexample() {
  Counterexample ex;
  ex.lines = witness_lines();
  const SseConfig config{};
  const auto records = sse_encode(ex.lines, config);
  ex.source_text = join_lines(sort_lines(ex.lines));
  for (const auto& rec : records) {
    ex.transformed_text.append(rec.elided, static_cast<char>(config.empty_symbol));
    ex.transformed_text += rec.suffix;
    ex.transformed_text += '\n';
  }
  ex.source_entropy = shannon_entropy(histogram(ex.source_text));
  ex.target_entropy = shannon_entropy(histogram(ex.transformed_text));
  return ex;
}

}  // namespace sse::theory
