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

#ifndef SSE_THEORY_HPP
#define SSE_THEORY_HPP

#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sse/transform.hpp"

namespace sse::theory {

// Extremum of y(x) = x log2(1/x) on (0, 1].
struct YFunctionFacts {
  static constexpr double argmax = 1.0 / std::numbers::e;
  static constexpr double max_value = 1.0 / (std::numbers::e * std::numbers::ln2);
};

// x log2(1/x). Throws Errc::DomainError outside (0, 1].
double y(double x);

struct ProbabilityPair {
  double reduced = 0.0;  // p', probability after Set Empty
  double original = 0.0;  // p
};

struct BoundVerdict {
  // y(p') <= y(p) is guaranteed only when p <= 1/e; above it the outcome
  // may go either way.
  bool guaranteed = false;
  double reduced_term = 0.0;
  double original_term = 0.0;
  bool holds = false;  // actual outcome of y(p') <= y(p)
};

// y(0) is taken as its limit 0 so that fully elided symbols are admissible.
// Throws Errc::DomainError unless 0 <= p' <= p <= 1.
std::vector<BoundVerdict> entropy_delta_bound_check(std::span<const ProbabilityPair> pairs);

struct Counterexample {
  LineSet lines;
  std::string source_text;       // sorted lines, LF-terminated
  std::string transformed_text;  // literal-mode SSE with a space as empty symbol
  double source_entropy = 0.0;
  double target_entropy = 0.0;
};

// Two-letter line set on which Set Empty raises the entropy. The witness was
// the maximiser of H' - H over every multiset of at most 6 lines of length
// at most 4 over {a, b}; the search is re-run by the test suite.
Counterexample two_symbol_counterexample();

}  // namespace sse::theory

#endif  // SSE_THEORY_HPP
