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

// Random inputs for the property tests.

#ifndef SSE_TESTS_GENERATORS_HPP
#define SSE_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t below(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// Bytes a generated line may contain: never LF, never `excluded`.
inline std::string alphabet(Rng& rng, char excluded) {
  static const std::string small = "abcAB";
  static const std::string letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  std::string out;
  switch (below(rng, 3)) {
    case 0: out = small; break;
    case 1: out = letters; break;
    default:
      for (int b = 0; b < 256; ++b) {
        if (b != '\n' && static_cast<char>(b) != excluded) out += static_cast<char>(b);
      }
  }
  return out;
}

// Line sets with duplicates, empty lines and prefix chains mixed in.
inline std::vector<std::string> line_set(Rng& rng, char excluded = ' ', std::size_t max_lines = 40) {
  const std::string symbols = alphabet(rng, excluded);
  const std::size_t count = below(rng, max_lines + 1);
  std::vector<std::string> lines;
  lines.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t kind = below(rng, 10);
    if (kind == 0) {
      lines.emplace_back();
    } else if (kind <= 2 && !lines.empty()) {
      lines.push_back(lines[below(rng, lines.size())]);
    } else if (kind <= 4 && !lines.empty()) {
      std::string s = lines[below(rng, lines.size())];
      s.resize(below(rng, s.size() + 1));
      for (std::size_t n = below(rng, 4); n > 0; --n) s += symbols[below(rng, symbols.size())];
      lines.push_back(std::move(s));
    } else {
      std::string s(below(rng, 13), '\0');
      for (auto& c : s) c = symbols[below(rng, symbols.size())];
      lines.push_back(std::move(s));
    }
  }
  return lines;
}

inline std::string bytes(Rng& rng, std::size_t max_len) {
  std::string s(below(rng, max_len) + 1, '\0');
  switch (below(rng, 4)) {
    case 0: {
      const char c = static_cast<char>(below(rng, 256));
      for (auto& x : s) x = c;
      break;
    }
    case 1: {
      const std::size_t width = below(rng, 6) + 2;
      for (auto& x : s) x = static_cast<char>('a' + below(rng, width));
      break;
    }
    default:
      for (auto& x : s) x = static_cast<char>(below(rng, 256));
  }
  return s;
}

}  // namespace gen

#endif  // SSE_TESTS_GENERATORS_HPP
