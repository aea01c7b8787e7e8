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

#ifndef SSE_CORPUS_HPP
#define SSE_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "sse/transform.hpp"

namespace sse::corpus {

enum class Family { WordList, UrlList, HexList };

struct CorpusSpec {
  Family family = Family::WordList;
  std::size_t count = 1;
  std::uint64_t seed = 0;
};

std::string_view to_string(Family family) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

// Parses "family:count:seed", e.g. "url:10000:42". Throws Errc::DomainError.
CorpusSpec parse_spec(std::string_view text);

// Splits on LF; a final unterminated line is kept. With `strip_cr` one
// trailing CR is removed from each line. Throws Errc::IoError.
LineSet read_lines(std::istream& in, bool strip_cr = false);
LineSet read_lines(std::string_view text, bool strip_cr = false);
LineSet read_lines_file(const std::filesystem::path& path, bool strip_cr = false);

void write_lines(std::ostream& out, const LineSet& lines);

// Deterministic per seed. Throws Errc::DomainError when count is zero.
LineSet generate(const CorpusSpec& spec);

}  // namespace sse::corpus

#endif  // SSE_CORPUS_HPP
