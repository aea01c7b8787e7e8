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

#include "sse/corpus.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <random>
#include <sstream>

#include "sse/error.hpp"

namespace sse::corpus {

namespace {

using Rng = std::mt19937_64;

constexpr std::string_view kConsonants = "bcdfghjklmnpqrstvwxyz";
constexpr std::string_view kVowels = "aeiou";
constexpr std::string_view kHexDigits = "0123456789abcdef";
constexpr std::string_view kTopLevel[] = {"com", "org", "net", "edu", "io"};
constexpr std::size_t kDomainCount = 50;
constexpr std::size_t kPathPoolSize = 200;

char pick(std::string_view from, Rng& rng) {
  return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
}

// Alternating consonant/vowel letters.
std::string pseudo_word(Rng& rng, std::size_t min_len, std::size_t max_len) {
  const std::size_t len = std::uniform_int_distribution<std::size_t>(min_len, max_len)(rng);
  bool vowel = std::bernoulli_distribution(0.3)(rng);
  std::string word;
  word.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    word += pick(vowel ? kVowels : kConsonants, rng);
    vowel = !vowel;
  }
  return word;
}

LineSet word_list(std::size_t count, Rng& rng) {
  LineSet lines(count);
  for (auto& line : lines) line = pseudo_word(rng, 3, 12);
  return lines;
}

LineSet url_list(std::size_t count, Rng& rng) {
  std::vector<std::string> domains;
  domains.reserve(kDomainCount);
  for (std::size_t i = 0; i < kDomainCount; ++i) {
    const auto& tld = kTopLevel[std::uniform_int_distribution<std::size_t>(0, 4)(rng)];
    const bool www = std::bernoulli_distribution(0.6)(rng);
    domains.push_back((www ? "www." : "") + pseudo_word(rng, 4, 10) + "." + std::string(tld));
  }
  std::vector<std::string> pool;
  pool.reserve(kPathPoolSize);
  for (std::size_t i = 0; i < kPathPoolSize; ++i) pool.push_back(pseudo_word(rng, 3, 10));

  std::uniform_int_distribution<std::size_t> domain(0, kDomainCount - 1);
  std::uniform_int_distribution<std::size_t> word(0, kPathPoolSize - 1);
  std::uniform_int_distribution<std::size_t> depth(1, 4);
  LineSet lines(count);
  for (auto& line : lines) {
    line = "http://" + domains[domain(rng)];
    for (std::size_t d = depth(rng); d > 0; --d) line += "/" + pool[word(rng)];
  }
  return lines;
}

LineSet hex_list(std::size_t count, Rng& rng) {
  LineSet lines(count);
  for (auto& line : lines) {
    line.resize(32);
    for (auto& c : line) c = pick(kHexDigits, rng);
  }
  return lines;
}

}  // namespace

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::WordList: return "word";
    case Family::UrlList: return "url";
    case Family::HexList: return "hex";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  if (name == "word" || name == "words") return Family::WordList;
  if (name == "url" || name == "urls") return Family::UrlList;
  if (name == "hex" || name == "md5") return Family::HexList;
  return std::nullopt;
}

CorpusSpec parse_spec(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw Error(Errc::DomainError, "corpus spec must look like family:count:seed");
  }
  const auto family = parse_family(text.substr(0, first));
  if (!family) throw Error(Errc::DomainError, "unknown corpus family in '" + std::string(text) + "'");

  auto parse_number = [&](std::string_view digits) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw Error(Errc::DomainError, "bad number '" + std::string(digits) + "' in corpus spec");
    }
    return value;
  };
  CorpusSpec spec;
  spec.family = *family;
  spec.count = parse_number(text.substr(first + 1, second - first - 1));
  spec.seed = parse_number(text.substr(second + 1));
  if (spec.count == 0) throw Error(Errc::DomainError, "corpus count must be at least 1");
  return spec;
}

LineSet read_lines(std::string_view text, bool strip_cr) {
  LineSet lines;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    if (strip_cr && !line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  return lines;
}

LineSet read_lines(std::istream& in, bool strip_cr) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(Errc::IoError, "failed to read input stream");
  return read_lines(std::string_view(buffer.str()), strip_cr);
}

LineSet read_lines_file(const std::filesystem::path& path, bool strip_cr) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string() + ": " + std::strerror(errno));
  return read_lines(in, strip_cr);
}

void write_lines(std::ostream& out, const LineSet& lines) {
  for (const auto& line : lines) {
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    out.put('\n');
  }
}

LineSet generate(const CorpusSpec& spec) {
  if (spec.count == 0) throw Error(Errc::DomainError, "corpus count must be at least 1");
  Rng rng(spec.seed);
  switch (spec.family) {
    case Family::WordList: return word_list(spec.count, rng);
    case Family::UrlList: return url_list(spec.count, rng);
    case Family::HexList: return hex_list(spec.count, rng);
  }
  return {};
}

}  // namespace sse::corpus
