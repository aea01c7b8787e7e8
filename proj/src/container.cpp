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

#include "sse/container.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "sse/error.hpp"

namespace sse {

namespace {

constexpr std::uint8_t kRunModeBit = 0x01;
constexpr std::uint8_t kCollationBit = 0x02;
constexpr std::uint8_t kReservedBits = 0xFC;

bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

ContainerHeader parse_header(std::string_view bytes) {
  if (bytes.size() < kMagic.size() || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw Error(Errc::BadMagic, "not an SSE container (bad magic)");
  }
  if (bytes.size() < kHeaderSize) {
    throw Error(Errc::TruncatedPayload, "container header is truncated");
  }
  const auto version = static_cast<std::uint8_t>(bytes[4]);
  if (version != kFormatVersion) {
    throw Error(Errc::BadVersion, "unsupported container version " + std::to_string(version));
  }
  const auto flags = static_cast<std::uint8_t>(bytes[5]);
  if (flags & kReservedBits) {
    throw Error(Errc::BadFlags, "reserved flag bits are set");
  }
  const auto empty = static_cast<std::uint8_t>(bytes[6]);
  if (empty == kLineFeed || empty == kCarriageReturn) {
    throw Error(Errc::BadFlags, "empty symbol collides with line framing");
  }
  if ((flags & kRunModeBit) && empty >= '0' && empty <= '9') {
    throw Error(Errc::BadFlags, "counted mode with a digit as empty symbol");
  }
  ContainerHeader header;
  header.version = version;
  header.run_mode = (flags & kRunModeBit) ? RunMode::Counted : RunMode::Literal;
  header.collation =
      (flags & kCollationBit) ? Collation::CaseInsensitiveByteWise : Collation::ByteWise;
  header.empty_symbol = empty;
  return header;
}

TransformedLine parse_literal(std::string_view line, char empty) {
  const std::size_t elided = std::min(line.find_first_not_of(empty), line.size());
  return TransformedLine{elided, std::string(line.substr(elided))};
}

TransformedLine parse_counted(std::string_view line, char empty, std::size_t index) {
  const auto delim = line.find(empty);
  if (delim == std::string_view::npos) {
    throw Error(Errc::MalformedLine, "line " + std::to_string(index) + " has no count delimiter");
  }
  const std::string_view digits = line.substr(0, delim);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), is_digit)) {
    throw Error(Errc::MalformedLine, "line " + std::to_string(index) + " has a malformed count");
  }
  std::size_t elided = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), elided);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw Error(Errc::MalformedLine, "line " + std::to_string(index) + " count is out of range");
  }
  return TransformedLine{elided, std::string(line.substr(delim + 1))};
}

}  // namespace

ContainerHeader ContainerHeader::from_config(const SseConfig& config) {
  ContainerHeader header;
  header.run_mode = config.run_mode;
  header.collation = config.collation;
  header.empty_symbol = config.empty_symbol;
  return header;
}

SseConfig ContainerHeader::config() const {
  return SseConfig{empty_symbol, run_mode, collation};
}

std::uint8_t ContainerHeader::flags() const noexcept {
  std::uint8_t flags = 0;
  if (run_mode == RunMode::Counted) flags |= kRunModeBit;
  if (collation == Collation::CaseInsensitiveByteWise) flags |= kCollationBit;
  return flags;
}

std::string serialize_header(const ContainerHeader& header) {
  std::string out(kMagic.begin(), kMagic.end());
  out += static_cast<char>(header.version);
  out += static_cast<char>(header.flags());
  out += static_cast<char>(header.empty_symbol);
  return out;
}

std::string serialize_payload(const std::vector<TransformedLine>& records,
                              const ContainerHeader& header) {
  const char empty = static_cast<char>(header.empty_symbol);
  std::string out;
  std::size_t size = 0;
  for (const auto& rec : records) size += rec.elided + rec.suffix.size() + 1;
  out.reserve(header.run_mode == RunMode::Literal ? size : size / 2 + records.size() * 4);
  for (const auto& rec : records) {
    if (header.run_mode == RunMode::Literal) {
      out.append(rec.elided, empty);
    } else {
      out += std::to_string(rec.elided);
      out += empty;
    }
    out += rec.suffix;
    out += static_cast<char>(kLineFeed);
  }
  return out;
}

std::string serialize(const std::vector<TransformedLine>& records, const ContainerHeader& header) {
  return serialize_header(header) + serialize_payload(records, header);
}

SseContainer deserialize(std::string_view bytes) {
  SseContainer container;
  container.header = parse_header(bytes);
  std::string_view payload = bytes.substr(kHeaderSize);
  if (!payload.empty() && payload.back() != static_cast<char>(kLineFeed)) {
    throw Error(Errc::TruncatedPayload, "payload does not end with a line feed");
  }
  const char empty = static_cast<char>(container.header.empty_symbol);
  const bool counted = container.header.run_mode == RunMode::Counted;
  while (!payload.empty()) {
    const auto eol = payload.find(static_cast<char>(kLineFeed));
    const std::string_view line = payload.substr(0, eol);
    const std::size_t index = container.records.size();
    container.records.push_back(counted ? parse_counted(line, empty, index)
                                        : parse_literal(line, empty));
    payload.remove_prefix(eol + 1);
  }
  return container;
}

std::string encode_container(const LineSet& input, const SseConfig& config) {
  const auto records = sse_encode(input, config);
  const auto header = ContainerHeader::from_config(config);
  std::string payload = serialize_payload(records, header);
  if (config.run_mode == RunMode::Literal) {
    std::size_t expected = 0;
    for (const auto& line : input) expected += line.size() + 1;
    // Set Empty substitutes bytes one for one.
    if (payload.size() != expected) {
      throw std::logic_error("literal payload length " + std::to_string(payload.size()) +
                             " differs from source length " + std::to_string(expected));
    }
  }
  return serialize_header(header) + payload;
}

LineSet decode_container(std::string_view bytes) {
  const auto container = deserialize(bytes);
  return sse_decode(container.records, container.header.config());
}

}  // namespace sse
