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

#ifndef SSE_CONTAINER_HPP
#define SSE_CONTAINER_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sse/transform.hpp"

namespace sse {

// On-disk layout, 7 bytes followed by the payload:
//
//   "SSE1" | version 0x01 | flags | empty_symbol
//
// flags bit0 is the run mode (0 literal, 1 counted), bit1 the collation
// (0 bytewise, 1 case-insensitive); bits 2-7 are reserved and must be zero.
// Every payload line is LF-terminated, including the last one.
inline constexpr std::array<char, 4> kMagic = {'S', 'S', 'E', '1'};
inline constexpr std::uint8_t kFormatVersion = 0x01;
inline constexpr std::size_t kHeaderSize = 7;
inline constexpr std::string_view kFileExtension = ".sse";

struct ContainerHeader {
  std::uint8_t version = kFormatVersion;
  RunMode run_mode = RunMode::Literal;
  Collation collation = Collation::ByteWise;
  std::uint8_t empty_symbol = kDefaultEmptySymbol;

  static ContainerHeader from_config(const SseConfig& config);
  SseConfig config() const;
  std::uint8_t flags() const noexcept;

  friend bool operator==(const ContainerHeader&, const ContainerHeader&) = default;
};

struct SseContainer {
  ContainerHeader header;
  std::vector<TransformedLine> records;
};

std::string serialize_header(const ContainerHeader& header);
std::string serialize_payload(const std::vector<TransformedLine>& records,
                              const ContainerHeader& header);
std::string serialize(const std::vector<TransformedLine>& records,
                      const ContainerHeader& header);

// Throws BadMagic, BadVersion, BadFlags, MalformedLine or TruncatedPayload.
SseContainer deserialize(std::string_view bytes);

// Full pipeline: sort, Set Empty, serialize. In literal mode the payload
// length is checked against the sorted source length.
std::string encode_container(const LineSet& input, const SseConfig& config);

// deserialize followed by sse_decode; returns the sorted lines.
LineSet decode_container(std::string_view bytes);

}  // namespace sse

#endif  // SSE_CONTAINER_HPP
