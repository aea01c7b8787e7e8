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

#include "sse/error.hpp"

namespace sse {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::AlphabetViolation: return "AlphabetViolation";
    case Errc::AllBytesUsed: return "AllBytesUsed";
    case Errc::InvalidLine: return "InvalidLine";
    case Errc::CorruptStream: return "CorruptStream";
    case Errc::BadMagic: return "BadMagic";
    case Errc::BadVersion: return "BadVersion";
    case Errc::BadFlags: return "BadFlags";
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::TruncatedPayload: return "TruncatedPayload";
    case Errc::EmptyText: return "EmptyText";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DomainError: return "DomainError";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::ToolNotFound: return "ToolNotFound";
    case Errc::NonZeroExit: return "NonZeroExit";
    case Errc::Timeout: return "Timeout";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace sse
