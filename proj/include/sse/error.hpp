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

#ifndef SSE_ERROR_HPP
#define SSE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sse {

enum class Errc {
  AlphabetViolation,
  AllBytesUsed,
  InvalidLine,
  CorruptStream,
  BadMagic,
  BadVersion,
  BadFlags,
  MalformedLine,
  TruncatedPayload,
  EmptyText,
  LengthMismatch,
  DomainError,
  EmptyInput,
  ToolNotFound,
  NonZeroExit,
  Timeout,
  IoError,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the toolkit carries one of the codes above; the CLI
// maps codes to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sse

#endif  // SSE_ERROR_HPP
