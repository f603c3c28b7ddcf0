/*
 * Copyright 2026 The Axiom Atlas Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace atlas {

enum class ErrorCode {
  Parse,
  DuplicateKey,
  EmptySystem,
  DuplicateSystem,
  DuplicatePart,
  EmptyComposition,
  DuplicateId,
  DimensionMismatch,
  UnknownSystem,
  UnknownTheorem,
  OutOfRangeWeight,
  KindMismatch,
  CompositionMismatch,
  SystemMismatch,
  ZeroVector,
  MixedSystems,
  EmptySlice,
  TooFewItems,
  EmptyList,
  InvalidArgument,
  EmptyStatement,
  BackendUnavailable,
  MalformedBackendReply,
  UnknownSystemInReply,
  NoCorpusForSystem,
  Io,
};

/// Stable machine-greppable name, e.g. "E_SYSTEM_MISMATCH".
constexpr std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "E_PARSE";
    case ErrorCode::DuplicateKey: return "E_DUPLICATE_KEY";
    case ErrorCode::EmptySystem: return "E_EMPTY_SYSTEM";
    case ErrorCode::DuplicateSystem: return "E_DUPLICATE_SYSTEM";
    case ErrorCode::DuplicatePart: return "E_DUPLICATE_PART";
    case ErrorCode::EmptyComposition: return "E_EMPTY_COMPOSITION";
    case ErrorCode::DuplicateId: return "E_DUPLICATE_ID";
    case ErrorCode::DimensionMismatch: return "E_DIMENSION_MISMATCH";
    case ErrorCode::UnknownSystem: return "E_UNKNOWN_SYSTEM";
    case ErrorCode::UnknownTheorem: return "E_UNKNOWN_THEOREM";
    case ErrorCode::OutOfRangeWeight: return "E_OUT_OF_RANGE_WEIGHT";
    case ErrorCode::KindMismatch: return "E_KIND_MISMATCH";
    case ErrorCode::CompositionMismatch: return "E_COMPOSITION_MISMATCH";
    case ErrorCode::SystemMismatch: return "E_SYSTEM_MISMATCH";
    case ErrorCode::ZeroVector: return "E_ZERO_VECTOR";
    case ErrorCode::MixedSystems: return "E_MIXED_SYSTEMS";
    case ErrorCode::EmptySlice: return "E_EMPTY_SLICE";
    case ErrorCode::TooFewItems: return "E_TOO_FEW_ITEMS";
    case ErrorCode::EmptyList: return "E_EMPTY_LIST";
    case ErrorCode::InvalidArgument: return "E_INVALID_ARGUMENT";
    case ErrorCode::EmptyStatement: return "E_EMPTY_STATEMENT";
    case ErrorCode::BackendUnavailable: return "E_BACKEND_UNAVAILABLE";
    case ErrorCode::MalformedBackendReply: return "E_MALFORMED_BACKEND_REPLY";
    case ErrorCode::UnknownSystemInReply: return "E_UNKNOWN_SYSTEM_IN_REPLY";
    case ErrorCode::NoCorpusForSystem: return "E_NO_CORPUS_FOR_SYSTEM";
    case ErrorCode::Io: return "E_IO";
  }
  return "E_UNKNOWN";
}

/// Every failure raised by the library carries one ErrorCode.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace atlas
