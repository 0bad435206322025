// Copyright 2026 The SynRES Pipeline Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "synres/error.h"

#include <utility>

namespace synres {
namespace {

std::string format_what(ErrorCode code, const std::string& message,
                        const std::string& stage) {
  std::string out = error_code_name(code);
  if (!stage.empty()) out += "[" + stage + "]";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kMalformedRle: return "MalformedRle";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kClientError: return "ClientError";
    case ErrorCode::kEmptyResponse: return "EmptyResponse";
    case ErrorCode::kPartialBatch: return "PartialBatch";
    case ErrorCode::kInsufficientTiles: return "InsufficientTiles";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kDataError: return "DataError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string stage)
    : std::runtime_error(format_what(code, message, stage)),
      code_(code),
      stage_(std::move(stage)),
      message_(message) {}

Error Error::with_stage(std::string stage) const {
  return Error(code_, message_, std::move(stage));
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfigError:
      return 2;
    case ErrorCode::kClientError:
    case ErrorCode::kEmptyResponse:
    case ErrorCode::kPartialBatch:
      return 3;
    default:
      return 4;
  }
}

}  // namespace synres
