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

#ifndef SYNRES_ERROR_H_
#define SYNRES_ERROR_H_

#include <stdexcept>
#include <string>

namespace synres {

enum class ErrorCode {
  kInvalidArgument,
  kSizeMismatch,
  kMalformedRle,
  kDimensionMismatch,
  kEmptyInput,
  kClientError,
  kEmptyResponse,
  kPartialBatch,
  kInsufficientTiles,
  kConfigError,
  kIoError,
  kDataError,
};

const char* error_code_name(ErrorCode code);

// Single exception type for the library. `stage` names the pipeline stage or
// client endpoint that failed, when known.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string stage = {});

  ErrorCode code() const { return code_; }
  const std::string& stage() const { return stage_; }
  const std::string& message() const { return message_; }

  Error with_stage(std::string stage) const;

 private:
  ErrorCode code_;
  std::string stage_;
  std::string message_;
};

// Process exit code for the CLI: 2 config, 3 client, 4 data.
int exit_code_for(ErrorCode code);

}  // namespace synres

#endif  // SYNRES_ERROR_H_
