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

#ifndef SYNRES_BASE64_H_
#define SYNRES_BASE64_H_

#include <string>
#include <string_view>

namespace synres {

// Standard alphabet with padding.
std::string base64_encode(std::string_view bytes);
// Throws DataError on invalid input.
std::string base64_decode(std::string_view text);

}  // namespace synres

#endif  // SYNRES_BASE64_H_
