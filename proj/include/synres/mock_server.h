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

#ifndef SYNRES_MOCK_SERVER_H_
#define SYNRES_MOCK_SERVER_H_

#include <chrono>
#include <memory>
#include <optional>
#include <string>

namespace synres {

// Serves the mock model formulas over the HTTP wire protocol (/describe,
// /generate, /segment, /classify) on a loopback port. Responses are
// byte-compatible with the in-process mock suite.
class MockModelServer {
 public:
  struct Options {
    // Added before answering each request.
    std::chrono::milliseconds delay{0};
    // The first `fail_first` requests get HTTP 503.
    int fail_first = 0;
    // When set, requests without "Authorization: Bearer <token>" get 401.
    std::optional<std::string> required_token;
  };

  MockModelServer();
  explicit MockModelServer(Options options);
  ~MockModelServer();
  MockModelServer(const MockModelServer&) = delete;
  MockModelServer& operator=(const MockModelServer&) = delete;

  // "http://127.0.0.1:<port>"
  std::string url() const;
  int requests() const;
  int peak_concurrency() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace synres

#endif  // SYNRES_MOCK_SERVER_H_
