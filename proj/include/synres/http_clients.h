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

#ifndef SYNRES_HTTP_CLIENTS_H_
#define SYNRES_HTTP_CLIENTS_H_

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "synres/clients.h"
#include "synres/image.h"

namespace synres {

// JSON-over-HTTP POST transport for one model endpoint. Transport failures,
// 429 and 5xx responses are retried with exponential backoff; other non-2xx
// responses fail immediately. Concurrency is capped at max_in_flight.
// SYNRES_AUTH_TOKEN, when set, overrides the configured bearer token.
class HttpEndpoint {
 public:
  HttpEndpoint(ClientEndpointConfig config, std::string stage);
  ~HttpEndpoint();

  // Throws ClientError (stage attributed) once retries are exhausted.
  nlohmann::json post(const std::string& path, const std::string& body);

  const ClientEndpointConfig& config() const { return config_; }
  int peak_in_flight() const { return limiter_.peak(); }

 private:
  ClientEndpointConfig config_;
  std::string stage_;
  std::string origin_;
  std::string path_prefix_;
  InFlightLimiter limiter_;
};

std::shared_ptr<Captioner> make_http_captioner(ClientEndpointConfig config,
                                               std::shared_ptr<ImageStore> store);
std::shared_ptr<ImageGenerator> make_http_image_generator(ClientEndpointConfig config,
                                                          std::shared_ptr<ImageStore> store);
std::shared_ptr<Segmenter> make_http_segmenter(ClientEndpointConfig config,
                                               std::shared_ptr<ImageStore> store);
// `instructions` is the classification prompt forwarded with every request.
std::shared_ptr<AttributeCounter> make_http_attribute_counter(ClientEndpointConfig config,
                                                              std::string instructions = "");

}  // namespace synres

#endif  // SYNRES_HTTP_CLIENTS_H_
