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

#include "synres/http_clients.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include <httplib.h>

#include "synres/base64.h"
#include "synres/error.h"
#include "synres/types.h"

namespace synres {
namespace {

bool retryable_status(int status) { return status == 429 || status >= 500; }

void split_url(const std::string& url, std::string& origin, std::string& prefix) {
  const std::size_t scheme = url.find("://");
  const std::size_t host_start = scheme == std::string::npos ? 0 : scheme + 3;
  const std::size_t slash = url.find('/', host_start);
  if (slash == std::string::npos) {
    origin = url;
    prefix.clear();
  } else {
    origin = url.substr(0, slash);
    prefix = url.substr(slash);
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  }
}

class HttpCaptioner final : public Captioner {
 public:
  HttpCaptioner(ClientEndpointConfig config, std::shared_ptr<ImageStore> store)
      : endpoint_(std::move(config), "captioner"), store_(std::move(store)) {}

  std::vector<std::string> describe(const std::string& image_ref, const BinaryMask& mask,
                                    int n) override {
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "describe needs n >= 1");
    if (store_->dimensions(image_ref) != mask.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "mask does not match image " + image_ref);
    }
    const auto response =
        endpoint_.post("/describe", describe_request(store_->encoded(image_ref), mask, n).dump());
    std::vector<std::string> texts;
    try {
      texts = response.at("expressions").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kClientError, std::string("malformed describe response: ") + e.what(),
                  "captioner");
    }
    std::vector<std::string> kept;
    for (auto& t : dedupe_texts(std::move(texts))) {
      if (!trim(t).empty()) kept.push_back(std::move(t));
    }
    if (kept.empty()) throw Error(ErrorCode::kEmptyResponse, "captioner returned no expressions", "captioner");
    if (kept.size() > static_cast<std::size_t>(n)) kept.resize(static_cast<std::size_t>(n));
    return kept;
  }

 private:
  HttpEndpoint endpoint_;
  std::shared_ptr<ImageStore> store_;
};

class HttpImageGenerator final : public ImageGenerator {
 public:
  HttpImageGenerator(ClientEndpointConfig config, std::shared_ptr<ImageStore> store)
      : endpoint_(std::move(config), "image_generator"), store_(std::move(store)) {}

  std::string generate(const std::string& prompt, std::uint64_t seed, int width,
                       int height) override {
    if (trim(prompt).empty()) throw Error(ErrorCode::kEmptyInput, "empty prompt");
    const auto response =
        endpoint_.post("/generate", generate_request(prompt, seed, width, height).dump());
    try {
      std::string bytes = base64_decode(response.at("image_b64").get<std::string>());
      const Image image = decode_ppm(bytes);
      if (image.width != width || image.height != height) {
        throw Error(ErrorCode::kDataError, "generated image has wrong dimensions");
      }
      return store_->put_encoded(std::move(bytes));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kClientError, std::string("malformed generate response: ") + e.what(),
                  "image_generator");
    } catch (const Error& e) {
      throw Error(ErrorCode::kClientError, e.message(), "image_generator");
    }
  }

 private:
  HttpEndpoint endpoint_;
  std::shared_ptr<ImageStore> store_;
};

class HttpSegmenter final : public Segmenter {
 public:
  HttpSegmenter(ClientEndpointConfig config, std::shared_ptr<ImageStore> store)
      : endpoint_(std::move(config), "segmenter"), store_(std::move(store)) {}

  RasterMask segment(const std::string& image_ref, const std::string& text) override {
    if (trim(text).empty()) throw Error(ErrorCode::kEmptyInput, "empty expression");
    const auto response =
        endpoint_.post("/segment", segment_request(store_->encoded(image_ref), text).dump());
    try {
      RasterMask raster = raster_from_wire(response);
      if (raster.size() != store_->dimensions(image_ref)) {
        throw Error(ErrorCode::kDataError, "raster does not match image dimensions");
      }
      return raster;
    } catch (const Error& e) {
      throw Error(ErrorCode::kClientError, e.message(), "segmenter");
    }
  }

 private:
  HttpEndpoint endpoint_;
  std::shared_ptr<ImageStore> store_;
};

class HttpAttributeCounter final : public AttributeCounter {
 public:
  HttpAttributeCounter(ClientEndpointConfig config, std::string instructions)
      : endpoint_(std::move(config), "attribute_counter"), instructions_(std::move(instructions)) {}

  AttributeMap classify(const std::string& text) override {
    if (trim(text).empty()) throw Error(ErrorCode::kEmptyInput, "cannot classify empty expression");
    const auto response = endpoint_.post("/classify", classify_request(text, instructions_).dump());
    try {
      return attributes_from_wire(response);
    } catch (const Error& e) {
      throw Error(ErrorCode::kClientError, e.message(), "attribute_counter");
    }
  }

 private:
  HttpEndpoint endpoint_;
  std::string instructions_;
};

}  // namespace

HttpEndpoint::HttpEndpoint(ClientEndpointConfig config, std::string stage)
    : config_(std::move(config)), stage_(std::move(stage)), limiter_(config_.max_in_flight) {
  validate(config_);
  if (const char* token = std::getenv("SYNRES_AUTH_TOKEN"); token != nullptr && *token != '\0') {
    config_.auth_token = token;
  }
  split_url(config_.base_url, origin_, path_prefix_);
}

HttpEndpoint::~HttpEndpoint() = default;

nlohmann::json HttpEndpoint::post(const std::string& path, const std::string& body) {
  InFlightLimiter::Slot slot(limiter_);
  const auto timeout = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::duration<double>(config_.timeout_seconds));
  std::string last_error;
  for (int attempt = 1; attempt <= config_.retry.attempts; ++attempt) {
    if (attempt > 1) {
      const double delay = config_.retry.backoff_seconds * std::pow(2.0, attempt - 2);
      std::this_thread::sleep_for(std::chrono::duration<double>(delay));
    }
    httplib::Client client(origin_);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    httplib::Headers headers;
    if (config_.auth_token) headers.emplace("Authorization", "Bearer " + *config_.auth_token);
    const auto result = client.Post(path_prefix_ + path, headers, body, "application/json");
    if (!result) {
      last_error = "transport error: " + httplib::to_string(result.error());
      continue;
    }
    if (result->status >= 200 && result->status < 300) {
      try {
        return nlohmann::json::parse(result->body);
      } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::kClientError, std::string("response is not JSON: ") + e.what(),
                    stage_);
      }
    }
    last_error = "HTTP " + std::to_string(result->status) + ": " + result->body.substr(0, 200);
    if (!retryable_status(result->status)) break;
  }
  throw Error(ErrorCode::kClientError,
              config_.base_url + path + " failed after retries: " + last_error, stage_);
}

std::shared_ptr<Captioner> make_http_captioner(ClientEndpointConfig config,
                                               std::shared_ptr<ImageStore> store) {
  return std::make_shared<HttpCaptioner>(std::move(config), std::move(store));
}

std::shared_ptr<ImageGenerator> make_http_image_generator(ClientEndpointConfig config,
                                                          std::shared_ptr<ImageStore> store) {
  return std::make_shared<HttpImageGenerator>(std::move(config), std::move(store));
}

std::shared_ptr<Segmenter> make_http_segmenter(ClientEndpointConfig config,
                                               std::shared_ptr<ImageStore> store) {
  return std::make_shared<HttpSegmenter>(std::move(config), std::move(store));
}

std::shared_ptr<AttributeCounter> make_http_attribute_counter(ClientEndpointConfig config,
                                                              std::string instructions) {
  return std::make_shared<HttpAttributeCounter>(std::move(config), std::move(instructions));
}

}  // namespace synres
