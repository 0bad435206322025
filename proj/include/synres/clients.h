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

#ifndef SYNRES_CLIENTS_H_
#define SYNRES_CLIENTS_H_

#include <condition_variable>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "synres/attributes.h"
#include "synres/image.h"
#include "synres/mask.h"

namespace synres {

struct RetryPolicy {
  int attempts = 3;
  double backoff_seconds = 0.5;
};

struct ClientEndpointConfig {
  std::string base_url;
  double timeout_seconds = 120.0;
  int max_in_flight = 4;
  RetryPolicy retry;
  std::optional<std::string> auth_token;
};

// Throws ConfigError unless base_url is set, max_in_flight >= 1 and
// attempts >= 1.
void validate(const ClientEndpointConfig& config);

// Counting gate bounding concurrent requests on one endpoint.
class InFlightLimiter {
 public:
  explicit InFlightLimiter(int max_in_flight);

  void acquire();
  void release();
  int peak() const;

  class Slot {
   public:
    explicit Slot(InFlightLimiter& limiter) : limiter_(limiter) { limiter_.acquire(); }
    ~Slot() { limiter_.release(); }
    Slot(const Slot&) = delete;
    Slot& operator=(const Slot&) = delete;

   private:
    InFlightLimiter& limiter_;
  };

 private:
  const int max_;
  int active_ = 0;
  int peak_ = 0;
  mutable std::mutex mu_;
  std::condition_variable cv_;
};

// The four model services. All calls are idempotent for fixed inputs and safe
// to issue concurrently.
class Captioner {
 public:
  virtual ~Captioner() = default;
  // Up to n distinct expressions describing the masked region.
  virtual std::vector<std::string> describe(const std::string& image_ref, const BinaryMask& mask,
                                            int n) = 0;
};

class ImageGenerator {
 public:
  virtual ~ImageGenerator() = default;
  // Stores the generated image and returns its content ref.
  virtual std::string generate(const std::string& prompt, std::uint64_t seed, int width,
                               int height) = 0;
};

class Segmenter {
 public:
  virtual ~Segmenter() = default;
  virtual RasterMask segment(const std::string& image_ref, const std::string& text) = 0;
};

class AttributeCounter {
 public:
  virtual ~AttributeCounter() = default;
  virtual AttributeMap classify(const std::string& text) = 0;
};

struct ClientSuite {
  std::shared_ptr<Captioner> captioner;
  std::shared_ptr<ImageGenerator> image_generator;
  std::shared_ptr<Segmenter> segmenter;
  std::shared_ptr<AttributeCounter> attribute_counter;
  // Requests a single batch may have outstanding at once.
  std::size_t request_concurrency = 1;
};

// Wire bodies. Objects are emitted with sorted keys and compact separators so
// the same request always has the same bytes.
nlohmann::json describe_request(std::string_view image_ppm, const BinaryMask& mask, int n);
nlohmann::json generate_request(const std::string& prompt, std::uint64_t seed, int width,
                                int height);
nlohmann::json segment_request(std::string_view image_ppm, const std::string& text);
// `instructions` (the classification prompt asset) is sent only when set.
nlohmann::json classify_request(const std::string& text, const std::string& instructions = "");

nlohmann::json raster_to_wire(const RasterMask& raster);
// Throws DataError on malformed payloads.
RasterMask raster_from_wire(const nlohmann::json& j);
nlohmann::json attributes_to_wire(const AttributeMap& attributes);
AttributeMap attributes_from_wire(const nlohmann::json& j);

// Drops repeats, keeping first occurrences in order.
std::vector<std::string> dedupe_texts(std::vector<std::string> texts);

}  // namespace synres

#endif  // SYNRES_CLIENTS_H_
