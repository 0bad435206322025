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

#include "synres/clients.h"

#include <bit>
#include <cstring>
#include <set>

#include "synres/base64.h"
#include "synres/error.h"
#include "synres/rle.h"

namespace synres {

void validate(const ClientEndpointConfig& config) {
  if (config.base_url.empty()) throw Error(ErrorCode::kConfigError, "client base_url is empty");
  if (config.max_in_flight < 1) throw Error(ErrorCode::kConfigError, "max_in_flight must be >= 1");
  if (config.retry.attempts < 1) throw Error(ErrorCode::kConfigError, "retry.attempts must be >= 1");
  if (!(config.timeout_seconds > 0.0)) throw Error(ErrorCode::kConfigError, "timeout must be positive");
  if (config.retry.backoff_seconds < 0.0) {
    throw Error(ErrorCode::kConfigError, "retry.backoff must be non-negative");
  }
}

InFlightLimiter::InFlightLimiter(int max_in_flight) : max_(max_in_flight) {
  if (max_in_flight < 1) throw Error(ErrorCode::kConfigError, "max_in_flight must be >= 1");
}

void InFlightLimiter::acquire() {
  std::unique_lock lock(mu_);
  cv_.wait(lock, [this] { return active_ < max_; });
  ++active_;
  peak_ = std::max(peak_, active_);
}

void InFlightLimiter::release() {
  {
    std::lock_guard lock(mu_);
    --active_;
  }
  cv_.notify_one();
}

int InFlightLimiter::peak() const {
  std::lock_guard lock(mu_);
  return peak_;
}

nlohmann::json describe_request(std::string_view image_ppm, const BinaryMask& mask, int n) {
  nlohmann::json mask_json = nlohmann::json::parse(rle_to_json(to_rle(mask)).dump());
  return {{"image_b64", base64_encode(image_ppm)}, {"mask_rle", std::move(mask_json)}, {"n", n}};
}

nlohmann::json generate_request(const std::string& prompt, std::uint64_t seed, int width,
                                int height) {
  return {{"prompt", prompt}, {"seed", seed}, {"w", width}, {"h", height}};
}

nlohmann::json segment_request(std::string_view image_ppm, const std::string& text) {
  return {{"image_b64", base64_encode(image_ppm)}, {"text", text}};
}

nlohmann::json classify_request(const std::string& text, const std::string& instructions) {
  nlohmann::json j = {{"text", text}};
  if (!instructions.empty()) j["instructions"] = instructions;
  return j;
}

nlohmann::json raster_to_wire(const RasterMask& raster) {
  std::string bytes(raster.pixel_count() * 4, '\0');
  for (std::size_t i = 0; i < raster.pixel_count(); ++i) {
    std::uint32_t word = std::bit_cast<std::uint32_t>(raster.values()[i]);
    for (int b = 0; b < 4; ++b) bytes[i * 4 + b] = static_cast<char>((word >> (8 * b)) & 0xff);
  }
  return {{"raster", {{"w", raster.width()}, {"h", raster.height()},
                      {"values_b64", base64_encode(bytes)}}}};
}

RasterMask raster_from_wire(const nlohmann::json& j) {
  try {
    const auto& r = j.at("raster");
    const int w = r.at("w").get<int>();
    const int h = r.at("h").get<int>();
    const std::string bytes = base64_decode(r.at("values_b64").get<std::string>());
    if (w <= 0 || h <= 0 ||
        bytes.size() != static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 4) {
      throw Error(ErrorCode::kDataError, "raster payload size does not match w*h");
    }
    std::vector<float> values(bytes.size() / 4);
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::uint32_t word = 0;
      for (int b = 0; b < 4; ++b) {
        word |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[i * 4 + b])) << (8 * b);
      }
      values[i] = std::bit_cast<float>(word);
    }
    return RasterMask(w, h, std::move(values));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kDataError, std::string("malformed raster response: ") + e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::kDataError, "malformed raster response: " + e.message());
  }
}

nlohmann::json attributes_to_wire(const AttributeMap& attributes) {
  nlohmann::json inner = nlohmann::json::object();
  for (AttributeKind k : kAllAttributeKinds) {
    const auto it = attributes.find(k);
    inner[attribute_code(k)] =
        it == attributes.end() ? std::vector<std::string>{} : it->second;
  }
  return {{"attributes", std::move(inner)}};
}

AttributeMap attributes_from_wire(const nlohmann::json& j) {
  AttributeMap out = empty_attribute_map();
  try {
    for (const auto& [key, words] : j.at("attributes").items()) {
      const auto kind = parse_attribute_code(key);
      if (!kind) throw Error(ErrorCode::kDataError, "unknown attribute category " + key);
      out[*kind] = words.get<std::vector<std::string>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kDataError, std::string("malformed classify response: ") + e.what());
  }
  return out;
}

std::vector<std::string> dedupe_texts(std::vector<std::string> texts) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  for (auto& t : texts) {
    if (seen.insert(t).second) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace synres
