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

#include "synres/mock_clients.h"

#include <algorithm>

#include "synres/error.h"
#include "synres/hash.h"
#include "synres/types.h"

namespace synres {
namespace mock {

std::vector<std::string> describe(std::string_view request_body, int n) {
  const std::string h16 = hex64(fnv1a64(request_body));
  std::vector<std::string> out;
  for (int k = 0; k < n; ++k) out.push_back("mock expr " + std::to_string(k) + " of " + h16);
  return out;
}

std::uint32_t color(std::string_view prompt, std::uint64_t seed) {
  char seed_bytes[8];
  for (int b = 0; b < 8; ++b) seed_bytes[b] = static_cast<char>((seed >> (8 * b)) & 0xff);
  const std::uint64_t h = fnv1a64(std::string_view(seed_bytes, 8), fnv1a64(prompt));
  return static_cast<std::uint32_t>(h & 0xffffff);
}

Image generate(std::string_view prompt, std::uint64_t seed, int width, int height) {
  const std::uint32_t c = color(prompt, seed);
  return Image::solid(width, height, static_cast<std::uint8_t>(c >> 16),
                      static_cast<std::uint8_t>(c >> 8), static_cast<std::uint8_t>(c));
}

int bucket(std::string_view text) { return static_cast<int>(fnv1a64(text) % 4); }

int shift(std::uint64_t image_digest) { return static_cast<int>(image_digest % 3) - 1; }

RasterMask segment(Size size, std::uint64_t image_digest, std::string_view text) {
  const int b = bucket(text);
  const int d = shift(image_digest);
  const int qw = size.width / 2;
  const int qh = size.height / 2;
  const int ix = qw / 10;
  const int iy = qh / 10;
  const int x0 = (b % 2) * qw + ix + d;
  const int x1 = (b % 2) * qw + qw - ix + d;
  const int y0 = (b / 2) * qh + iy + d;
  const int y1 = (b / 2) * qh + qh - iy + d;
  std::vector<float> values(size.area(), kOutside);
  for (int y = std::max(0, y0); y < std::min(size.height, y1); ++y) {
    for (int x = std::max(0, x0); x < std::min(size.width, x1); ++x) {
      values[static_cast<std::size_t>(y) * size.width + x] = kInside;
    }
  }
  return RasterMask(size.width, size.height, std::move(values));
}

}  // namespace mock

namespace {

class MockCaptioner final : public Captioner {
 public:
  explicit MockCaptioner(std::shared_ptr<ImageStore> store) : store_(std::move(store)) {}
  std::vector<std::string> describe(const std::string& image_ref, const BinaryMask& mask,
                                    int n) override {
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "describe needs n >= 1");
    const std::string image = store_->encoded(image_ref);
    if (store_->dimensions(image_ref) != mask.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "mask does not match image " + image_ref);
    }
    return mock::describe(describe_request(image, mask, n).dump(), n);
  }

 private:
  std::shared_ptr<ImageStore> store_;
};

class MockImageGenerator final : public ImageGenerator {
 public:
  explicit MockImageGenerator(std::shared_ptr<ImageStore> store) : store_(std::move(store)) {}
  std::string generate(const std::string& prompt, std::uint64_t seed, int width,
                       int height) override {
    if (trim(prompt).empty()) throw Error(ErrorCode::kEmptyInput, "empty prompt");
    return store_->put(mock::generate(prompt, seed, width, height));
  }

 private:
  std::shared_ptr<ImageStore> store_;
};

class MockSegmenter final : public Segmenter {
 public:
  explicit MockSegmenter(std::shared_ptr<ImageStore> store) : store_(std::move(store)) {}
  RasterMask segment(const std::string& image_ref, const std::string& text) override {
    if (trim(text).empty()) throw Error(ErrorCode::kEmptyInput, "empty expression");
    return mock::segment(store_->dimensions(image_ref), ref_digest(image_ref), text);
  }

 private:
  std::shared_ptr<ImageStore> store_;
};

class MockAttributeCounter final : public AttributeCounter {
 public:
  AttributeMap classify(const std::string& text) override { return classify_with_lexicon(text); }
};

}  // namespace

ClientSuite make_mock_suite(std::shared_ptr<ImageStore> store) {
  ClientSuite suite;
  suite.captioner = std::make_shared<MockCaptioner>(store);
  suite.image_generator = std::make_shared<MockImageGenerator>(store);
  suite.segmenter = std::make_shared<MockSegmenter>(store);
  suite.attribute_counter = std::make_shared<MockAttributeCounter>();
  suite.request_concurrency = 1;
  return suite;
}

}  // namespace synres
