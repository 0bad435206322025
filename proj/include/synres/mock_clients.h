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

#ifndef SYNRES_MOCK_CLIENTS_H_
#define SYNRES_MOCK_CLIENTS_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "synres/clients.h"
#include "synres/image.h"

namespace synres {

// Deterministic stand-ins for the model services. Every response is a pure
// function of the request, so pipeline runs are bit-reproducible.
namespace mock {

// "mock expr k of <h16>", k = 0..n-1, where h16 is the hex FNV-1a-64 of the
// compact describe request body.
std::vector<std::string> describe(std::string_view request_body, int n);

// 0xRRGGBB from the low 24 bits of FNV-1a-64(prompt bytes ++ 8 little-endian
// seed bytes).
std::uint32_t color(std::string_view prompt, std::uint64_t seed);
Image generate(std::string_view prompt, std::uint64_t seed, int width, int height);

// Quadrant bucket FNV(text) mod 4 (0 top-left, 1 top-right, 2 bottom-left,
// 3 bottom-right), inset by 10% of the quadrant on each side, shifted by
// (image_digest mod 3) - 1 pixels in x and y, clipped to the image. 0.9
// inside, 0.05 outside.
int bucket(std::string_view text);
int shift(std::uint64_t image_digest);
RasterMask segment(Size size, std::uint64_t image_digest, std::string_view text);

inline constexpr float kInside = 0.9f;
inline constexpr float kOutside = 0.05f;

}  // namespace mock

// Suite backed by the formulas above, reading and writing images in `store`.
ClientSuite make_mock_suite(std::shared_ptr<ImageStore> store);

}  // namespace synres

#endif  // SYNRES_MOCK_CLIENTS_H_
