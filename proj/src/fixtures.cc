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

#include "synres/fixtures.h"

#include <array>
#include <fstream>

#include <nlohmann/json.hpp>

#include "synres/error.h"
#include "synres/image.h"
#include "synres/random.h"
#include "synres/rle.h"

namespace synres {
namespace {

constexpr std::array<const char*, 6> kSubjects = {"boy", "woman", "dog", "man", "girl", "cat"};
constexpr std::array<const char*, 5> kColors = {"red", "blue", "green", "white", "black"};
constexpr std::array<const char*, 5> kTails = {"holding his bag", "next to the bench",
                                               "sitting on the left", "with her phone",
                                               "in the center"};

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

}  // namespace

std::filesystem::path fabricate_targets(const std::filesystem::path& dir, int count, Size size,
                                        std::uint64_t seed) {
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "fixture count must be >= 1");
  if (size.width < 4 || size.height < 4) {
    throw Error(ErrorCode::kInvalidArgument, "fixture images must be at least 4x4");
  }
  std::filesystem::create_directories(dir / "images");
  std::string lines;
  for (int k = 0; k < count; ++k) {
    const std::string tid = "t" + std::to_string(k);
    CounterStream rng(seed, tid, "fixture", 0);
    const auto pick = [&rng](int lo, int hi) {
      return lo + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(hi - lo + 1)));
    };
    const int w = pick(2, size.width / 2);
    const int h = pick(2, size.height / 2);
    const int x0 = pick(0, size.width - w);
    const int y0 = pick(0, size.height - h);
    const std::uint8_t tint = static_cast<std::uint8_t>(rng.uniform_index(256));

    Image image(size.width, size.height);
    BinaryMask mask(size.width, size.height);
    for (int y = 0; y < size.height; ++y) {
      for (int x = 0; x < size.width; ++x) {
        std::uint8_t* px = image.pixel(x, y);
        const bool inside = x >= x0 && x < x0 + w && y >= y0 && y < y0 + h;
        if (inside) {
          mask.set(x, y);
          px[0] = 230;
          px[1] = tint;
          px[2] = 40;
        } else {
          px[0] = static_cast<std::uint8_t>(x * 255 / size.width);
          px[1] = static_cast<std::uint8_t>(y * 255 / size.height);
          px[2] = tint;
        }
      }
    }
    const std::string rel = "images/" + tid + ".ppm";
    write_file(dir / rel, encode_ppm(image));

    nlohmann::ordered_json j;
    j["target_id"] = tid;
    j["image"] = rel;
    j["mask"] = rle_to_json(to_rle(mask));
    if (k % 3 != 2) {
      j["expression"] = std::string("the ") + kColors[rng.uniform_index(kColors.size())] + " " +
                        kSubjects[rng.uniform_index(kSubjects.size())] + " " +
                        kTails[rng.uniform_index(kTails.size())];
    }
    lines += j.dump() + "\n";
  }
  const auto path = dir / "targets.jsonl";
  write_file(path, lines);
  return path;
}

}  // namespace synres
