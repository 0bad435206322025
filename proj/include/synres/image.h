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

#ifndef SYNRES_IMAGE_H_
#define SYNRES_IMAGE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "synres/mask.h"

namespace synres {

// 8-bit interleaved RGB raster.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;

  Image() = default;
  Image(int w, int h);
  static Image solid(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b);

  Size size() const { return {width, height}; }
  std::uint8_t* pixel(int x, int y) {
    return rgb.data() + (static_cast<std::size_t>(y) * width + x) * 3;
  }
  const std::uint8_t* pixel(int x, int y) const {
    return rgb.data() + (static_cast<std::size_t>(y) * width + x) * 3;
  }

  friend bool operator==(const Image&, const Image&) = default;
};

// Binary PPM (P6, maxval 255). Lossless, trivially portable.
std::string encode_ppm(const Image& image);
// Throws DataError on anything that is not a well-formed 8-bit P6 file.
Image decode_ppm(std::string_view bytes);

// Content address of an encoded image: FNV-1a-64 hex of the bytes plus the
// ".ppm" extension, optionally under a subdirectory ("mosaic/").
std::string content_ref(std::string_view encoded, std::string_view subdir = {});
// Numeric digest embedded in a ref ("mosaic/0123abcd....ppm" -> 0x0123abcd...).
std::uint64_t ref_digest(std::string_view ref);

Image resize_bilinear(const Image& src, int width, int height);
BinaryMask resize_nearest(const BinaryMask& src, int width, int height);

// Content-addressed image directory. Files are written once and never
// modified; readers share a small in-memory cache. Thread-safe.
class ImageStore {
 public:
  explicit ImageStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  std::string put(const Image& image, std::string_view subdir = {});
  std::string put_encoded(std::string bytes, std::string_view subdir = {});
  // Copies an existing PPM file into the store.
  std::string import_file(const std::filesystem::path& path);

  bool contains(std::string_view ref) const;
  Image load(std::string_view ref) const;
  std::string encoded(std::string_view ref) const;
  Size dimensions(std::string_view ref) const;
  std::filesystem::path path_for(std::string_view ref) const;

 private:
  std::filesystem::path root_;
  mutable std::mutex mu_;
  mutable std::map<std::string, std::shared_ptr<const std::string>, std::less<>> cache_;
};

}  // namespace synres

#endif  // SYNRES_IMAGE_H_
