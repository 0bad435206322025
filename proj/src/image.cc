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

#include "synres/image.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "synres/error.h"
#include "synres/hash.h"

namespace synres {
namespace fs = std::filesystem;

namespace {

// Larger files (mosaic canvases) are re-read from disk instead of cached.
constexpr std::size_t kCacheableBytes = 256 * 1024;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Skips whitespace and '#' comments, then parses a decimal integer.
int read_header_int(std::string_view bytes, std::size_t& pos) {
  for (;;) {
    while (pos < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
    if (pos < bytes.size() && bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      continue;
    }
    break;
  }
  int value = 0;
  const auto [ptr, ec] = std::from_chars(bytes.data() + pos, bytes.data() + bytes.size(), value);
  if (ec != std::errc() || ptr == bytes.data() + pos) {
    throw Error(ErrorCode::kDataError, "malformed PPM header");
  }
  pos = static_cast<std::size_t>(ptr - bytes.data());
  return value;
}

}  // namespace

Image::Image(int w, int h) : width(w), height(h) {
  if (w <= 0 || h <= 0) throw Error(ErrorCode::kInvalidArgument, "image dimensions must be positive");
  rgb.assign(static_cast<std::size_t>(w) * h * 3, 0);
}

Image Image::solid(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  Image img(w, h);
  for (std::size_t i = 0; i < img.rgb.size(); i += 3) {
    img.rgb[i] = r;
    img.rgb[i + 1] = g;
    img.rgb[i + 2] = b;
  }
  return img;
}

std::string encode_ppm(const Image& image) {
  std::string out = "P6\n" + std::to_string(image.width) + " " +
                    std::to_string(image.height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(image.rgb.data()), image.rgb.size());
  return out;
}

Image decode_ppm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
    throw Error(ErrorCode::kDataError, "not a binary PPM (P6) image");
  }
  std::size_t pos = 2;
  const int w = read_header_int(bytes, pos);
  const int h = read_header_int(bytes, pos);
  const int maxval = read_header_int(bytes, pos);
  if (w <= 0 || h <= 0 || maxval != 255) {
    throw Error(ErrorCode::kDataError, "unsupported PPM geometry or depth");
  }
  if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
    throw Error(ErrorCode::kDataError, "malformed PPM header");
  }
  ++pos;
  Image img(w, h);
  if (bytes.size() - pos != img.rgb.size()) {
    throw Error(ErrorCode::kDataError, "PPM pixel payload has wrong length");
  }
  std::copy(bytes.begin() + static_cast<std::ptrdiff_t>(pos), bytes.end(), img.rgb.begin());
  return img;
}

std::string content_ref(std::string_view encoded, std::string_view subdir) {
  std::string ref;
  if (!subdir.empty()) {
    ref.append(subdir);
    ref.push_back('/');
  }
  ref += hex64(fnv1a64(encoded));
  ref += ".ppm";
  return ref;
}

std::uint64_t ref_digest(std::string_view ref) {
  const std::size_t slash = ref.rfind('/');
  if (slash != std::string_view::npos) ref.remove_prefix(slash + 1);
  if (ref.size() < 16) throw Error(ErrorCode::kDataError, "not a content ref: " + std::string(ref));
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(ref.data(), ref.data() + 16, value, 16);
  if (ec != std::errc() || ptr != ref.data() + 16) {
    throw Error(ErrorCode::kDataError, "not a content ref: " + std::string(ref));
  }
  return value;
}

Image resize_bilinear(const Image& src, int width, int height) {
  Image dst(width, height);
  const double sx = static_cast<double>(src.width) / width;
  const double sy = static_cast<double>(src.height) / height;
  for (int y = 0; y < height; ++y) {
    const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, src.height - 1.0);
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, src.height - 1);
    const double wy = fy - y0;
    for (int x = 0; x < width; ++x) {
      const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, src.width - 1.0);
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, src.width - 1);
      const double wx = fx - x0;
      const std::uint8_t* p00 = src.pixel(x0, y0);
      const std::uint8_t* p01 = src.pixel(x1, y0);
      const std::uint8_t* p10 = src.pixel(x0, y1);
      const std::uint8_t* p11 = src.pixel(x1, y1);
      std::uint8_t* out = dst.pixel(x, y);
      for (int c = 0; c < 3; ++c) {
        const double top = p00[c] + (p01[c] - p00[c]) * wx;
        const double bottom = p10[c] + (p11[c] - p10[c]) * wx;
        out[c] = static_cast<std::uint8_t>(std::lround(top + (bottom - top) * wy));
      }
    }
  }
  return dst;
}

BinaryMask resize_nearest(const BinaryMask& src, int width, int height) {
  BinaryMask dst(width, height);
  const auto sw = static_cast<std::int64_t>(src.width());
  const auto sh = static_cast<std::int64_t>(src.height());
  for (int y = 0; y < height; ++y) {
    // Source index of the destination pixel centre: floor((y + 0.5) * sh / h).
    const int src_y = static_cast<int>(((2 * static_cast<std::int64_t>(y) + 1) * sh) / (2 * height));
    for (int x = 0; x < width; ++x) {
      const int src_x = static_cast<int>(((2 * static_cast<std::int64_t>(x) + 1) * sw) / (2 * width));
      if (src.at(src_x, src_y)) dst.set(x, y);
    }
  }
  return dst;
}

ImageStore::ImageStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + root_.string() + ": " + ec.message());
}

fs::path ImageStore::path_for(std::string_view ref) const {
  if (ref.empty() || ref.find("..") != std::string_view::npos || ref.front() == '/') {
    throw Error(ErrorCode::kDataError, "invalid image ref: " + std::string(ref));
  }
  return root_ / fs::path(std::string(ref));
}

std::string ImageStore::put(const Image& image, std::string_view subdir) {
  return put_encoded(encode_ppm(image), subdir);
}

std::string ImageStore::put_encoded(std::string bytes, std::string_view subdir) {
  std::string ref = content_ref(bytes, subdir);
  const fs::path path = path_for(ref);
  std::lock_guard lock(mu_);
  if (cache_.find(ref) != cache_.end()) return ref;
  std::error_code ec;
  // Same ref means same bytes, so an existing file is left alone.
  if (!fs::exists(path, ec)) {
    fs::create_directories(path.parent_path(), ec);
    const fs::path tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
      if (!out) throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
    }
    fs::rename(tmp, path, ec);
    if (ec) throw Error(ErrorCode::kIoError, "cannot rename into " + path.string());
  }
  if (bytes.size() <= kCacheableBytes) {
    cache_.emplace(ref, std::make_shared<const std::string>(std::move(bytes)));
  }
  return ref;
}

std::string ImageStore::import_file(const fs::path& path) {
  std::string bytes = read_file(path);
  decode_ppm(bytes);  // validate before admitting
  return put_encoded(std::move(bytes));
}

bool ImageStore::contains(std::string_view ref) const {
  {
    std::lock_guard lock(mu_);
    if (cache_.find(ref) != cache_.end()) return true;
  }
  std::error_code ec;
  return fs::exists(path_for(ref), ec);
}

std::string ImageStore::encoded(std::string_view ref) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(ref); it != cache_.end()) return *it->second;
  }
  std::string bytes = read_file(path_for(ref));
  if (bytes.size() <= kCacheableBytes) {
    std::lock_guard lock(mu_);
    cache_.emplace(std::string(ref), std::make_shared<const std::string>(bytes));
  }
  return bytes;
}

Image ImageStore::load(std::string_view ref) const { return decode_ppm(encoded(ref)); }

Size ImageStore::dimensions(std::string_view ref) const {
  const std::string bytes = encoded(ref);
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
    throw Error(ErrorCode::kDataError, "not a binary PPM (P6) image");
  }
  std::size_t pos = 2;
  const int w = read_header_int(bytes, pos);
  const int h = read_header_int(bytes, pos);
  return {w, h};
}

}  // namespace synres
