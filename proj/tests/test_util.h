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

// Random instance generators shared by the unit and acceptance tests.

#ifndef SYNRES_TESTS_TEST_UTIL_H_
#define SYNRES_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oracles.h"
#include "synres/manifest.h"
#include "synres/types.h"

namespace synres::testing {

// A batch whose expressions each follow one of a few prototype rectangles,
// jittered per image, so clusters of every size occur. Roughly one
// expression in ten is faint (below 0.5 everywhere).
inline SyntheticBatch random_batch(std::mt19937_64& rng, std::size_t n, std::size_t m, int w = 16,
                                   int h = 16, const std::string& target_id = "t") {
  std::uniform_int_distribution<int> coord(0, w - 1);
  std::uniform_int_distribution<int> jitter(-2, 2);
  std::uniform_real_distribution<float> hi(0.5f, 1.0f);
  std::uniform_real_distribution<float> lo(0.0f, 0.49f);
  const int prototypes = 1 + static_cast<int>(rng() % 3);
  struct Rect {
    int x0, y0, x1, y1;
  };
  std::vector<Rect> protos;
  for (int p = 0; p < prototypes; ++p) {
    int a = coord(rng), b = coord(rng), c = coord(rng), d = coord(rng);
    protos.push_back({std::min(a, b), std::min(c, d), std::max(a, b) + 1, std::max(c, d) + 1});
  }
  SyntheticBatch batch;
  batch.target_id = target_id;
  batch.prompt = "p";
  std::vector<int> choice(n);
  std::vector<bool> faint(n);
  for (std::size_t j = 0; j < n; ++j) {
    choice[j] = static_cast<int>(rng() % prototypes);
    faint[j] = rng() % 10 == 0;
    batch.expressions.push_back(make_expression(target_id + "/e" + std::to_string(j),
                                                "expr " + std::to_string(j), target_id,
                                                Provenance::kSynthetic));
  }
  for (std::size_t i = 0; i < m; ++i) {
    batch.images.push_back({"img" + std::to_string(i) + ".ppm", i});
    std::vector<RasterMask> row;
    for (std::size_t j = 0; j < n; ++j) {
      const Rect& r = protos[choice[j]];
      std::vector<float> v(static_cast<std::size_t>(w) * h);
      const int dx = jitter(rng), dy = jitter(rng);
      for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
          const bool in = x >= r.x0 + dx && x < r.x1 + dx && y >= r.y0 + dy && y < r.y1 + dy;
          v[static_cast<std::size_t>(y) * w + x] = in && !faint[j] ? hi(rng) : lo(rng);
        }
      }
      row.emplace_back(w, h, std::move(v));
    }
    batch.pseudo_masks.push_back(std::move(row));
  }
  return batch;
}

inline std::vector<std::vector<oracle::Bits>> threshold_grid(const SyntheticBatch& batch,
                                                             double thr) {
  std::vector<std::vector<oracle::Bits>> out;
  for (const auto& row : batch.pseudo_masks) {
    std::vector<oracle::Bits> r;
    for (const auto& m : row) r.push_back(oracle::threshold(m, thr));
    out.push_back(std::move(r));
  }
  return out;
}

// One published benchmark row: (type, domain, split, attribute) with its
// image and expression counts.
struct BenchmarkRow {
  std::string type, domain, split, attribute;
  int images, expressions;
};

inline const std::vector<BenchmarkRow>& published_benchmark_rows() {
  static const std::vector<BenchmarkRow> rows = {
      {"WildRES-ID", "MSCOCO", "val", "Many Attribute", 100, 138},
      {"WildRES-ID", "MSCOCO", "val", "Shared Attribute", 104, 127},
      {"WildRES-ID", "MSCOCO", "test", "Many Attribute", 108, 133},
      {"WildRES-ID", "MSCOCO", "test", "Shared Attribute", 115, 124},
      {"WildRES-DS", "CrowdHuman", "test", "Many Attribute", 101, 212},
      {"WildRES-DS", "Cityscapes", "test", "Shared Attribute", 105, 120},
      {"WildRES-DS", "Armbench", "test", "Shared Attribute", 107, 120},
  };
  return rows;
}

// A benchmark JSONL whose rows have the published cardinalities. Within each
// WildRES-ID split the Many and Shared rows share `overlap` images, so the
// split totals are 196 and 215 distinct images.
inline std::string fabricate_benchmark_jsonl(int overlap = 8) {
  std::string out;
  int image_base = 0;
  std::string prev_split;
  int prev_start = 0, prev_count = 0;
  for (const auto& row : published_benchmark_rows()) {
    const std::string split_key = row.type + "/" + row.split;
    int start;
    if (row.type == "WildRES-ID" && split_key == prev_split) {
      start = prev_start + prev_count - overlap;
    } else {
      start = image_base;
    }
    for (int e = 0; e < row.expressions; ++e) {
      const int image = start + e % row.images;
      nlohmann::ordered_json j;
      j["image_ref"] = "img" + std::to_string(image) + ".jpg";
      j["expression"] = row.attribute + " expression " + std::to_string(image_base) + "-" +
                        std::to_string(e);
      j["type"] = row.type;
      j["domain"] = row.domain;
      j["split"] = row.split;
      j["attribute"] = row.attribute;
      out += j.dump() + "\n";
    }
    image_base = std::max(image_base, start + row.images);
    prev_split = split_key;
    prev_start = start;
    prev_count = row.images;
  }
  return out;
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    if (end > start) out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

inline std::filesystem::path scratch(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("synres_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace synres::testing

#endif  // SYNRES_TESTS_TEST_UTIL_H_
