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

#ifndef SYNRES_MOSAIC_H_
#define SYNRES_MOSAIC_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "synres/image.h"
#include "synres/manifest.h"
#include "synres/random.h"
#include "synres/superclass.h"

namespace synres {

struct MosaicConfig {
  // Grid side lengths, drawn uniformly.
  std::vector<int> grid_choices = {2, 3};
  int tile_size = 256;
  double replace_probability = 0.7;
  // Mosaics per real target.
  int rounds = 1;
};

void validate(const MosaicConfig& config);

enum class TileKind { kReal, kSynthetic };

struct TilePlacement {
  std::string source_ref;
  int row = 0;
  int col = 0;
  TileKind kind = TileKind::kSynthetic;
  // After superclass replacement; empty for a real tile without text.
  std::string expression_text;
};

struct MosaicEntry {
  std::string expression_text;
  BinaryMask mask;
  // Indices into tile_layout, ascending.
  std::vector<std::size_t> tiles;
};

struct MosaicSample {
  int grid = 0;
  int tile_size = 0;
  std::string canvas_ref;
  std::vector<MosaicEntry> samples;
  std::vector<TilePlacement> tile_layout;
};

// Stream draw order: grid choice, real tile position, synthetic tile picks
// (partial Fisher-Yates over the pool), then one superclass replacement per
// synthetic tile in row-major order. Tiles are resized (bilinear image,
// nearest-neighbour mask) to tile_size and placed at (col, row) * tile_size;
// entries with byte-identical text are merged by union. The canvas is stored
// under "mosaic/". Throws InsufficientTiles when the pool cannot fill the
// drawn grid.
MosaicSample build_mosaic(const TripletRecord& real, std::span<const TripletRecord> synthetic,
                          const MosaicConfig& config, RandomStream& stream, ImageStore& store,
                          const SuperclassTable& table = SuperclassTable::standard());

// One mosaic record per merged entry.
std::vector<TripletRecord> flatten_mosaic(const MosaicSample& sample, const std::string& target_id,
                                          int round);

struct MosaicTarget {
  // The real tile; empty expression_text places the image without a sample.
  TripletRecord real;
  std::vector<TripletRecord> pool;
};

// Mosaics for every target and round, keyed per (master seed, target, round),
// parallel across targets. Targets whose pool is too small for a drawn grid
// are skipped with a warning.
std::vector<TripletRecord> run_step3(std::span<const MosaicTarget> targets,
                                     const MosaicConfig& config, std::uint64_t master_seed,
                                     ImageStore& store, std::size_t workers = 1);

}  // namespace synres

#endif  // SYNRES_MOSAIC_H_
