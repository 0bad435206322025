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

#include "synres/mosaic.h"

#include <algorithm>
#include <map>
#include <numeric>

#include <spdlog/spdlog.h>

#include "synres/error.h"
#include "synres/parallel.h"

namespace synres {
namespace {

struct Tile {
  const TripletRecord* record;
  TileKind kind;
};

void paste(Image& canvas, const Image& tile, int x0, int y0) {
  for (int y = 0; y < tile.height; ++y) {
    std::copy_n(tile.pixel(0, y), static_cast<std::size_t>(tile.width) * 3, canvas.pixel(x0, y0 + y));
  }
}

BinaryMask translate(const BinaryMask& tile, int canvas_side, int x0, int y0) {
  BinaryMask out(canvas_side, canvas_side);
  for (int y = 0; y < tile.height(); ++y) {
    for (int x = 0; x < tile.width(); ++x) {
      if (tile.at(x, y)) out.set(x0 + x, y0 + y);
    }
  }
  return out;
}

}  // namespace

void validate(const MosaicConfig& config) {
  if (config.grid_choices.empty()) throw Error(ErrorCode::kConfigError, "mosaic.grid_choices is empty");
  for (int g : config.grid_choices) {
    if (g < 1) throw Error(ErrorCode::kConfigError, "mosaic grid sizes must be positive");
  }
  if (config.tile_size <= 0) throw Error(ErrorCode::kConfigError, "mosaic.tile_size must be positive");
  if (!(config.replace_probability >= 0.0 && config.replace_probability <= 1.0)) {
    throw Error(ErrorCode::kConfigError, "mosaic.replace_probability must lie in [0, 1]");
  }
  if (config.rounds < 0) throw Error(ErrorCode::kConfigError, "mosaic.rounds must be non-negative");
}

MosaicSample build_mosaic(const TripletRecord& real, std::span<const TripletRecord> synthetic,
                          const MosaicConfig& config, RandomStream& stream, ImageStore& store,
                          const SuperclassTable& table) {
  validate(config);
  const int grid = config.grid_choices[stream.uniform_index(config.grid_choices.size())];
  const auto cells = static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid);
  const std::size_t needed = cells - 1;
  if (synthetic.size() < needed) {
    throw Error(ErrorCode::kInsufficientTiles,
                std::to_string(grid) + "x" + std::to_string(grid) + " mosaic needs " +
                    std::to_string(needed) + " synthetic tiles, pool has " +
                    std::to_string(synthetic.size()));
  }
  const std::size_t real_cell = stream.uniform_index(cells);

  std::vector<std::size_t> order(synthetic.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t k = 0; k < needed; ++k) {
    const std::size_t pick = k + stream.uniform_index(order.size() - k);
    std::swap(order[k], order[pick]);
  }

  std::vector<Tile> tiles(cells);
  for (std::size_t cell = 0, next = 0; cell < cells; ++cell) {
    tiles[cell] = cell == real_cell ? Tile{&real, TileKind::kReal}
                                    : Tile{&synthetic[order[next++]], TileKind::kSynthetic};
  }

  const int ts = config.tile_size;
  const int side = grid * ts;
  MosaicSample sample;
  sample.grid = grid;
  sample.tile_size = ts;
  Image canvas(side, side);

  std::map<std::string, std::size_t> entry_by_text;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    const Tile& tile = tiles[cell];
    const int row = static_cast<int>(cell) / grid;
    const int col = static_cast<int>(cell) % grid;
    const int x0 = col * ts;
    const int y0 = row * ts;

    const Image source = store.load(tile.record->image_ref);
    if (source.size() != tile.record->mask.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "tile mask does not match image " + tile.record->image_ref);
    }
    paste(canvas, resize_bilinear(source, ts, ts), x0, y0);

    TilePlacement placement{tile.record->image_ref, row, col, tile.kind, tile.record->expression_text};
    if (tile.kind == TileKind::kSynthetic) {
      placement.expression_text =
          superclass_replace(tile.record->expression_text, table, config.replace_probability, stream);
    }
    sample.tile_layout.push_back(placement);
    if (placement.expression_text.empty()) continue;

    const BinaryMask placed = translate(resize_nearest(tile.record->mask, ts, ts), side, x0, y0);
    const auto [it, inserted] = entry_by_text.try_emplace(placement.expression_text, sample.samples.size());
    if (inserted) {
      sample.samples.push_back(MosaicEntry{placement.expression_text, placed, {cell}});
    } else {
      MosaicEntry& entry = sample.samples[it->second];
      entry.mask |= placed;
      entry.tiles.push_back(cell);
    }
  }
  sample.canvas_ref = store.put(canvas, "mosaic");
  return sample;
}

std::vector<TripletRecord> flatten_mosaic(const MosaicSample& sample, const std::string& target_id,
                                          int round) {
  std::vector<TripletRecord> out;
  for (const auto& entry : sample.samples) {
    TripletRecord r{sample.canvas_ref, entry.expression_text, entry.mask, RecordSource::kMosaic, {}};
    r.lineage.target_id = target_id;
    r.lineage.group_id = "mosaic/r" + std::to_string(round);
    for (std::size_t t : entry.tiles) r.lineage.tiles.push_back(sample.tile_layout[t].source_ref);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<TripletRecord> run_step3(std::span<const MosaicTarget> targets,
                                     const MosaicConfig& config, std::uint64_t master_seed,
                                     ImageStore& store, std::size_t workers) {
  validate(config);
  std::vector<std::vector<TripletRecord>> per_target(targets.size());
  parallel_for(targets.size(), workers, [&](std::size_t t) {
    const MosaicTarget& target = targets[t];
    const std::string& target_id = target.real.lineage.target_id;
    for (int round = 0; round < config.rounds; ++round) {
      CounterStream stream(master_seed, target_id, "mosaic", static_cast<std::uint64_t>(round));
      try {
        const MosaicSample sample = build_mosaic(target.real, target.pool, config, stream, store);
        auto records = flatten_mosaic(sample, target_id, round);
        std::move(records.begin(), records.end(), std::back_inserter(per_target[t]));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kInsufficientTiles) throw;
        spdlog::warn("stage=step3 target={} round={} skipped: {}", target_id, round, e.message());
      }
    }
  });
  std::vector<TripletRecord> out;
  for (auto& records : per_target) std::move(records.begin(), records.end(), std::back_inserter(out));
  return out;
}

}  // namespace synres
