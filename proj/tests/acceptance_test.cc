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

// Acceptance checks, one test per criterion. A listener prints a single
// "criterion N: PASS|FAIL" line per test after gtest's own output.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <spdlog/spdlog.h>

#include "oracles.h"
#include "test_util.h"
#include "synres/attributes.h"
#include "synres/eval.h"
#include "synres/fixtures.h"
#include "synres/grouping.h"
#include "synres/image.h"
#include "synres/maskops.h"
#include "synres/mock_clients.h"
#include "synres/mock_server.h"
#include "synres/mosaic.h"
#include "synres/random.h"
#include "synres/rle.h"
#include "synres/superclass.h"

namespace synres {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(SYNRES_CLI_PATH) + " --log-level off " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Superclass rows as published, kept apart from the library's copy.
const std::vector<std::pair<std::string, std::vector<std::string>>> kPublishedTable = {
    {"child", {"boy", "girl", "son", "daughter"}},
    {"kid", {"boy", "girl", "son", "daughter"}},
    {"adult", {"woman", "women", "man", "men", "female", "male"}},
    {"person", {"woman", "women", "man", "men", "female", "male", "boy", "girl", "guy"}},
    {"their", {"his", "her"}},
    {"vehicle", {"car", "bus", "plane", "train", "airplane", "truck", "boat", "motorcycle"}},
    {"animal", {"bird", "cow", "bull", "rabbit", "bunny", "dog", "puppy", "cat", "zebra",
                "elephant", "horse", "giraffe"}},
    {"fruit", {"apple", "banana"}},
    {"vegetable", {"broccoli", "carrot", "cabbage", "radish"}},
    {"food", {"sandwich", "hot dog", "pizza", "donut", "doughnut", "cake", "hamburger"}},
    {"electronic", {"tv", "television", "laptop", "computer", "keyboard", "cell phone",
                    "smartphone"}},
    {"furniture", {"chair", "couch", "sofa", "bed", "desk"}},
};

// Lowercase alphanumeric tokens.
std::vector<std::string> tokens_of(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

// Row-major runs starting with zeros.
RleCounts oracle_rle(const oracle::Bits& bits) {
  RleCounts out;
  std::uint8_t current = 0;
  std::uint64_t run = 0;
  for (auto b : bits) {
    if (b != current) {
      out.push_back(run);
      run = 0;
      current = b;
    }
    ++run;
  }
  out.push_back(run);
  return out;
}

TEST(Acceptance, Criterion01_MaskAlgebraMatchesOracle) {
  std::mt19937_64 rng(101);
  const auto start = Clock::now();
  for (int t = 0; t < 1000; ++t) {
    const double da = (rng() % 5) / 4.0 * 0.8, db = (rng() % 5) / 4.0 * 0.8;
    const BinaryMask a = oracle::random_mask(rng, 16, 16, da);
    const BinaryMask b = oracle::random_mask(rng, 16, 16, db);
    const auto ua = oracle::unpack(a), ub = oracle::unpack(b);
    ASSERT_NEAR(iou(a, b, EmptyPolicy::kZero), oracle::iou(ua, ub, 0.0), 1e-12);
    ASSERT_NEAR(iou(a, b, EmptyPolicy::kOne), oracle::iou(ua, ub, 1.0), 1e-12);

    const RasterMask ra = oracle::random_raster(rng, 16, 16);
    const RasterMask rb = oracle::random_raster(rng, 16, 16);
    const RasterMask rc = oracle::random_raster(rng, 16, 16);
    const MaskGrid grid = {{ra, rb}, {rc, ra}};
    const std::vector<std::vector<oracle::Bits>> bits = {
        {oracle::threshold(ra, 0.5), oracle::threshold(rb, 0.5)},
        {oracle::threshold(rc, 0.5), oracle::threshold(ra, 0.5)}};
    const auto ref = oracle::miou(bits);
    const MiouMatrix mat = miou_matrix(grid);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) ASSERT_NEAR(mat.at(i, j), ref[i][j], 1e-12);
    }

    const std::vector<const RasterMask*> members = {&ra, &rb, &rc};
    const std::size_t k = 1 + t % 3;
    const std::vector<const RasterMask*> used(members.begin(), members.begin() + k);
    const BinaryMask refined = average_and_refine(std::span<const RasterMask* const>(used));
    ASSERT_EQ(oracle::unpack(refined), oracle::average_refine(used, 0.5));
  }
  EXPECT_LT(seconds_since(start), 5.0);
}

TEST(Acceptance, Criterion02_Step2MatchesOracle) {
  std::mt19937_64 rng(202);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 6, m = 1 + rng() % 4;
    const SyntheticBatch batch = testing::random_batch(rng, n, m, 16, 16, "t" + std::to_string(t));
    const auto ref = oracle::miou(testing::threshold_grid(batch, 0.5));
    const auto comps = oracle::components(ref, 0.65, 2);
    const Clustering c = cluster_expressions(miou_matrix(batch.pseudo_masks), GroupingConfig{});
    ASSERT_EQ(c.groups, comps.groups) << t;
    ASSERT_EQ(c.discarded, comps.discarded) << t;
    const auto consensus = consensus_masks(batch, c.groups);
    ASSERT_EQ(consensus.size(), comps.groups.size());
    for (std::size_t g = 0; g < consensus.size(); ++g) {
      ASSERT_EQ(consensus[g].refined_masks.size(), m);
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<const RasterMask*> members;
        for (std::size_t j : comps.groups[g]) members.push_back(&batch.pseudo_masks[i][j]);
        ASSERT_EQ(oracle::unpack(consensus[g].refined_masks[i]),
                  oracle::average_refine(members, 0.5))
            << t << " group " << g << " image " << i;
      }
    }
  }
}

TEST(Acceptance, Criterion03_TauChainIsMonotone) {
  const std::vector<double> taus = {0.55, 0.60, 0.65, 0.70, 0.75};
  std::mt19937_64 rng(303);
  std::size_t strict_drops = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 5, m = 1 + rng() % 4;
    const SyntheticBatch batch = testing::random_batch(rng, n, m);
    const MiouMatrix mat = miou_matrix(batch.pseudo_masks);
    std::set<std::size_t> previous;
    for (std::size_t k = 0; k < taus.size(); ++k) {
      GroupingConfig cfg;
      cfg.tau = taus[k];
      std::set<std::size_t> retained;
      for (const auto& g : cluster_expressions(mat, cfg).groups) retained.insert(g.begin(), g.end());
      if (k > 0) {
        ASSERT_TRUE(std::includes(previous.begin(), previous.end(), retained.begin(), retained.end()))
            << "instance " << t << " tau " << taus[k];
        strict_drops += retained.size() < previous.size();
      }
      previous = std::move(retained);
    }
  }
  // The corpus must actually exercise the thresholds.
  EXPECT_GT(strict_drops, 0u);
}

TEST(Acceptance, Criterion04_EndpointOnlyConfigUsesPublishedDefaults) {
  spdlog::set_level(spdlog::level::warn);
  MockModelServer server;
  const fs::path root = testing::scratch("acceptance_defaults");
  const fs::path targets = fabricate_targets(root / "in", 2);
  const std::string url = server.url();
  nlohmann::json clients;
  for (const char* name : {"captioner", "image_generator", "segmenter", "attribute_counter"}) {
    clients[name] = {{"base_url", url}};
  }
  std::ofstream(root / "config.json") << nlohmann::json{{"clients", clients}}.dump(2);
  ASSERT_EQ(run_cli("run --config " + (root / "config.json").string() + " --workspace " +
                    (root / "ws").string() + " --targets " + targets.string()),
            0);
  const auto lines = testing::split_lines(slurp(root / "ws/manifest.jsonl"));
  ASSERT_FALSE(lines.empty());
  const auto meta = nlohmann::json::parse(lines.back());
  ASSERT_EQ(meta.at("type"), "meta");
  const auto& config = meta.at("config");
  EXPECT_EQ(config.at("synthesis").at("m_images"), 6);
  EXPECT_EQ(config.at("synthesis").at("n_expressions"), 5);
  EXPECT_EQ(config.at("grouping").at("tau").get<double>(), 0.65);
  EXPECT_EQ(config.at("mosaic").at("replace_probability").get<double>(), 0.7);
  EXPECT_EQ(config.at("clients").at("segmenter").at("base_url"), url);
  // The digest covers exactly this payload.
  EXPECT_EQ(meta.at("config_digest"),
            config_digest(nlohmann::ordered_json::parse(lines.back()).at("config")));
  EXPECT_GT(meta.at("counts").at("masks").get<int>(), 0);
}

TEST(Acceptance, Criterion05_MockPipelineIsDeterministic) {
  const fs::path root = testing::scratch("acceptance_determinism");
  const fs::path targets = fabricate_targets(root / "in", 8);
  const auto start = Clock::now();
  std::vector<std::string> manifests;
  const std::vector<std::string> workers = {"1", "1", "1", "8"};
  for (std::size_t k = 0; k < workers.size(); ++k) {
    const fs::path ws = root / ("ws" + std::to_string(k));
    ASSERT_EQ(run_cli("run --mock --workers " + workers[k] + " --workspace " + ws.string() +
                      " --targets " + targets.string()),
              0);
    manifests.push_back(slurp(ws / "manifest.jsonl"));
  }
  const double elapsed = seconds_since(start);
  EXPECT_GT(testing::split_lines(manifests[0]).size(), 8u);
  for (std::size_t k = 1; k < manifests.size(); ++k) EXPECT_EQ(manifests[k], manifests[0]) << k;
  EXPECT_LT(elapsed, 60.0);
}

TEST(Acceptance, Criterion06_MockBucketsClusterByQuadrant) {
  std::mt19937_64 rng(606);
  std::size_t same_pairs = 0, cross_pairs = 0;
  for (int t = 0; t < 100; ++t) {
    const Size size{static_cast<int>(40 + rng() % 100), static_cast<int>(40 + rng() % 100)};
    const std::size_t n = 2 + rng() % 7;
    std::vector<std::string> texts;
    for (std::size_t j = 0; j < n; ++j) texts.push_back("mock expr " + std::to_string(rng()));
    MaskGrid grid(6);
    for (auto& row : grid) {
      const std::uint64_t digest = rng();
      for (const auto& text : texts) row.push_back(mock::segment(size, digest, text));
    }
    const MiouMatrix mat = miou_matrix(grid);
    std::map<int, std::vector<std::size_t>> buckets;
    for (std::size_t j = 0; j < n; ++j) buckets[mock::bucket(texts[j])].push_back(j);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (mock::bucket(texts[a]) == mock::bucket(texts[b])) {
          ASSERT_GT(mat.at(a, b), 0.65);
          ++same_pairs;
        } else {
          ASSERT_EQ(mat.at(a, b), 0.0);
          ++cross_pairs;
        }
      }
    }
    std::vector<std::vector<std::size_t>> expected;
    for (const auto& [bucket, members] : buckets) {
      if (members.size() >= 2) expected.push_back(members);
    }
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(cluster_expressions(mat, GroupingConfig{}).groups, expected);
  }
  EXPECT_GT(same_pairs, 0u);
  EXPECT_GT(cross_pairs, 0u);
}

TEST(Acceptance, Criterion07_SuperclassEndpoints) {
  const auto& table = SuperclassTable::standard();
  std::set<std::string> singles;
  std::set<std::pair<std::string, std::string>> phrases;
  for (const auto& [sc, words] : kPublishedTable) {
    for (const auto& w : words) {
      const auto tok = tokens_of(w);
      if (tok.size() == 1) singles.insert(tok[0]);
      if (tok.size() == 2) phrases.insert({tok[0], tok[1]});
    }
  }
  std::vector<std::string> vocab = {"the", "a", "on", "left", "red", "holding", "next", "to",
                                    "catalog", "boys", "scar", "hot", "cell", "phone", "dog,",
                                    "Her", "HIS", "(man)", "tv.", "Hot Dog", "cell phone"};
  for (const auto& w : singles) vocab.push_back(w);
  std::mt19937_64 rng(707);
  std::size_t originals_seen = 0;
  for (int t = 0; t < 1000; ++t) {
    std::string text;
    const std::size_t len = 1 + rng() % 12;
    for (std::size_t k = 0; k < len; ++k) {
      if (k > 0) text += rng() % 5 == 0 ? "  " : " ";
      text += vocab[rng() % vocab.size()];
    }
    CounterStream zero(static_cast<std::uint64_t>(t));
    ASSERT_EQ(superclass_replace(text, table, 0.0, zero), text);

    CounterStream one(static_cast<std::uint64_t>(t) + 1000000);
    const std::string out = superclass_replace(text, table, 1.0, one);
    const auto before = tokens_of(text);
    for (const auto& w : before) originals_seen += singles.contains(w);
    const auto words = tokens_of(out);
    for (std::size_t k = 0; k < words.size(); ++k) {
      ASSERT_FALSE(singles.contains(words[k])) << text << " -> " << out;
      if (k + 1 < words.size()) {
        ASSERT_FALSE(phrases.contains({words[k], words[k + 1]})) << text << " -> " << out;
      }
    }
  }
  EXPECT_GT(originals_seen, 1000u);
  // Bernoulli word 0 replaces, index word 0 picks the first superclass.
  ScriptedStream forced({0});
  EXPECT_EQ(superclass_replace("The boy holding his bag", table, 1.0, forced),
            "The child holding their bag");
}

TEST(Acceptance, Criterion08_ReplacementRate) {
  const std::vector<std::string> texts = {"the dog near a car", "a cake on the desk",
                                          "laptop beside a zebra", "Bus behind the apple"};
  std::size_t matches = 0, replaced = 0;
  for (std::uint64_t seed = 0; matches < 10000; ++seed) {
    CounterStream s(seed, "rate", "superclass", 0);
    const auto out =
        superclass_replace_detailed(texts[seed % texts.size()], SuperclassTable::standard(), 0.7, s);
    matches += out.matches;
    replaced += out.drawn_replacements;
  }
  ASSERT_EQ(matches, 10000u);
  const double rate = static_cast<double>(replaced) / static_cast<double>(matches);
  std::printf("replacement rate %.4f over %zu matches\n", rate, matches);
  EXPECT_GE(rate, 0.68);
  EXPECT_LE(rate, 0.72);
}

// Nearest-neighbour sampling at destination pixel centres.
oracle::Bits oracle_resize(const BinaryMask& src, int side) {
  oracle::Bits out(static_cast<std::size_t>(side) * side, 0);
  for (int y = 0; y < side; ++y) {
    const int sy = static_cast<int>((2LL * y + 1) * src.height() / (2LL * side));
    for (int x = 0; x < side; ++x) {
      const int sx = static_cast<int>((2LL * x + 1) * src.width() / (2LL * side));
      out[static_cast<std::size_t>(y) * side + x] = src.at(sx, sy) ? 1 : 0;
    }
  }
  return out;
}

TEST(Acceptance, Criterion09_MosaicGeometry) {
  ImageStore store(testing::scratch("acceptance_mosaic"));
  std::mt19937_64 rng(909);
  const std::vector<std::string> texts = {"the boy", "the girl", "a red car", "a red car",
                                          "the dog on the left", "man with his hat", "a tree"};
  std::uint32_t colour = 0;
  auto make_record = [&](RecordSource source) {
    const int w = 1 + static_cast<int>(rng() % 24), h = 1 + static_cast<int>(rng() % 24);
    ++colour;
    TripletRecord r;
    r.image_ref = store.put(Image::solid(w, h, colour & 0xff, (colour >> 8) & 0xff, 7));
    r.expression_text = texts[rng() % texts.size()];
    r.mask = oracle::random_mask(rng, w, h, (rng() % 4) / 3.0);
    r.source = source;
    r.lineage.target_id = "t";
    return r;
  };
  std::size_t merged = 0;
  for (int t = 0; t < 500; ++t) {
    MosaicConfig cfg;
    cfg.grid_choices = {2, 3};
    cfg.tile_size = 2 + static_cast<int>(rng() % 20);
    cfg.replace_probability = (rng() % 3) / 2.0;
    const TripletRecord real = make_record(RecordSource::kReal);
    std::vector<TripletRecord> pool;
    for (int k = 0; k < 8 + static_cast<int>(rng() % 4); ++k) pool.push_back(make_record(RecordSource::kSynthetic));
    std::map<std::string, const TripletRecord*> by_ref = {{real.image_ref, &real}};
    for (const auto& r : pool) by_ref[r.image_ref] = &r;

    CounterStream s(static_cast<std::uint64_t>(t), "t", "mosaic", 0);
    const MosaicSample m = build_mosaic(real, pool, cfg, s, store);
    const int ts = cfg.tile_size, side = m.grid * ts;
    ASSERT_EQ(m.tile_layout.size(), static_cast<std::size_t>(m.grid * m.grid));
    ASSERT_EQ(store.dimensions(m.canvas_ref), (Size{side, side}));
    ASSERT_EQ(std::count_if(m.tile_layout.begin(), m.tile_layout.end(),
                            [](const TilePlacement& p) { return p.kind == TileKind::kReal; }),
              1);
    std::set<std::size_t> covered;
    for (const auto& entry : m.samples) {
      std::size_t expected_bits = 0;
      oracle::Bits expected(static_cast<std::size_t>(side) * side, 0);
      std::vector<std::uint8_t> inside(expected.size(), 0);
      for (std::size_t tile : entry.tiles) {
        ASSERT_TRUE(covered.insert(tile).second) << "tile in two samples";
        const TilePlacement& p = m.tile_layout[tile];
        const auto resized = oracle_resize(by_ref.at(p.source_ref)->mask, ts);
        expected_bits += oracle::popcount(resized);
        for (int y = 0; y < ts; ++y) {
          for (int x = 0; x < ts; ++x) {
            const std::size_t at = static_cast<std::size_t>(p.row * ts + y) * side + p.col * ts + x;
            inside[at] = 1;
            expected[at] = resized[static_cast<std::size_t>(y) * ts + x];
          }
        }
      }
      merged += entry.tiles.size() > 1;
      ASSERT_EQ(entry.mask.count(), expected_bits);
      const auto bits = oracle::unpack(entry.mask);
      for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) ASSERT_TRUE(inside[i]) << "bit outside declared tiles";
      }
      ASSERT_EQ(bits, expected);
    }
    ASSERT_EQ(covered.size(), m.tile_layout.size());
  }
  EXPECT_GT(merged, 0u);
}

TEST(Acceptance, Criterion10_MetricFidelityAndRle) {
  auto first = [](std::size_t begin, std::size_t count) {
    BinaryMask m(20, 20);
    for (std::size_t i = begin; i < begin + count; ++i) m.set(i);
    return m;
  };
  const std::vector<EvalSample> skew = {{"small", first(0, 1), first(0, 1)},
                                        {"large", first(0, 100), first(100, 100)}};
  const EvalReport r = evaluate(skew);
  EXPECT_EQ(r.giou, 0.5);
  EXPECT_EQ(r.ciou, 1.0 / 201.0);

  std::mt19937_64 rng(1010);
  for (int t = 0; t < 10000; ++t) {
    const int w = 1 + static_cast<int>(rng() % 40), h = 1 + static_cast<int>(rng() % 40);
    const BinaryMask m = oracle::random_mask(rng, w, h, (rng() % 11) / 10.0);
    const RleCounts counts = rle_encode(m);
    ASSERT_EQ(counts, oracle_rle(oracle::unpack(m)));
    ASSERT_EQ(rle_decode(w, h, counts), m);
    const RleMask wire = rle_from_json(nlohmann::json::parse(rle_to_json(to_rle(m)).dump()));
    ASSERT_EQ(from_rle(wire), m);
  }
}

TEST(Acceptance, Criterion11_BenchmarkStatsReproduceTable) {
  const BenchmarkStats stats =
      benchmark_stats(parse_benchmark_jsonl(testing::fabricate_benchmark_jsonl()));
  const auto& want = testing::published_benchmark_rows();
  ASSERT_EQ(stats.rows.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(stats.rows[i].type, want[i].type);
    EXPECT_EQ(stats.rows[i].domain, want[i].domain);
    EXPECT_EQ(stats.rows[i].split, want[i].split);
    EXPECT_EQ(stats.rows[i].attribute, want[i].attribute);
    EXPECT_EQ(stats.rows[i].images, static_cast<std::uint64_t>(want[i].images));
    EXPECT_EQ(stats.rows[i].expressions, static_cast<std::uint64_t>(want[i].expressions));
  }
  ASSERT_GE(stats.split_totals.size(), 2u);
  EXPECT_EQ(stats.split_totals[0].images, 196u);
  EXPECT_EQ(stats.split_totals[0].expressions, 265u);
  EXPECT_EQ(stats.split_totals[1].images, 215u);
  EXPECT_EQ(stats.split_totals[1].expressions, 257u);
  EXPECT_EQ(stats.total_images, 724u);
  EXPECT_EQ(stats.total_expressions, 974u);
}

TEST(Acceptance, Criterion12_AttributeAccounting) {
  auto store = std::make_shared<ImageStore>(testing::scratch("acceptance_attributes"));
  const auto suite = make_mock_suite(store);
  const AttributeMap m = suite.attribute_counter->classify(
      "the cat sitting on the bench next to big green wooden boat in the center of the image");
  using V = std::vector<std::string>;
  const std::map<AttributeKind, V> table = {
      {AttributeKind::kHeadNoun, {"cat"}},
      {AttributeKind::kSubNoun, {"bench", "boat"}},
      {AttributeKind::kColor, {"green"}},
      {AttributeKind::kSize, {"big"}},
      {AttributeKind::kAbsoluteLocation, {"the center"}},
      {AttributeKind::kRelativeLocation, {"on", "next to", "in"}},
      {AttributeKind::kAction, {"sitting"}},
      {AttributeKind::kGenericAttribute, {"wooden"}},
  };
  std::size_t words = 0;
  for (const auto& [kind, list] : table) {
    EXPECT_EQ(m.at(kind), list) << attribute_code(kind);
    words += list.size();
  }
  EXPECT_EQ(words, 11u);
  EXPECT_EQ(total_attributes(m), 11u);
}

// Prints the per-criterion summary once every test has finished.
class CriterionPrinter : public ::testing::EmptyTestEventListener {
 public:
  void OnTestEnd(const ::testing::TestInfo& info) override {
    const std::string name = info.name();
    const auto at = name.find("Criterion");
    if (at == std::string::npos) return;
    const int number = std::stoi(name.substr(at + 9, 2));
    lines_.emplace_back(number, info.result()->Passed());
  }
  void OnTestProgramEnd(const ::testing::UnitTest&) override {
    std::sort(lines_.begin(), lines_.end());
    for (const auto& [number, passed] : lines_) {
      std::printf("criterion %d: %s\n", number, passed ? "PASS" : "FAIL");
    }
    std::fflush(stdout);
  }

 private:
  std::vector<std::pair<int, bool>> lines_;
};

}  // namespace
}  // namespace synres

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  spdlog::set_level(spdlog::level::warn);
  ::testing::UnitTest::GetInstance()->listeners().Append(new synres::CriterionPrinter);
  return RUN_ALL_TESTS();
}
