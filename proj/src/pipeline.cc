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

#include "synres/pipeline.h"

#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <spdlog/spdlog.h>

#include "synres/error.h"
#include "synres/hash.h"
#include "synres/http_clients.h"
#include "synres/mock_clients.h"
#include "synres/parallel.h"
#include "synres/random.h"
#include "synres/rle.h"

namespace synres {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void config_error(const std::string& msg) {
  throw Error(ErrorCode::kConfigError, msg, "config");
}

// Reads the keys of one config object, rejecting unknown ones.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) config_error(path_ + " must be an object");
  }

  template <typename T>
  void read(const char* key, T& out) {
    seen_.insert(key);
    const auto it = j_.find(key);
    if (it == j_.end()) return;
    try {
      out = it->template get<T>();
    } catch (const json::exception&) {
      config_error(path_ + "." + key + " has the wrong type");
    }
  }

  const json* find(const char* key) {
    seen_.insert(key);
    const auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.contains(key)) config_error("unknown config key " + path_ + "." + key);
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

std::string read_file(const fs::path& path, ErrorCode missing = ErrorCode::kIoError) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(missing, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const fs::path& path, const std::string& bytes) {
  fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path out(p);
  return out.is_relative() && !base.empty() ? base / out : out;
}

ClientChoice parse_client(const json& j, const std::string& path, const fs::path& base_dir,
                          bool allow_instructions) {
  if (j.is_string()) {
    if (j.get<std::string>() == "mock") return MockClient{};
    config_error(path + " must be \"mock\" or an endpoint object");
  }
  ObjectReader r(j, path);
  EndpointClient c;
  r.read("base_url", c.endpoint.base_url);
  r.read("timeout_seconds", c.endpoint.timeout_seconds);
  r.read("max_in_flight", c.endpoint.max_in_flight);
  if (const json* retry = r.find("retry")) {
    ObjectReader rr(*retry, path + ".retry");
    rr.read("attempts", c.endpoint.retry.attempts);
    rr.read("backoff_seconds", c.endpoint.retry.backoff_seconds);
    rr.finish();
  }
  std::string token;
  r.read("auth_token", token);
  if (!token.empty()) c.endpoint.auth_token = token;
  if (allow_instructions) {
    std::string file;
    r.read("instructions_file", file);
    if (!file.empty()) c.instructions = read_file(resolve(base_dir, file), ErrorCode::kConfigError);
  }
  r.finish();
  if (c.endpoint.base_url.empty()) config_error(path + ".base_url is required");
  try {
    validate(c.endpoint);
  } catch (const Error& e) {
    config_error(path + ": " + e.message());
  }
  return c;
}

ojson client_to_json(const ClientChoice& choice) {
  if (std::holds_alternative<MockClient>(choice)) return "mock";
  const auto& c = std::get<EndpointClient>(choice);
  ojson j;
  j["base_url"] = c.endpoint.base_url;
  j["timeout_seconds"] = c.endpoint.timeout_seconds;
  j["max_in_flight"] = c.endpoint.max_in_flight;
  j["retry"] = {{"attempts", c.endpoint.retry.attempts},
                {"backoff_seconds", c.endpoint.retry.backoff_seconds}};
  if (!c.instructions.empty()) j["instructions_digest"] = hex64(fnv1a64(c.instructions));
  return j;
}

const char* pool_name(MosaicPool pool) {
  return pool == MosaicPool::kSameTarget ? "same_target" : "all_targets";
}

std::string human_expression_id(const std::string& target_id) { return target_id + "/h"; }

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    fn(line, line_no);
  }
}

std::vector<TripletRecord> read_records(const fs::path& path) {
  try {
    return decode_manifest(parse_manifest_jsonl(read_file(path))).records;
  } catch (const Error& e) {
    throw Error(ErrorCode::kDataError, path.string() + ": " + e.message());
  }
}

std::string records_to_jsonl(const std::vector<TripletRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += record_to_json(r).dump();
    out.push_back('\n');
  }
  return out;
}

void require_inputs(Stage stage, std::initializer_list<fs::path> paths) {
  for (const auto& p : paths) {
    if (!fs::exists(p)) {
      throw Error(ErrorCode::kConfigError,
                  "missing intermediate " + p.string() + "; run the upstream stage first",
                  stage_name(stage));
    }
  }
}

std::vector<ReferringTarget> read_workspace_targets(const WorkspacePaths& ws, ImageStore& store) {
  return load_targets(read_file(ws.targets), store, ws.root);
}

TripletRecord real_record(const ReferringTarget& t) {
  TripletRecord r;
  r.image_ref = t.real_image_ref;
  r.mask = t.real_mask;
  r.source = RecordSource::kReal;
  r.lineage.target_id = t.target_id;
  if (t.human_expression) {
    r.expression_text = t.human_expression->text;
    r.lineage.expression_id = t.human_expression->id;
  }
  return r;
}

void run_stage1(const PipelineConfig& config, const WorkspacePaths& ws, ImageStore& store,
                const ClientSuite& clients) {
  if (config.targets.empty()) {
    throw Error(ErrorCode::kConfigError, "no input targets manifest configured", "step1");
  }
  const std::string text = read_file(config.targets, ErrorCode::kConfigError);
  const auto targets = load_targets(text, store, config.targets.parent_path());
  write_file_atomic(ws.targets, targets_to_jsonl(targets));

  std::vector<SyntheticBatch> batches(targets.size());
  parallel_for(targets.size(), config.workers, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    SynthesisConfig sc = config.synthesis;
    sc.seed_base = derive_seed_base(config.master_seed, targets[i].target_id);
    batches[i] = run_step1(targets[i], sc, clients, clients.request_concurrency);
    spdlog::info("stage=step1 target={} expressions={} images={} duration_ms={:.1f}",
                 targets[i].target_id, batches[i].expression_count(), batches[i].image_count(),
                 elapsed_ms(start));
  });
  std::string out;
  for (const auto& b : batches) {
    out += batch_to_json(b).dump();
    out.push_back('\n');
  }
  write_file_atomic(ws.step1_batches, out);
}

void run_stage2(const PipelineConfig& config, const WorkspacePaths& ws) {
  require_inputs(Stage::kStep2, {ws.targets, ws.step1_batches});
  std::vector<SyntheticBatch> batches;
  for_each_line(read_file(ws.step1_batches), [&](std::string_view line, std::size_t line_no) {
    try {
      batches.push_back(batch_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kDataError,
                  ws.step1_batches.string() + ":" + std::to_string(line_no) + ": " + e.what(),
                  "step2");
    }
  });
  std::vector<std::vector<TripletRecord>> results(batches.size());
  parallel_for(batches.size(), config.workers, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    Step2Result r = run_step2_detailed(batches[i], config.grouping);
    spdlog::info("stage=step2 target={} groups={} discarded={} records={} duration_ms={:.1f}",
                 batches[i].target_id, r.groups.size(), r.discarded.size(), r.records.size(),
                 elapsed_ms(start));
    results[i] = std::move(r.records);
  });
  std::vector<TripletRecord> records;
  for (auto& r : results) {
    for (auto& rec : r) records.push_back(std::move(rec));
  }
  write_file_atomic(ws.step2_records, records_to_jsonl(records));
}

void run_stage3(const PipelineConfig& config, const WorkspacePaths& ws, ImageStore& store) {
  require_inputs(Stage::kStep3, {ws.targets, ws.step2_records});
  const auto targets = read_workspace_targets(ws, store);
  const auto synthetic = read_records(ws.step2_records);
  std::map<std::string, std::vector<TripletRecord>> by_target;
  for (const auto& r : synthetic) by_target[r.lineage.target_id].push_back(r);

  std::vector<MosaicTarget> mosaic_targets;
  mosaic_targets.reserve(targets.size());
  for (const auto& t : targets) {
    MosaicTarget mt;
    mt.real = real_record(t);
    if (config.mosaic_pool == MosaicPool::kAllTargets) {
      mt.pool = synthetic;
    } else if (auto it = by_target.find(t.target_id); it != by_target.end()) {
      mt.pool = it->second;
    }
    mosaic_targets.push_back(std::move(mt));
  }
  const auto start = std::chrono::steady_clock::now();
  const auto records =
      run_step3(mosaic_targets, config.mosaic, config.master_seed, store, config.workers);
  spdlog::info("stage=step3 target=* targets={} records={} duration_ms={:.1f}", targets.size(),
               records.size(), elapsed_ms(start));
  write_file_atomic(ws.step3_records, records_to_jsonl(records));
}

void remove_downstream(const WorkspacePaths& ws, Stage stage) {
  std::error_code ec;
  if (stage < Stage::kStep2) fs::remove(ws.step2_records, ec);
  if (stage < Stage::kStep3) fs::remove(ws.step3_records, ec);
  fs::remove(ws.manifest, ec);
}

DatasetManifest assemble_manifest(const PipelineConfig& config, const WorkspacePaths& ws,
                                  ImageStore& store) {
  std::vector<TripletRecord> records;
  if (fs::exists(ws.targets)) {
    for (const auto& t : read_workspace_targets(ws, store)) {
      if (t.human_expression) records.push_back(real_record(t));
    }
  }
  for (const fs::path& p : {ws.step2_records, ws.step3_records}) {
    if (!fs::exists(p)) continue;
    for (auto& r : read_records(p)) records.push_back(std::move(r));
  }
  DatasetManifest manifest = make_manifest(std::move(records), effective_config(config));
  const std::string text = to_jsonl(manifest);
  const auto violations =
      validate_manifest(parse_manifest_jsonl(text), [&store](std::string_view ref) {
        return store.contains(ref) ? std::optional<Size>(store.dimensions(ref)) : std::nullopt;
      });
  if (!violations.empty()) {
    std::string msg = "manifest failed validation: ";
    msg += std::to_string(violations.size()) + " violation(s); first at line " +
           std::to_string(violations.front().line) + ": " + violations.front().message;
    throw Error(ErrorCode::kDataError, msg, "manifest");
  }
  write_file_atomic(ws.manifest, text);
  return manifest;
}

}  // namespace

void validate(const PipelineConfig& config) {
  if (config.workers < 1) config_error("workers must be >= 1");
  try {
    validate(config.synthesis);
    validate(config.grouping);
    validate(config.mosaic);
    for (const ClientChoice* c : {&config.captioner, &config.image_generator, &config.segmenter,
                                  &config.attribute_counter}) {
      if (const auto* e = std::get_if<EndpointClient>(c)) validate(e->endpoint);
    }
  } catch (const Error& e) {
    config_error(e.message());
  }
}

PipelineConfig parse_pipeline_config(const json& j, const fs::path& base_dir) {
  PipelineConfig c;
  ObjectReader root(j, "config");
  root.read("master_seed", c.master_seed);
  root.read("workers", c.workers);
  if (const json* s = root.find("synthesis")) {
    ObjectReader r(*s, "synthesis");
    r.read("n_expressions", c.synthesis.n_expressions);
    r.read("m_images", c.synthesis.m_images);
    r.read("binarize_threshold", c.synthesis.binarize_threshold);
    r.finish();
  }
  if (const json* g = root.find("grouping")) {
    ObjectReader r(*g, "grouping");
    r.read("tau", c.grouping.tau);
    r.read("min_group_size", c.grouping.min_group_size);
    r.read("binarize_threshold", c.grouping.binarize_threshold);
    r.finish();
  }
  if (const json* m = root.find("mosaic")) {
    ObjectReader r(*m, "mosaic");
    r.read("grid_choices", c.mosaic.grid_choices);
    r.read("tile_size", c.mosaic.tile_size);
    r.read("replace_probability", c.mosaic.replace_probability);
    r.read("rounds", c.mosaic.rounds);
    std::string pool = pool_name(c.mosaic_pool);
    r.read("pool", pool);
    if (pool == "same_target") {
      c.mosaic_pool = MosaicPool::kSameTarget;
    } else if (pool == "all_targets") {
      c.mosaic_pool = MosaicPool::kAllTargets;
    } else {
      config_error("mosaic.pool must be \"same_target\" or \"all_targets\"");
    }
    r.finish();
  }
  if (const json* cl = root.find("clients")) {
    ObjectReader r(*cl, "clients");
    const auto take = [&](const char* key, ClientChoice& out, bool instructions) {
      if (const json* v = r.find(key)) {
        out = parse_client(*v, std::string("clients.") + key, base_dir, instructions);
      }
    };
    take("captioner", c.captioner, false);
    take("image_generator", c.image_generator, false);
    take("segmenter", c.segmenter, false);
    take("attribute_counter", c.attribute_counter, true);
    r.finish();
  }
  if (const json* io = root.find("io")) {
    ObjectReader r(*io, "io");
    std::string workspace, targets;
    r.read("workspace", workspace);
    r.read("targets", targets);
    r.finish();
    if (!workspace.empty()) c.workspace = resolve(base_dir, workspace);
    if (!targets.empty()) c.targets = resolve(base_dir, targets);
  }
  root.finish();
  validate(c);
  return c;
}

PipelineConfig load_pipeline_config(const fs::path& path) {
  const std::string text = read_file(path, ErrorCode::kConfigError);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    config_error(path.string() + ": " + e.what());
  }
  return parse_pipeline_config(j, path.parent_path());
}

void force_mock_clients(PipelineConfig& config) {
  config.captioner = MockClient{};
  config.image_generator = MockClient{};
  config.segmenter = MockClient{};
  config.attribute_counter = MockClient{};
}

ojson effective_config(const PipelineConfig& config) {
  ojson j;
  j["master_seed"] = config.master_seed;
  j["synthesis"] = {{"n_expressions", config.synthesis.n_expressions},
                    {"m_images", config.synthesis.m_images},
                    {"binarize_threshold", config.synthesis.binarize_threshold}};
  j["grouping"] = {{"tau", config.grouping.tau},
                   {"min_group_size", config.grouping.min_group_size},
                   {"binarize_threshold", config.grouping.binarize_threshold}};
  j["mosaic"] = {{"grid_choices", config.mosaic.grid_choices},
                 {"tile_size", config.mosaic.tile_size},
                 {"replace_probability", config.mosaic.replace_probability},
                 {"rounds", config.mosaic.rounds},
                 {"pool", pool_name(config.mosaic_pool)}};
  ojson clients;
  clients["captioner"] = client_to_json(config.captioner);
  clients["image_generator"] = client_to_json(config.image_generator);
  clients["segmenter"] = client_to_json(config.segmenter);
  clients["attribute_counter"] = client_to_json(config.attribute_counter);
  j["clients"] = std::move(clients);
  return j;
}

const char* stage_name(Stage stage) {
  switch (stage) {
    case Stage::kStep1:
      return "step1";
    case Stage::kStep2:
      return "step2";
    case Stage::kStep3:
      return "step3";
  }
  return "unknown";
}

std::vector<Stage> parse_stages(std::string_view text) {
  std::vector<Stage> stages;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = trim(text.substr(start, end - start));
    start = end + 1;
    if (item.empty()) continue;
    if (item == "step1") {
      stages.push_back(Stage::kStep1);
    } else if (item == "step2") {
      stages.push_back(Stage::kStep2);
    } else if (item == "step3") {
      stages.push_back(Stage::kStep3);
    } else {
      config_error("unknown stage \"" + std::string(item) + "\"");
    }
  }
  if (stages.empty()) return {Stage::kStep1, Stage::kStep2, Stage::kStep3};
  for (std::size_t i = 1; i < stages.size(); ++i) {
    if (static_cast<int>(stages[i]) != static_cast<int>(stages[i - 1]) + 1) {
      config_error("stages must be a contiguous run in order step1,step2,step3");
    }
  }
  return stages;
}

WorkspacePaths::WorkspacePaths(fs::path r)
    : root(std::move(r)),
      images(root / "images"),
      targets(root / "targets.jsonl"),
      step1_batches(root / "step1" / "batches.jsonl"),
      step2_records(root / "step2" / "records.jsonl"),
      step3_records(root / "step3" / "records.jsonl"),
      manifest(root / "manifest.jsonl") {}

std::vector<ReferringTarget> load_targets(std::string_view jsonl, ImageStore& store,
                                          const fs::path& base_dir) {
  std::vector<ReferringTarget> targets;
  std::set<std::string> ids;
  for_each_line(jsonl, [&](std::string_view line, std::size_t line_no) {
    const std::string where = "targets line " + std::to_string(line_no);
    try {
      const json j = json::parse(line);
      ReferringTarget t;
      t.target_id = j.at("target_id").get<std::string>();
      if (t.target_id.empty()) throw Error(ErrorCode::kDataError, "empty target_id");
      if (!ids.insert(t.target_id).second) {
        throw Error(ErrorCode::kDataError, "duplicate target_id " + t.target_id);
      }
      if (j.contains("image_ref")) {
        t.real_image_ref = j.at("image_ref").get<std::string>();
        if (!store.contains(t.real_image_ref)) {
          throw Error(ErrorCode::kDataError, "image " + t.real_image_ref + " not in store");
        }
      } else {
        t.real_image_ref = store.import_file(resolve(base_dir, j.at("image").get<std::string>()));
      }
      t.real_mask = from_rle(rle_from_json(j.at("mask")));
      const Size dims = store.dimensions(t.real_image_ref);
      if (dims.width != t.real_mask.width() || dims.height != t.real_mask.height()) {
        throw Error(ErrorCode::kDataError, "mask dimensions differ from image " + t.real_image_ref);
      }
      if (j.contains("expression") && !j.at("expression").is_null()) {
        t.human_expression =
            make_expression(human_expression_id(t.target_id), j.at("expression").get<std::string>(),
                            t.target_id, Provenance::kHuman);
      }
      targets.push_back(std::move(t));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kDataError, where + ": " + e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::kDataError, where + ": " + e.message());
    }
  });
  return targets;
}

std::string targets_to_jsonl(const std::vector<ReferringTarget>& targets) {
  std::string out;
  for (const auto& t : targets) {
    ojson j;
    j["target_id"] = t.target_id;
    j["image_ref"] = t.real_image_ref;
    j["mask"] = rle_to_json(to_rle(t.real_mask));
    if (t.human_expression) j["expression"] = t.human_expression->text;
    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

ClientSuite make_client_suite(const PipelineConfig& config, std::shared_ptr<ImageStore> store) {
  ClientSuite mocks = make_mock_suite(store);
  ClientSuite suite = mocks;
  std::size_t concurrency = 0;
  const auto bound = [&concurrency](const EndpointClient& e) {
    const auto n = static_cast<std::size_t>(e.endpoint.max_in_flight);
    concurrency = concurrency == 0 ? n : std::min(concurrency, n);
  };
  if (const auto* e = std::get_if<EndpointClient>(&config.captioner)) {
    suite.captioner = make_http_captioner(e->endpoint, store);
    bound(*e);
  }
  if (const auto* e = std::get_if<EndpointClient>(&config.image_generator)) {
    suite.image_generator = make_http_image_generator(e->endpoint, store);
    bound(*e);
  }
  if (const auto* e = std::get_if<EndpointClient>(&config.segmenter)) {
    suite.segmenter = make_http_segmenter(e->endpoint, store);
    bound(*e);
  }
  if (const auto* e = std::get_if<EndpointClient>(&config.attribute_counter)) {
    suite.attribute_counter = make_http_attribute_counter(e->endpoint, e->instructions);
  }
  suite.request_concurrency = concurrency == 0 ? 1 : concurrency;
  return suite;
}

DatasetManifest run_pipeline(const PipelineConfig& config, const std::vector<Stage>& stages,
                             const PipelineOptions& options) {
  validate(config);
  if (config.workspace.empty()) {
    throw Error(ErrorCode::kConfigError, "no workspace configured", "config");
  }
  const WorkspacePaths ws(config.workspace);
  fs::create_directories(ws.root);
  auto store = std::make_shared<ImageStore>(ws.images);
  const ClientSuite clients = options.clients ? *options.clients : make_client_suite(config, store);

  for (Stage stage : stages) {
    const auto start = std::chrono::steady_clock::now();
    spdlog::info("stage={} event=start workers={}", stage_name(stage), config.workers);
    remove_downstream(ws, stage);
    try {
      switch (stage) {
        case Stage::kStep1:
          run_stage1(config, ws, *store, clients);
          break;
        case Stage::kStep2:
          run_stage2(config, ws);
          break;
        case Stage::kStep3:
          run_stage3(config, ws, *store);
          break;
      }
    } catch (const Error& e) {
      throw e.stage().empty() ? e.with_stage(stage_name(stage)) : e;
    } catch (const fs::filesystem_error& e) {
      throw Error(ErrorCode::kIoError, e.what(), stage_name(stage));
    }
    spdlog::info("stage={} event=done duration_ms={:.1f}", stage_name(stage), elapsed_ms(start));
  }
  return assemble_manifest(config, ws, *store);
}

}  // namespace synres
