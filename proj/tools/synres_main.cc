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

// Command-line entry point: pipeline stages, evaluation, benchmark statistics
// and manifest validation.
//
//   synres run --config cfg.json [--stages step1,step2,step3]
//   synres step1|step2|step3 --config cfg.json
//   synres eval --ground-truth gt.jsonl --predictions pred.jsonl
//   synres stats --manifest wildres.jsonl [--attributes]
//   synres validate --manifest manifest.jsonl [--workspace dir]
//
// Exit codes: 0 success, 2 config error, 3 client error, 4 data error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "synres/error.h"
#include "synres/eval.h"
#include "synres/image.h"
#include "synres/manifest.h"
#include "synres/mock_clients.h"
#include "synres/pipeline.h"

namespace {

namespace fs = std::filesystem;

struct PipelineFlags {
  std::string config;
  std::string workspace;
  std::string targets;
  std::string stages;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  bool mock = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw synres::Error(synres::ErrorCode::kIoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw synres::Error(synres::ErrorCode::kIoError, "cannot write " + path);
}

void add_pipeline_flags(CLI::App* app, PipelineFlags& f, bool with_stages) {
  app->add_option("--config", f.config, "Pipeline config (JSON)");
  app->add_option("--workspace", f.workspace, "Workspace directory")->envname("SYNRES_WORKSPACE");
  app->add_option("--targets", f.targets, "Input targets JSONL");
  app->add_option("--seed", f.seed, "Override master_seed");
  app->add_option("--workers", f.workers, "Worker threads")->check(CLI::PositiveNumber);
  app->add_flag("--mock", f.mock, "Use the deterministic mock clients");
  if (with_stages) app->add_option("--stages", f.stages, "Comma-separated contiguous stages");
}

synres::PipelineConfig resolve_config(const PipelineFlags& f) {
  synres::PipelineConfig config =
      f.config.empty() ? synres::PipelineConfig{} : synres::load_pipeline_config(f.config);
  if (!f.workspace.empty()) config.workspace = f.workspace;
  if (!f.targets.empty()) config.targets = f.targets;
  if (f.seed) config.master_seed = *f.seed;
  if (f.workers) config.workers = *f.workers;
  if (f.mock) synres::force_mock_clients(config);
  synres::validate(config);
  return config;
}

int run_stages(const PipelineFlags& f, const std::string& stages) {
  const synres::PipelineConfig config = resolve_config(f);
  const auto manifest = synres::run_pipeline(config, synres::parse_stages(stages));
  std::cout << "manifest " << synres::WorkspacePaths(config.workspace).manifest.string()
            << " records=" << manifest.records.size() << " images=" << manifest.meta.counts.images
            << " expressions=" << manifest.meta.counts.expressions
            << " config_digest=" << manifest.meta.config_digest << "\n";
  return 0;
}

int run_eval(const std::string& gt_path, const std::string& pred_path, const std::string& csv) {
  const auto gt = synres::load_mask_dump(read_file(gt_path));
  const auto pred = synres::load_mask_dump(read_file(pred_path));
  const auto samples = synres::join_predictions(gt, pred);
  const auto report = synres::evaluate(samples);
  if (!csv.empty()) write_output(csv, synres::eval_report_csv(report, samples));
  std::printf("samples=%zu giou=%.6f ciou=%.6f\n", report.samples, report.giou, report.ciou);
  return 0;
}

int run_stats(const std::string& manifest, const std::string& csv, bool attributes,
              const PipelineFlags& f, const std::string& histogram_csv) {
  const auto entries = synres::parse_benchmark_jsonl(read_file(manifest));
  const auto stats = synres::benchmark_stats(entries);
  write_output(csv, synres::benchmark_stats_csv(stats));
  for (const auto& note : stats.notes) std::cerr << "note: " << note << "\n";
  if (attributes) {
    synres::PipelineConfig config = resolve_config(f);
    const fs::path scratch = fs::temp_directory_path() / "synres-stats-images";
    auto suite = synres::make_client_suite(config, std::make_shared<synres::ImageStore>(scratch));
    std::vector<std::string> texts;
    texts.reserve(entries.size());
    for (const auto& e : entries) texts.push_back(e.expression);
    const auto histogram = synres::attribute_histogram(texts, *suite.attribute_counter);
    write_output(histogram_csv, synres::attribute_histogram_csv(histogram));
  }
  return 0;
}

int run_validate(const std::string& manifest, const std::string& workspace) {
  const auto file = synres::parse_manifest_jsonl(read_file(manifest));
  synres::DimensionLookup lookup;
  std::shared_ptr<synres::ImageStore> store;
  if (!workspace.empty()) {
    store = std::make_shared<synres::ImageStore>(synres::WorkspacePaths(workspace).images);
    lookup = [store](std::string_view ref) -> std::optional<synres::Size> {
      if (!store->contains(ref)) return std::nullopt;
      return store->dimensions(ref);
    };
  }
  const auto violations = synres::validate_manifest(file, lookup);
  for (const auto& v : violations) {
    std::cout << synres::violation_kind_name(v.kind) << " line=" << v.line << " " << v.message
              << "\n";
  }
  std::cout << (violations.empty() ? "valid" : "invalid") << " records=" << file.records.size()
            << " violations=" << violations.size() << "\n";
  return violations.empty() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SynRES synthetic referring-segmentation data pipeline"};
  app.set_version_flag("--version", SYNRES_VERSION);
  app.require_subcommand(1);
  std::string log_level = "info";
  app.add_option("--log-level", log_level, "trace|debug|info|warn|error|off");

  PipelineFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "Run a contiguous chain of pipeline stages");
  add_pipeline_flags(run, run_flags, true);

  PipelineFlags step_flags[3];
  CLI::App* steps[3];
  const char* step_help[3] = {"Synthesize expressions, images and pseudo-masks",
                              "Group expressions and refine consensus masks",
                              "Mosaic augmentation with superclass replacement"};
  for (int i = 0; i < 3; ++i) {
    steps[i] = app.add_subcommand("step" + std::to_string(i + 1), step_help[i]);
    add_pipeline_flags(steps[i], step_flags[i], false);
  }

  std::string gt_path, pred_path, eval_csv;
  CLI::App* eval = app.add_subcommand("eval", "gIoU / cIoU of a prediction dump");
  eval->add_option("--ground-truth", gt_path, "Ground-truth mask dump (JSONL)")->required();
  eval->add_option("--predictions", pred_path, "Prediction mask dump (JSONL)")->required();
  eval->add_option("--csv", eval_csv, "Per-sample CSV report path ('-' for stdout)");

  std::string stats_manifest, stats_csv = "-", histogram_csv = "-";
  bool stats_attributes = false;
  PipelineFlags stats_flags;
  CLI::App* stats = app.add_subcommand("stats", "Benchmark image/expression counts");
  stats->add_option("--manifest", stats_manifest, "Benchmark JSONL")->required();
  stats->add_option("--csv", stats_csv, "Counts CSV path ('-' for stdout)");
  stats->add_flag("--attributes", stats_attributes, "Also emit the attribute histogram");
  stats->add_option("--histogram-csv", histogram_csv, "Histogram CSV path ('-' for stdout)");
  stats->add_option("--config", stats_flags.config, "Config providing the attribute counter");
  stats->add_flag("--mock", stats_flags.mock, "Use the mock attribute counter");

  std::string validate_manifest, validate_workspace;
  CLI::App* validate = app.add_subcommand("validate", "Check a dataset manifest");
  validate->add_option("--manifest", validate_manifest, "Manifest JSONL")->required();
  validate->add_option("--workspace", validate_workspace,
                       "Workspace whose image store resolves image refs")
      ->envname("SYNRES_WORKSPACE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto logger = spdlog::stderr_logger_mt("synres");
  logger->set_pattern("%Y-%m-%dT%H:%M:%S.%e level=%l %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::from_str(log_level));

  try {
    if (run->parsed()) return run_stages(run_flags, run_flags.stages);
    for (int i = 0; i < 3; ++i) {
      if (steps[i]->parsed()) return run_stages(step_flags[i], "step" + std::to_string(i + 1));
    }
    if (eval->parsed()) return run_eval(gt_path, pred_path, eval_csv);
    if (stats->parsed()) {
      return run_stats(stats_manifest, stats_csv, stats_attributes, stats_flags, histogram_csv);
    }
    if (validate->parsed()) return run_validate(validate_manifest, validate_workspace);
  } catch (const synres::Error& e) {
    spdlog::error("stage={} code={} message=\"{}\"", e.stage().empty() ? "-" : e.stage(),
                  synres::error_code_name(e.code()), e.message());
    return synres::exit_code_for(e.code());
  } catch (const std::exception& e) {
    spdlog::error("stage=- code=Internal message=\"{}\"", e.what());
    return 4;
  }
  return 0;
}
