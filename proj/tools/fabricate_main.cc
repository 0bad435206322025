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

// Writes a directory of synthetic referring targets for smoke runs:
//   synres_fabricate --out dir [--count 8] [--width 64] [--height 48] [--seed 0]

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "synres/error.h"
#include "synres/fixtures.h"

int main(int argc, char** argv) {
  CLI::App app{"Fabricate synthetic referring targets"};
  std::string out;
  int count = 8;
  int width = 64;
  int height = 48;
  std::uint64_t seed = 0;
  app.add_option("--out", out, "Output directory")->required();
  app.add_option("--count", count, "Number of targets")->check(CLI::PositiveNumber);
  app.add_option("--width", width, "Image width");
  app.add_option("--height", height, "Image height");
  app.add_option("--seed", seed, "Seed");
  CLI11_PARSE(app, argc, argv);
  try {
    std::cout << synres::fabricate_targets(out, count, {width, height}, seed).string() << "\n";
  } catch (const synres::Error& e) {
    std::cerr << e.what() << "\n";
    return synres::exit_code_for(e.code());
  }
  return 0;
}
