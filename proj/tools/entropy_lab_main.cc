/*
 * Copyright 2026 The Entropy Lab Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "entropy_lab/harness/commands.h"

int main(int argc, char** argv) {
  using entropy_lab::harness::CommandNames;
  CLI::App app{"Entropy-minimization test-time adaptation lab"};
  app.require_subcommand(1, 1);

  const std::map<std::string, std::string> help = {
      {"gen-data", "write the source splits and the shift suite as CSV"},
      {"pretrain", "train the source classifier"},
      {"adapt", "run Tent/RDumb on one dataset and record the accuracy trace"},
      {"fit-curve", "fit the flips-to-accuracy calibration curve"},
      {"estimate", "estimate accuracy on the shift suite with every method"},
      {"ablate", "stopping-iteration, tracked-size and subset-size sweeps"},
      {"emgmm", "EM with trainable points on a Gaussian mixture toy"},
      {"report", "re-render summaries and plots from existing CSVs"},
  };
  std::filesystem::path config;
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> out;
  for (const auto& name : CommandNames()) {
    auto* sub = app.add_subcommand(name, help.count(name) ? help.at(name) : "");
    sub->add_option("--config", config, "configuration file")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "global seed (overrides the config)");
    sub->add_option("--out", out, "output directory (overrides the config)");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return entropy_lab::harness::kExitConfigError;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  return entropy_lab::harness::Execute(command, config, seed, out);
}
