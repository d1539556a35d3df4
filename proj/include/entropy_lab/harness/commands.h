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

#ifndef ENTROPY_LAB_HARNESS_COMMANDS_H_
#define ENTROPY_LAB_HARNESS_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "entropy_lab/harness/config.h"

namespace entropy_lab::harness {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitPreconditionError = 3;

std::vector<std::string> CommandNames();

// Each command writes below cfg.out and puts the resolved configuration in
// `<out>/config.ini`. Layout:
//   gen-data  data/{train,val,holdout_fit,test_clean}.csv, data/suite/<name>.csv
//   pretrain  model.bin, pretrain.csv
//   adapt     adapt/{trace,flips,phases,exclusion}.csv, adapt/accuracy.svg,
//             adapt/projection.csv when enabled
//   fit-curve fit/points.csv, fit/curve-<variant>.csv, fit/curve-<variant>.svg
//   estimate  estimate/{estimates,summary,flips}.csv, estimate/logits.csv
//   ablate    ablate/{stop_iters,track_sizes,subsets}.csv,
//             ablate/curve-stop<N>.csv, ablate/*.svg
//   emgmm     emgmm/summary.csv, emgmm/<arm>-<seed>.csv, emgmm/<arm>.svg
//   report    re-renders summary.csv and every SVG from the CSVs present
// Commands after pretrain load <out>/model.bin.
void RunCommand(const std::string& command, const RunConfig& cfg);

// Loads the config, applies overrides, runs the command and maps errors to
// exit codes (logging the message).
int Execute(const std::string& command, const std::filesystem::path& config_path,
            std::optional<std::uint64_t> seed, std::optional<std::filesystem::path> out);

}  // namespace entropy_lab::harness

#endif  // ENTROPY_LAB_HARNESS_COMMANDS_H_
