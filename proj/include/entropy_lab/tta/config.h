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

#ifndef ENTROPY_LAB_TTA_CONFIG_H_
#define ENTROPY_LAB_TTA_CONFIG_H_

#include <cmath>
#include <cstddef>
#include <string>

namespace entropy_lab::tta {

enum class Method { kTent, kRdumb };

std::string MethodName(Method m);
Method ParseMethod(const std::string& name);  // throws ConfigError

struct TtaConfig {
  Method method = Method::kRdumb;
  double lr = 2.5e-4;
  std::size_t batch_size = 64;
  std::size_t reset_period = 1000;
  double e0 = 0.4 * std::log(1000.0);
  double alpha = 0.9;
  double eps_div = 0.05;
  std::size_t stop_iter = 1000;
  std::size_t eval_interval = 10;
  std::size_t track_n = 1000;
  bool clear_ema_on_reset = true;
  // Test hook: RDumb with every sample weight forced to 1.
  bool force_unit_weights = false;

  // Throws ConfigError on lr <= 0, reset_period == 0, alpha outside (0, 1],
  // eps_div outside [0, 1], batch_size < 2 or eval_interval == 0.
  void Validate() const;
};

}  // namespace entropy_lab::tta

#endif  // ENTROPY_LAB_TTA_CONFIG_H_
