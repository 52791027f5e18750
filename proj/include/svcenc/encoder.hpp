/* ------------------------------------------------------------------
 * Copyright (C) 2026 svcenc project
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either
 * express or implied.
 * See the License for the specific language governing permissions
 * and limitations under the License.
 * -------------------------------------------------------------------
 */
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "svcenc/metrics.hpp"
#include "svcenc/predict.hpp"
#include "svcenc/yuv.hpp"

namespace svcenc {

enum class Policy { kFull, kFast };

const char* policy_name(Policy p);
Policy parse_policy(const std::string& name);  // "full" | "fast"

struct EncoderConfig {
  int width = 0;
  int height = 0;
  int gop_size = 8;
  std::vector<int> layer_qp = {40, 34, 28};  // base first, strictly decreasing
  int search_range = 8;
  double fps = 30.0;
  int threads = 1;  // > 1 switches the pixel kernels to their OpenMP variants
  std::string sequence_name = "sequence";
};

// Called after every macroblock decision; used by the verification suites
// to re-derive decisions in the exact encoder state.
using MbObserver = std::function<void(const MbContext&, const MBDecision&)>;

// Runs the whole pipeline for one policy: GOP plan, per-layer per-frame
// per-macroblock decisions in coding order, closed-loop reconstruction,
// statistics. Deterministic for a fixed config apart from wall_time_s.
RunStats encode_sequence(const std::vector<Frame>& input,
                         const EncoderConfig& cfg, Policy policy,
                         const MbObserver& observer = {});

}  // namespace svcenc
