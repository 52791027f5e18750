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

#include <array>
#include <cstdint>
#include <vector>

#include "svcenc/modes.hpp"

namespace svcenc {

struct MbContext;

// Lagrangian cost J = SSD + lambda * R.
struct RDCost {
  double j = 0.0;
  long long ssd = 0;
  int rate_bits = 0;
  double lambda = 0.0;
};

// Final outcome of the mode decision for one 16x16 macroblock.
struct MBDecision {
  Mode mode = Mode::kIntra16x16;
  std::array<SubMode, 4> sub_modes{};    // meaningful for kP8x8
  std::vector<MotionVector> mvs;         // per partition, empty for intra
  RDCost cost;
  std::array<uint8_t, 256> recon{};      // reconstructed luma
  int evaluated_count = 0;               // candidate modes whose RDC was computed
};

// Mode-decision Lagrange multiplier 0.85 * 2^((qp-12)/3).
// Throws ConfigError outside [0, 51].
double lambda_mode(int qp);

// Throws std::invalid_argument on negative inputs.
RDCost rd_cost(long long ssd, int rate_bits, double lambda);

// Exhaustive baseline: evaluates every mode available to this macroblock
// (P8x8 with all sub-modes, chosen greedily per quadrant) and returns the
// global minimum-J decision, ties broken in canonical mode order.
MBDecision full_search_decide(const MbContext& ctx);

}  // namespace svcenc
