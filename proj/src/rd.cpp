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
#include "svcenc/rd.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "svcenc/common.hpp"
#include "svcenc/predict.hpp"

namespace svcenc {

double lambda_mode(int qp) {
  if (qp < 0 || qp > 51) {
    throw ConfigError("qp out of range [0, 51]");
  }
  return 0.85 * std::exp2((qp - 12) / 3.0);
}

RDCost rd_cost(long long ssd, int rate_bits, double lambda) {
  if (ssd < 0 || rate_bits < 0 || lambda < 0.0) {
    throw std::invalid_argument("rd_cost: negative input");
  }
  RDCost c;
  c.ssd = ssd;
  c.rate_bits = rate_bits;
  c.lambda = lambda;
  c.j = static_cast<double>(ssd) + lambda * rate_bits;
  return c;
}

MBDecision full_search_decide(const MbContext& ctx) {
  std::optional<CandidateResult> best;
  RDCost best_cost;
  int count = 0;
  for (Mode mode : kCanonicalModes) {
    std::optional<CandidateResult> cand = encode_mb_with_mode(ctx, mode);
    if (!cand) continue;
    ++count;
    const RDCost cost = rd_cost(cand->ssd, cand->rate_bits, ctx.lambda);
    // Strict improvement keeps the earlier (canonically smaller) mode on ties.
    if (!best || cost.j < best_cost.j) {
      best = std::move(cand);
      best_cost = cost;
    }
  }
  if (!best) {
    throw std::logic_error("no candidate mode available for macroblock");
  }
  MBDecision d;
  d.mode = best->mode;
  d.sub_modes = best->sub_modes;
  d.mvs = std::move(best->mvs);
  d.cost = best_cost;
  d.recon = best->recon;
  d.evaluated_count = count;
  return d;
}

}  // namespace svcenc
