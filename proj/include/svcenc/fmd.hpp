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

#include <optional>
#include <vector>

#include "svcenc/layers.hpp"
#include "svcenc/modes.hpp"
#include "svcenc/predict.hpp"
#include "svcenc/rd.hpp"

// Fast mode decision: ranks candidate modes by how often the causal
// neighborhood picked them, prunes through the mode correlation between the
// reference pictures and the current macroblock, and stops a candidate walk
// early once a cost undercuts the per-layer threshold.
namespace svcenc {

// The causal reference set feeding the probability model: left, upper-left,
// upper, upper-right neighbors of the current frame plus the co-located
// macroblock of the nearest already coded predecessor frame. Entries are
// finalized decisions; border and first-frame members are simply missing.
struct NeighborSet {
  std::vector<const MBDecision*> entries;
};

// x and y are pixel coordinates of the macroblock origin (multiples of 16).
NeighborSet build_neighbor_set(const DecisionGrid& cur,
                               const DecisionGrid* prev, int x, int y);

struct DesiredEntry {
  Mode mode;
  double probability;
};

// Candidate list ordered by descending neighborhood probability, ties and
// the padded tail in canonical order. Modes the neighborhood never used get
// probability zero; probabilities over the observed modes sum to one.
std::vector<DesiredEntry> desired_mode_list(const NeighborSet& p);

// Candidate set from the modes of the two reference-picture co-located
// macroblocks. Always contains SKIP and INTER_16x16; an absent reference
// contributes nothing and counts as non-SKIP.
std::vector<Mode> correlation_candidates(std::optional<Mode> ref0,
                                         std::optional<Mode> ref1,
                                         int layer_id);

// Early-acceptance threshold for enhancement layers: gamma(layer) * j_min.
double threshold(double j_min, int layer_id);

// Base-layer acceptance rule: stop the walk when the newest cost strictly
// undercuts the minimum seen so far.
bool early_accept(double j_curr, double j_min);

// Base-layer decision (Step 1 flow): correlation-pruned candidate sets when
// the co-located macroblock of the predecessor frame is inter coded,
// otherwise an unpruned walk ending in the intra check.
MBDecision decide_base_layer(const MbContext& ctx);

// Enhancement-layer decision (Steps 2-5): reference-frame correlation
// candidates when the lower layer coded this macroblock as inter, otherwise
// the ranked desired-mode walk with sub-mode refinement and intra fallback.
MBDecision decide_enh_layer(const MbContext& ctx);

}  // namespace svcenc
