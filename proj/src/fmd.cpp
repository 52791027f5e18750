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
#include "svcenc/fmd.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

#include "svcenc/common.hpp"

namespace svcenc {

namespace {

std::optional<Mode> grid_mode(const DecisionGrid* grid, int mb_x, int mb_y) {
  if (!grid) return std::nullopt;
  const MBDecision* d = grid->at(mb_x, mb_y);
  if (!d) return std::nullopt;
  return d->mode;
}

// Candidate walk shared by both decision layers. Each mode is evaluated at
// most once per macroblock; the final decision is the minimum-J candidate
// among everything evaluated, ties in canonical order.
class CandidateWalk {
 public:
  explicit CandidateWalk(const MbContext& ctx) : ctx_(ctx) {}

  // Acceptance tests start once `count` evaluations exist; the correlation
  // branches compute the SKIP/16x16 pair unconditionally first.
  void require_prior(int count) { min_prior_ = count; }

  // Returns true when the early-acceptance rule fired and the walk stops.
  bool step(Mode mode, SubModeMask submodes = kAllSubModes,
            bool allow_accept = true) {
    const int rank = mode_rank(mode);
    if (tried_[rank]) return accepted_;
    tried_[rank] = true;
    std::optional<CandidateResult> cand =
        encode_mb_with_mode(ctx_, mode, submodes);
    if (!cand) return accepted_;
    const RDCost cost = rd_cost(cand->ssd, cand->rate_bits, ctx_.lambda);

    const bool fire = allow_accept && evaluated_ >= min_prior_ &&
                      (ctx_.layer_id == 0
                           ? early_accept(cost.j, j_min_)
                           : cost.j < threshold(j_min_, ctx_.layer_id));

    ++evaluated_;
    if (!best_ || cost.j < best_cost_.j ||
        (cost.j == best_cost_.j && rank < mode_rank(best_->mode))) {
      best_ = std::move(cand);
      best_cost_ = cost;
    }
    j_min_ = std::min(j_min_, cost.j);
    if (fire) accepted_ = true;
    return accepted_;
  }

  bool accepted() const { return accepted_; }
  int evaluated() const { return evaluated_; }
  bool best_is(Mode m) const { return best_ && best_->mode == m; }

  // True once a whole-partition inter mode other than P8x8 leads the walk;
  // such a winner ends the mode hunt, anything else warrants the intra check.
  bool settled_inter() const {
    return best_ && is_inter(best_->mode) && best_->mode != Mode::kP8x8;
  }

  MBDecision finish() const {
    if (!best_) {
      throw std::logic_error("candidate walk evaluated nothing");
    }
    MBDecision d;
    d.mode = best_->mode;
    d.sub_modes = best_->sub_modes;
    d.mvs = best_->mvs;
    d.cost = best_cost_;
    d.recon = best_->recon;
    d.evaluated_count = evaluated_;
    return d;
  }

 private:
  const MbContext& ctx_;
  std::array<bool, kModeCount> tried_{};
  std::optional<CandidateResult> best_;
  RDCost best_cost_{};
  // running minimum over prior evaluations, the J_min of the acceptance rule
  double j_min_ = std::numeric_limits<double>::infinity();
  int evaluated_ = 0;
  int min_prior_ = 1;
  bool accepted_ = false;
};

// Remaining inter modes without early acceptance, then the intra check
// unless a whole-partition inter winner settled the walk. A P8x8 winner is
// the signature of content the inter set handles poorly, the same cue the
// sub-mode refinement keys on.
void unpruned_tail(CandidateWalk& walk, bool full_inter_set) {
  if (full_inter_set) {
    walk.step(Mode::kInter16x8, kAllSubModes, false);
    walk.step(Mode::kInter8x16, kAllSubModes, false);
  }
  walk.step(Mode::kP8x8, kAllSubModes, false);
  if (!walk.settled_inter()) {
    for (Mode m : kIntraModeOrder) {
      walk.step(m, kAllSubModes, false);
    }
  }
}

// Step 4: the sub-mode search space for a P8x8 walk entry, picked by the
// highest-probability entry of the desired list. Most rows also queue the
// INTRA_8x8 candidate right after.
struct P8x8Refinement {
  SubModeMask mask = kAllSubModes;
  bool try_intra8 = false;
};

P8x8Refinement step4_refinement(Mode first) {
  if (first == Mode::kSkip || first == Mode::kIntra16x16) {
    return {submode_bit(SubMode::kSub8x8), true};
  }
  if (first == Mode::kInter16x8) {
    return {submode_bit(SubMode::kDirect8x8) | submode_bit(SubMode::kSub8x4),
            true};
  }
  if (first == Mode::kInter8x16) {
    return {submode_bit(SubMode::kDirect8x8) | submode_bit(SubMode::kSub4x8),
            true};
  }
  return {kAllSubModes, false};
}

}  // namespace

NeighborSet build_neighbor_set(const DecisionGrid& cur,
                               const DecisionGrid* prev, int x, int y) {
  const int mb_x = x / 16, mb_y = y / 16;
  NeighborSet set;
  const MBDecision* candidates[5] = {
      cur.at(mb_x - 1, mb_y),      // left
      cur.at(mb_x - 1, mb_y - 1),  // upper-left
      cur.at(mb_x, mb_y - 1),      // upper
      cur.at(mb_x + 1, mb_y - 1),  // upper-right
      prev ? prev->at(mb_x, mb_y) : nullptr,
  };
  for (const MBDecision* d : candidates) {
    if (d) set.entries.push_back(d);
  }
  return set;
}

std::vector<DesiredEntry> desired_mode_list(const NeighborSet& p) {
  std::array<int, kModeCount> count{};
  for (const MBDecision* d : p.entries) {
    ++count[mode_rank(d->mode)];
  }
  const int total = static_cast<int>(p.entries.size());

  std::vector<DesiredEntry> list;
  for (Mode m : kCanonicalModes) {
    if (count[mode_rank(m)] > 0) {
      list.push_back(
          {m, static_cast<double>(count[mode_rank(m)]) / total});
    }
  }
  // Canonical pre-order makes the stable sort break probability ties
  // canonically.
  std::stable_sort(list.begin(), list.end(),
                   [](const DesiredEntry& a, const DesiredEntry& b) {
                     return a.probability > b.probability;
                   });
  for (Mode m : kInterModeOrder) {
    if (count[mode_rank(m)] == 0) {
      list.push_back({m, 0.0});
    }
  }
  return list;
}

std::vector<Mode> correlation_candidates(std::optional<Mode> ref0,
                                         std::optional<Mode> ref1,
                                         int layer_id) {
  (void)layer_id;  // the set itself is layer-independent; callers widen it
  const bool skip0 = ref0 && *ref0 == Mode::kSkip;
  const bool skip1 = ref1 && *ref1 == Mode::kSkip;
  if (skip0 && skip1) {
    return {Mode::kSkip, Mode::kInter16x16};
  }
  if (skip0 || skip1) {
    return {Mode::kSkip, Mode::kInter16x16, Mode::kInter16x8,
            Mode::kInter8x16, Mode::kP8x8};
  }
  // Neither reference is SKIP: their own modes plus the adjacent partition
  // sizes, on top of the ever-present {SKIP, 16x16} pair. An intra
  // reference also pulls in P8x8, the inter partition bordering the intra
  // family, so sub-partitioned content stays reachable.
  std::array<bool, kModeCount> in{};
  in[mode_rank(Mode::kSkip)] = true;
  in[mode_rank(Mode::kInter16x16)] = true;
  auto add = [&in](Mode m) {
    const int r = mode_rank(m);
    in[r] = true;
    if (r > 0) in[r - 1] = true;
    if (r + 1 < kModeCount) in[r + 1] = true;
    if (is_intra(m)) in[mode_rank(Mode::kP8x8)] = true;
  };
  if (ref0) add(*ref0);
  if (ref1) add(*ref1);
  std::vector<Mode> out;
  for (Mode m : kCanonicalModes) {
    if (in[mode_rank(m)]) out.push_back(m);
  }
  return out;
}

double threshold(double j_min, int layer_id) {
  if (j_min < 0.0) {
    throw std::invalid_argument("threshold: j_min must be non-negative");
  }
  return gamma_for_layer(layer_id) * j_min;
}

bool early_accept(double j_curr, double j_min) { return j_curr < j_min; }

MBDecision decide_base_layer(const MbContext& ctx) {
  const MBDecision* coloc =
      ctx.prev_grid ? ctx.prev_grid->at(ctx.mb_x, ctx.mb_y) : nullptr;
  CandidateWalk walk(ctx);

  if (coloc && is_inter(coloc->mode)) {
    walk.require_prior(2);
    walk.step(Mode::kSkip);
    walk.step(Mode::kInter16x16);

    const std::optional<Mode> r0 = grid_mode(ctx.ref0_grid, ctx.mb_x, ctx.mb_y);
    const std::optional<Mode> r1 = grid_mode(ctx.ref1_grid, ctx.mb_x, ctx.mb_y);
    const bool skip0 = r0 && *r0 == Mode::kSkip;
    const bool skip1 = r1 && *r1 == Mode::kSkip;
    if (skip0 && skip1) {
      return walk.finish();
    }
    if (skip0 || skip1) {
      // A SKIP win over 16x16 confirms the reference correlation held;
      // only a 16x16 win sends the walk into the finer partitions.
      if (walk.best_is(Mode::kSkip)) {
        return walk.finish();
      }
      for (Mode m : {Mode::kInter16x8, Mode::kInter8x16, Mode::kP8x8}) {
        if (walk.step(m)) break;
      }
      return walk.finish();
    }
    unpruned_tail(walk, /*full_inter_set=*/true);
    return walk.finish();
  }

  // Co-located macroblock absent or intra coded: no inter confidence, so
  // the rectangular sub-partitions are skipped and the intra check decides
  // against the SKIP/16x16/P8x8 trio.
  walk.step(Mode::kSkip, kAllSubModes, false);
  walk.step(Mode::kInter16x16, kAllSubModes, false);
  unpruned_tail(walk, /*full_inter_set=*/false);
  return walk.finish();
}

MBDecision decide_enh_layer(const MbContext& ctx) {
  if (ctx.layer_id < 1) {
    throw std::logic_error("decide_enh_layer called on the base layer");
  }
  if (!ctx.lower_grid) {
    throw SequencingError("enhancement decision before lower layer coded");
  }
  const MBDecision* coloc = ctx.lower_grid->at(ctx.mb_x, ctx.mb_y);
  if (!coloc) {
    throw SequencingError("co-located macroblock not decided in lower layer");
  }

  CandidateWalk walk(ctx);

  if (is_inter(coloc->mode)) {
    walk.require_prior(2);
    const std::optional<Mode> r0 = grid_mode(ctx.ref0_grid, ctx.mb_x, ctx.mb_y);
    const std::optional<Mode> r1 = grid_mode(ctx.ref1_grid, ctx.mb_x, ctx.mb_y);
    const bool skip0 = r0 && *r0 == Mode::kSkip;
    const bool skip1 = r1 && *r1 == Mode::kSkip;
    std::vector<Mode> cands = correlation_candidates(r0, r1, ctx.layer_id);
    // Layers two and up also look at the modes of the upper, left, right
    // and bottom surroundings of the co-located macroblock in both
    // reference pictures.
    if (ctx.layer_id >= 2) {
      std::array<bool, kModeCount> have{};
      for (Mode m : cands) have[mode_rank(m)] = true;
      static constexpr int kOffsets[4][2] = {{0, -1}, {-1, 0}, {1, 0}, {0, 1}};
      std::array<bool, kModeCount> extra{};
      for (const DecisionGrid* grid : {ctx.ref0_grid, ctx.ref1_grid}) {
        if (!grid) continue;
        for (const auto& off : kOffsets) {
          if (const MBDecision* d =
                  grid->at(ctx.mb_x + off[0], ctx.mb_y + off[1])) {
            extra[mode_rank(d->mode)] = true;
          }
        }
      }
      for (Mode m : kCanonicalModes) {
        if (extra[mode_rank(m)] && !have[mode_rank(m)]) cands.push_back(m);
      }
    }
    const bool one_skip = (skip0 || skip1) && !(skip0 && skip1);
    for (size_t i = 0; i < cands.size(); ++i) {
      if (walk.step(cands[i])) break;
      // same rule as the base layer: a SKIP win over 16x16 settles the
      // one-SKIP case without touching the finer partitions
      if (one_skip && i == 1 && walk.best_is(Mode::kSkip)) break;
    }
    return walk.finish();
  }

  // Step 3: ranked desired-mode walk. Acceptance needs two observations
  // before the running minimum means anything, same as the paths above.
  walk.require_prior(2);
  const NeighborSet p =
      build_neighbor_set(*ctx.cur_grid, ctx.prev_grid, ctx.px(), ctx.py());
  const std::vector<DesiredEntry> list = desired_mode_list(p);
  const Mode first = list.front().mode;
  for (const DesiredEntry& entry : list) {
    if (entry.mode == Mode::kP8x8) {
      const P8x8Refinement refine = step4_refinement(first);
      const int before = walk.evaluated();
      if (walk.step(Mode::kP8x8, refine.mask)) break;
      // the companion intra candidate applies only when P8x8 was computed
      if (walk.evaluated() > before && refine.try_intra8 &&
          walk.step(Mode::kIntra8x8)) {
        break;
      }
    } else {
      if (walk.step(entry.mode)) break;
    }
  }

  // Step 5: full intra check when no whole-partition inter winner settled
  // the walk.
  if (!walk.accepted() && !walk.settled_inter()) {
    for (Mode m : kIntraModeOrder) {
      walk.step(m, kAllSubModes, false);
    }
  }
  return walk.finish();
}

}  // namespace svcenc
