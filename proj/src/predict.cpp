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
#include "svcenc/predict.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>

#include "svcenc/bits.hpp"
#include "svcenc/kernels.hpp"

namespace svcenc {

namespace {

inline uint8_t clamp_pixel(int v) {
  return static_cast<uint8_t>(v < 0 ? 0 : (v > 255 ? 255 : v));
}

// Motion compensation with border extension.
void mc_block(const Plane& ref, int px, int py, int w, int h, MotionVector mv,
              uint8_t* out, int out_stride) {
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      out[r * out_stride + c] = ref.clamped(px + mv.dx + c, py + mv.dy + r);
    }
  }
}

// Transform/quantize/reconstruct a w x h region in 4x4 tiles. Appends the
// level blocks and returns their coefficient bits.
int code_region(const uint8_t* src, int src_stride, const uint8_t* pred,
                int pred_stride, int w, int h, int qp, uint8_t* out,
                int out_stride, std::vector<Block4x4>& levels_out) {
  int bits = 0;
  for (int by = 0; by < h; by += 4) {
    for (int bx = 0; bx < w; bx += 4) {
      Block4x4 residual;
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
          residual[r * 4 + c] =
              static_cast<int>(src[(by + r) * src_stride + bx + c]) -
              static_cast<int>(pred[(by + r) * pred_stride + bx + c]);
        }
      }
      const Block4x4 levels = transform_quant(residual, qp);
      const Block4x4 recon_res = inverse_quant_transform(levels, qp);
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
          out[(by + r) * out_stride + bx + c] = clamp_pixel(
              static_cast<int>(pred[(by + r) * pred_stride + bx + c]) +
              recon_res[r * 4 + c]);
        }
      }
      bits += coeff_bits(levels);
      levels_out.push_back(levels);
    }
  }
  return bits;
}

std::optional<MotionVector> neighbor_mv(const DecisionGrid* grid, int mb_x,
                                        int mb_y) {
  if (!grid) return std::nullopt;
  const MBDecision* d = grid->at(mb_x, mb_y);
  if (!d || !is_inter(d->mode) || d->mvs.empty()) return std::nullopt;
  return d->mvs.front();
}

MotionVector mv_predictor(const MbContext& ctx) {
  return skip_mv_predictor(neighbor_mv(ctx.cur_grid, ctx.mb_x - 1, ctx.mb_y),
                           neighbor_mv(ctx.cur_grid, ctx.mb_x, ctx.mb_y - 1),
                           neighbor_mv(ctx.cur_grid, ctx.mb_x + 1,
                                       ctx.mb_y - 1));
}

// Motion inherited by DIRECT quadrants: reference picture 0's co-located
// decision when it carries one.
MotionVector colocated_mv(const MbContext& ctx) {
  if (const MBDecision* d =
          ctx.ref0_grid ? ctx.ref0_grid->at(ctx.mb_x, ctx.mb_y) : nullptr) {
    if (is_inter(d->mode) && !d->mvs.empty()) return d->mvs.front();
  }
  return {0, 0};
}

struct RegionOutcome {
  std::vector<MotionVector> mvs;
  std::vector<MotionVector> mvds;
  std::vector<Block4x4> levels;
  std::array<uint8_t, 256> recon{};  // region written at its MB offset
  long long ssd = 0;
  int bits = 0;  // mvd + coefficient bits (headers excluded)
};

// Search + code one inter partition at MB-relative (rx, ry).
void inter_partition(const MbContext& ctx, int rx, int ry, int w, int h,
                     MotionVector pred_mv, RegionOutcome& out) {
  const int px = ctx.px() + rx, py = ctx.py() + ry;
  const uint8_t* src = ctx.source->row(py) + px;
  auto [mv, sad] =
      motion_search(src, ctx.source->width, w, h, *ctx.ref0, px, py, {0, 0},
                    ctx.search_range, ctx.parallel_kernels);
  (void)sad;
  uint8_t pred[256];
  mc_block(*ctx.ref0, px, py, w, h, mv, pred, 16);
  out.bits += code_region(src, ctx.source->width, pred, 16, w, h, ctx.qp,
                          out.recon.data() + ry * 16 + rx, 16, out.levels);
  out.mvs.push_back(mv);
  const MotionVector mvd{mv.dx - pred_mv.dx, mv.dy - pred_mv.dy};
  out.mvds.push_back(mvd);
  out.bits += se_bits(mvd.dx) + se_bits(mvd.dy);
}

// Code one P8x8 quadrant with a fixed sub-mode.
RegionOutcome code_quadrant(const MbContext& ctx, int qx, int qy, SubMode sub,
                            MotionVector pred_mv, MotionVector direct_mv) {
  RegionOutcome out;
  const int px = ctx.px() + qx, py = ctx.py() + qy;
  const uint8_t* src = ctx.source->row(py) + px;
  switch (sub) {
    case SubMode::kDirect8x8: {
      uint8_t pred[256];
      mc_block(*ctx.ref0, px, py, 8, 8, direct_mv, pred, 16);
      out.bits += code_region(src, ctx.source->width, pred, 16, 8, 8, ctx.qp,
                              out.recon.data() + qy * 16 + qx, 16, out.levels);
      out.mvs.push_back(direct_mv);
      break;
    }
    case SubMode::kSub8x8:
      inter_partition(ctx, qx, qy, 8, 8, pred_mv, out);
      break;
    case SubMode::kSub8x4:
      inter_partition(ctx, qx, qy, 8, 4, pred_mv, out);
      inter_partition(ctx, qx, qy + 4, 8, 4, pred_mv, out);
      break;
    case SubMode::kSub4x8:
      inter_partition(ctx, qx, qy, 4, 8, pred_mv, out);
      inter_partition(ctx, qx + 4, qy, 4, 8, pred_mv, out);
      break;
    case SubMode::kSub4x4:
      inter_partition(ctx, qx, qy, 4, 4, pred_mv, out);
      inter_partition(ctx, qx + 4, qy, 4, 4, pred_mv, out);
      inter_partition(ctx, qx, qy + 4, 4, 4, pred_mv, out);
      inter_partition(ctx, qx + 4, qy + 4, 4, 4, pred_mv, out);
      break;
  }
  out.ssd = kernels::ssd_block(src, ctx.source->width,
                               out.recon.data() + qy * 16 + qx, 16, 8, 8);
  return out;
}

// Neighbor edges for an intra block of `size` at MB-relative (bx, by).
// Inside the MB the partially reconstructed local buffer supplies them; at
// the MB boundary the current frame reconstruction does.
struct IntraEdges {
  uint8_t top[16];
  uint8_t left[16];
  bool has_top = false;
  bool has_left = false;
};

IntraEdges gather_edges(const MbContext& ctx, const uint8_t* local, int size,
                        int bx, int by) {
  IntraEdges e;
  const int px = ctx.px() + bx, py = ctx.py() + by;
  if (by > 0) {
    std::memcpy(e.top, local + (by - 1) * 16 + bx, size);
    e.has_top = true;
  } else if (ctx.mb_y > 0) {
    std::memcpy(e.top, ctx.recon->row(py - 1) + px, size);
    e.has_top = true;
  }
  if (bx > 0) {
    for (int r = 0; r < size; ++r) e.left[r] = local[(by + r) * 16 + bx - 1];
    e.has_left = true;
  } else if (ctx.mb_x > 0) {
    for (int r = 0; r < size; ++r) e.left[r] = ctx.recon->at(px - 1, py + r);
    e.has_left = true;
  }
  return e;
}

// Per-block direction choice by local RD cost; commits the winner into the
// local reconstruction buffer and the outcome.
void intra_block(const MbContext& ctx, uint8_t* local, int size, int bx,
                 int by, RegionOutcome& out) {
  const IntraEdges e = gather_edges(ctx, local, size, bx, by);
  const uint8_t* src_base = ctx.source->row(ctx.py() + by) + ctx.px() + bx;

  bool have = false;
  double best_j = 0.0;
  int best_bits = 0;
  uint8_t best_recon[256];
  std::vector<Block4x4> best_levels;

  for (IntraDir dir :
       {IntraDir::kDC, IntraDir::kHorizontal, IntraDir::kVertical}) {
    uint8_t pred[256];
    if (!intra_predict(size, e.has_top ? e.top : nullptr,
                       e.has_left ? e.left : nullptr, dir, pred, 16)) {
      continue;
    }
    uint8_t recon[256];
    std::vector<Block4x4> levels;
    const int bits = code_region(src_base, ctx.source->width, pred, 16, size,
                                 size, ctx.qp, recon, 16, levels);
    const long long ssd =
        kernels::ssd_block(src_base, ctx.source->width, recon, 16, size, size);
    const double j = static_cast<double>(ssd) + ctx.lambda * bits;
    if (!have || j < best_j) {
      have = true;
      best_j = j;
      best_bits = bits;
      std::memcpy(best_recon, recon, sizeof(recon));
      best_levels = std::move(levels);
    }
  }
  assert(have && "DC is always available");
  for (int r = 0; r < size; ++r) {
    std::memcpy(local + (by + r) * 16 + bx, best_recon + r * 16, size);
  }
  out.bits += best_bits;
  out.levels.insert(out.levels.end(), best_levels.begin(), best_levels.end());
}

}  // namespace

bool intra_predict(int size, const uint8_t* top, const uint8_t* left,
                   IntraDir dir, uint8_t* out, int out_stride) {
  switch (dir) {
    case IntraDir::kDC: {
      int sum = 0, n = 0;
      if (top) {
        for (int i = 0; i < size; ++i) sum += top[i];
        n += size;
      }
      if (left) {
        for (int i = 0; i < size; ++i) sum += left[i];
        n += size;
      }
      const uint8_t dc =
          n == 0 ? 128 : static_cast<uint8_t>((sum + n / 2) / n);
      for (int r = 0; r < size; ++r) {
        std::memset(out + r * out_stride, dc, size);
      }
      return true;
    }
    case IntraDir::kHorizontal:
      if (!left) return false;
      for (int r = 0; r < size; ++r) {
        std::memset(out + r * out_stride, left[r], size);
      }
      return true;
    case IntraDir::kVertical:
      if (!top) return false;
      for (int r = 0; r < size; ++r) {
        std::memcpy(out + r * out_stride, top, size);
      }
      return true;
  }
  return false;
}

std::pair<MotionVector, long> motion_search(const uint8_t* source,
                                            int src_stride, int w, int h,
                                            const Plane& reference, int x,
                                            int y, MotionVector center,
                                            int search_range, bool parallel) {
  const kernels::MatchResult m = kernels::full_search(
      reference, source, src_stride, w, h, x, y, center, search_range,
      parallel);
  return {m.mv, m.sad};
}

MotionVector skip_mv_predictor(std::optional<MotionVector> left,
                               std::optional<MotionVector> top,
                               std::optional<MotionVector> topright) {
  std::vector<MotionVector> avail;
  for (const auto& p : {left, top, topright}) {
    if (p) avail.push_back(*p);
  }
  switch (avail.size()) {
    case 0: return {0, 0};
    case 1: return avail[0];
    case 2:
      return {(avail[0].dx + avail[1].dx) / 2, (avail[0].dy + avail[1].dy) / 2};
    default: {
      auto median3 = [](int a, int b, int c) {
        return std::max(std::min(a, b), std::min(std::max(a, b), c));
      };
      return {median3(avail[0].dx, avail[1].dx, avail[2].dx),
              median3(avail[0].dy, avail[1].dy, avail[2].dy)};
    }
  }
}

int estimate_bits(const CandidateResult& candidate) {
  int bits = mode_header_bits(candidate.mode);
  if (candidate.mode == Mode::kP8x8) {
    bits += 4 * kSubModeHeaderBits;
  }
  for (const MotionVector& mvd : candidate.mvds) {
    bits += se_bits(mvd.dx) + se_bits(mvd.dy);
  }
  for (const Block4x4& block : candidate.levels) {
    bits += coeff_bits(block);
  }
  return bits;
}

std::optional<CandidateResult> encode_mb_with_mode(const MbContext& ctx,
                                                   Mode mode,
                                                   SubModeMask submodes) {
  if (is_inter(mode) &&
      (ctx.ptype == PictureType::kI || ctx.ref0 == nullptr)) {
    return std::nullopt;
  }

  CandidateResult result;
  result.mode = mode;
  const int px = ctx.px(), py = ctx.py();
  const uint8_t* src16 = ctx.source->row(py) + px;
  const MotionVector pred_mv = is_inter(mode) ? mv_predictor(ctx)
                                              : MotionVector{0, 0};

  switch (mode) {
    case Mode::kSkip: {
      // Predicted vector, no residual, no vector transmitted.
      mc_block(*ctx.ref0, px, py, 16, 16, pred_mv, result.recon.data(), 16);
      result.mvs.push_back(pred_mv);
      break;
    }
    case Mode::kInter16x16: {
      RegionOutcome out;
      inter_partition(ctx, 0, 0, 16, 16, pred_mv, out);
      result.mvs = std::move(out.mvs);
      result.mvds = std::move(out.mvds);
      result.levels = std::move(out.levels);
      result.recon = out.recon;
      break;
    }
    case Mode::kInter16x8:
    case Mode::kInter8x16: {
      RegionOutcome out;
      if (mode == Mode::kInter16x8) {
        inter_partition(ctx, 0, 0, 16, 8, pred_mv, out);
        inter_partition(ctx, 0, 8, 16, 8, pred_mv, out);
      } else {
        inter_partition(ctx, 0, 0, 8, 16, pred_mv, out);
        inter_partition(ctx, 8, 0, 8, 16, pred_mv, out);
      }
      result.mvs = std::move(out.mvs);
      result.mvds = std::move(out.mvds);
      result.levels = std::move(out.levels);
      result.recon = out.recon;
      break;
    }
    case Mode::kP8x8: {
      const MotionVector direct_mv = colocated_mv(ctx);
      for (int q = 0; q < 4; ++q) {
        const int qx = (q & 1) * 8, qy = (q >> 1) * 8;
        bool have = false;
        double best_j = 0.0;
        SubMode best_sub = SubMode::kDirect8x8;
        RegionOutcome best;
        for (SubMode sub :
             {SubMode::kDirect8x8, SubMode::kSub8x8, SubMode::kSub8x4,
              SubMode::kSub4x8, SubMode::kSub4x4}) {
          if (!submode_allowed(submodes, sub)) continue;
          RegionOutcome out =
              code_quadrant(ctx, qx, qy, sub, pred_mv, direct_mv);
          const double j = static_cast<double>(out.ssd) +
                           ctx.lambda * (kSubModeHeaderBits + out.bits);
          if (!have || j < best_j) {
            have = true;
            best_j = j;
            best_sub = sub;
            best = std::move(out);
          }
        }
        assert(have && "empty sub-mode set");
        result.sub_modes[q] = best_sub;
        result.mvs.insert(result.mvs.end(), best.mvs.begin(), best.mvs.end());
        result.mvds.insert(result.mvds.end(), best.mvds.begin(),
                           best.mvds.end());
        result.levels.insert(result.levels.end(), best.levels.begin(),
                             best.levels.end());
        for (int r = 0; r < 8; ++r) {
          std::memcpy(result.recon.data() + (qy + r) * 16 + qx,
                      best.recon.data() + (qy + r) * 16 + qx, 8);
        }
      }
      break;
    }
    case Mode::kIntra16x16:
    case Mode::kIntra8x8:
    case Mode::kIntra4x4: {
      const int size =
          mode == Mode::kIntra16x16 ? 16 : (mode == Mode::kIntra8x8 ? 8 : 4);
      RegionOutcome out;
      uint8_t local[256];
      for (int by = 0; by < 16; by += size) {
        for (int bx = 0; bx < 16; bx += size) {
          intra_block(ctx, local, size, bx, by, out);
        }
      }
      std::memcpy(result.recon.data(), local, 256);
      result.levels = std::move(out.levels);
      break;
    }
  }

  result.ssd = kernels::ssd_block(src16, ctx.source->width,
                                  result.recon.data(), 16, 16, 16);
  result.rate_bits = estimate_bits(result);
  return result;
}

std::vector<PartitionMv> partition_layout(Mode mode,
                                          const std::array<SubMode, 4>& subs,
                                          const std::vector<MotionVector>& mvs) {
  std::vector<PartitionMv> parts;
  size_t i = 0;
  auto take = [&](int x, int y, int w, int h) {
    parts.push_back({x, y, w, h, mvs[i++]});
  };
  switch (mode) {
    case Mode::kSkip:
    case Mode::kInter16x16:
      take(0, 0, 16, 16);
      break;
    case Mode::kInter16x8:
      take(0, 0, 16, 8);
      take(0, 8, 16, 8);
      break;
    case Mode::kInter8x16:
      take(0, 0, 8, 16);
      take(8, 0, 8, 16);
      break;
    case Mode::kP8x8:
      for (int q = 0; q < 4; ++q) {
        const int qx = (q & 1) * 8, qy = (q >> 1) * 8;
        switch (subs[q]) {
          case SubMode::kDirect8x8:
          case SubMode::kSub8x8:
            take(qx, qy, 8, 8);
            break;
          case SubMode::kSub8x4:
            take(qx, qy, 8, 4);
            take(qx, qy + 4, 8, 4);
            break;
          case SubMode::kSub4x8:
            take(qx, qy, 4, 8);
            take(qx + 4, qy, 4, 8);
            break;
          case SubMode::kSub4x4:
            take(qx, qy, 4, 4);
            take(qx + 4, qy, 4, 4);
            take(qx, qy + 4, 4, 4);
            take(qx + 4, qy + 4, 4, 4);
            break;
        }
      }
      break;
    default:
      break;  // intra carries no motion
  }
  return parts;
}

}  // namespace svcenc
