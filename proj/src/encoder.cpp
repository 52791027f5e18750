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
#include "svcenc/encoder.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "svcenc/common.hpp"
#include "svcenc/fmd.hpp"
#include "svcenc/gop.hpp"
#include "svcenc/layers.hpp"
#include "svcenc/rd.hpp"

namespace svcenc {

namespace {

void validate(const std::vector<Frame>& input, const EncoderConfig& cfg) {
  if (input.empty()) {
    throw ConfigError("no frames to encode");
  }
  if (cfg.width % 16 != 0 || cfg.height % 16 != 0 || cfg.width <= 0 ||
      cfg.height <= 0) {
    throw ConfigError("picture dimensions must be positive multiples of 16");
  }
  for (const Frame& f : input) {
    if (f.y.width != cfg.width || f.y.height != cfg.height) {
      throw ConfigError("input frame size does not match configuration");
    }
  }
  if (cfg.layer_qp.empty() || cfg.layer_qp.size() > 4) {
    throw ConfigError("layer count must be between 1 and 4");
  }
  for (size_t i = 0; i < cfg.layer_qp.size(); ++i) {
    if (cfg.layer_qp[i] < 0 || cfg.layer_qp[i] > 51) {
      throw ConfigError("qp out of range [0, 51]");
    }
    if (i > 0 && cfg.layer_qp[i] >= cfg.layer_qp[i - 1]) {
      throw ConfigError("qp must strictly decrease from base to top layer");
    }
  }
  if (cfg.search_range < 1 || cfg.search_range > 64) {
    throw ConfigError("search_range must be in [1, 64]");
  }
  if (cfg.fps <= 0.0) {
    throw ConfigError("fps must be positive");
  }
  if (cfg.threads < 1) {
    throw ConfigError("threads must be >= 1");
  }
}

// Chroma follows the luma decision: motion-compensated with halved vectors
// for inter macroblocks, DC-predicted from coded neighbors for intra ones.
// No chroma residual is coded; distortion and rate stay luma-only.
void reconstruct_chroma(LayerContext& layer, const PictureInfo& pic,
                        const MBDecision& d, int mb_x, int mb_y) {
  Frame& frame = layer.recon[pic.display];
  const Frame* ref =
      pic.ref0 >= 0 ? &layer.recon[pic.ref0] : nullptr;
  const int cx = mb_x * 8, cy = mb_y * 8;

  Plane* dst[2] = {&frame.cb, &frame.cr};
  if (is_inter(d.mode) && ref) {
    const Plane* src[2] = {&ref->cb, &ref->cr};
    const auto parts = partition_layout(d.mode, d.sub_modes, d.mvs);
    for (int p = 0; p < 2; ++p) {
      for (const PartitionMv& part : parts) {
        const int bx = cx + part.x / 2, by = cy + part.y / 2;
        for (int r = 0; r < part.h / 2; ++r) {
          for (int c = 0; c < part.w / 2; ++c) {
            dst[p]->at(bx + c, by + r) = src[p]->clamped(
                bx + c + part.mv.dx / 2, by + r + part.mv.dy / 2);
          }
        }
      }
    }
    return;
  }

  for (Plane* plane : dst) {
    int sum = 0, n = 0;
    if (mb_y > 0) {
      for (int c = 0; c < 8; ++c) sum += plane->at(cx + c, cy - 1);
      n += 8;
    }
    if (mb_x > 0) {
      for (int r = 0; r < 8; ++r) sum += plane->at(cx - 1, cy + r);
      n += 8;
    }
    const uint8_t dc = n == 0 ? 128 : static_cast<uint8_t>((sum + n / 2) / n);
    for (int r = 0; r < 8; ++r) {
      std::memset(plane->row(cy + r) + cx, dc, 8);
    }
  }
}

}  // namespace

const char* policy_name(Policy p) {
  return p == Policy::kFull ? "full" : "fast";
}

Policy parse_policy(const std::string& name) {
  if (name == "full") return Policy::kFull;
  if (name == "fast") return Policy::kFast;
  throw ConfigError("unknown policy: " + name);
}

RunStats encode_sequence(const std::vector<Frame>& input,
                         const EncoderConfig& cfg, Policy policy,
                         const MbObserver& observer) {
  validate(input, cfg);
  const int frame_count = static_cast<int>(input.size());
  const int layer_count = static_cast<int>(cfg.layer_qp.size());
  const GopPlan plan = build_gop(frame_count, cfg.gop_size);

#ifdef _OPENMP
  if (cfg.threads > 1) omp_set_num_threads(cfg.threads);
#endif
  const bool parallel = cfg.threads > 1;

  std::vector<LayerContext> layers;
  layers.reserve(layer_count);
  for (int l = 0; l < layer_count; ++l) {
    layers.push_back(
        make_layer(l, cfg.layer_qp[l], frame_count, cfg.width, cfg.height));
  }

  RunStats stats;
  stats.policy = policy_name(policy);
  stats.sequence = cfg.sequence_name;
  stats.width = cfg.width;
  stats.height = cfg.height;
  stats.frames = frame_count;
  stats.gop_size = cfg.gop_size;
  stats.layer_qp = cfg.layer_qp;
  stats.search_range = cfg.search_range;
  stats.fps = cfg.fps;

  const auto t0 = std::chrono::steady_clock::now();

  for (int l = 0; l < layer_count; ++l) {
    LayerContext& layer = layers[l];
    const double lambda = lambda_mode(layer.qp);
    const int mb_cols = cfg.width / 16, mb_rows = cfg.height / 16;

    for (int display : plan.coding_order) {
      const PictureInfo& pic = plan.picture(display);
      Frame& recon = layer.recon[display];
      recon = make_frame(cfg.width, cfg.height);
      recon.display_index = display;
      recon.temporal_level = pic.temporal_level;
      recon.picture_type = pic.type;

      DecisionGrid& grid = layer.decisions[display];
      FrameRecord record;
      record.layer = l;
      record.display = display;

      for (int mb_y = 0; mb_y < mb_rows; ++mb_y) {
        for (int mb_x = 0; mb_x < mb_cols; ++mb_x) {
          MbContext ctx;
          ctx.mb_x = mb_x;
          ctx.mb_y = mb_y;
          ctx.display_index = display;
          ctx.source = &input[display].y;
          ctx.recon = &recon.y;
          ctx.ref0 = pic.ref0 >= 0 ? &layer.recon[pic.ref0].y : nullptr;
          ctx.ref1 = pic.ref1 >= 0 ? &layer.recon[pic.ref1].y : nullptr;
          ctx.cur_grid = &grid;
          ctx.prev_grid =
              pic.ref0 >= 0 ? &layer.decisions[pic.ref0] : nullptr;
          ctx.ref0_grid = ctx.prev_grid;
          ctx.ref1_grid =
              pic.ref1 >= 0 ? &layer.decisions[pic.ref1] : nullptr;
          ctx.lower_grid =
              l > 0 ? &layers[l - 1].decisions[display] : nullptr;
          ctx.ptype = pic.type;
          ctx.layer_id = l;
          ctx.qp = layer.qp;
          ctx.lambda = lambda;
          ctx.search_range = cfg.search_range;
          ctx.parallel_kernels = parallel;

          MBDecision d = policy == Policy::kFull
                             ? full_search_decide(ctx)
                             : (l == 0 ? decide_base_layer(ctx)
                                       : decide_enh_layer(ctx));

          for (int r = 0; r < 16; ++r) {
            std::memcpy(recon.y.row(mb_y * 16 + r) + mb_x * 16,
                        d.recon.data() + r * 16, 16);
          }
          reconstruct_chroma(layer, pic, d, mb_x, mb_y);

          record.bits += d.cost.rate_bits;
          record.evaluations += d.evaluated_count;
          grid.put(mb_x, mb_y, std::move(d));
          if (observer) {
            observer(ctx, *grid.at(mb_x, mb_y));
          }
        }
      }

      layer.frame_done[display] = 1;
      record.y_psnr_db = psnr(input[display].y, recon.y);
      stats.frame_records.push_back(record);
    }
  }

  stats.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  std::sort(stats.frame_records.begin(), stats.frame_records.end(),
            [](const FrameRecord& a, const FrameRecord& b) {
              return a.layer != b.layer ? a.layer < b.layer
                                        : a.display < b.display;
            });

  const double duration_s = frame_count / cfg.fps;
  long long total_bits = 0;
  double psnr_sum = 0.0;
  for (const FrameRecord& r : stats.frame_records) {
    stats.total_rdc_evaluations += r.evaluations;
    total_bits += r.bits;
    psnr_sum += r.y_psnr_db;
  }
  stats.mean_y_psnr_db = psnr_sum / stats.frame_records.size();
  stats.bitrate_kbps = static_cast<double>(total_bits) / duration_s / 1000.0;

  long long cumulative_bits = 0;
  for (int l = 0; l < layer_count; ++l) {
    LayerSummary summary;
    summary.layer = l;
    summary.qp = cfg.layer_qp[l];
    double layer_psnr = 0.0;
    for (const FrameRecord& r : stats.frame_records) {
      if (r.layer != l) continue;
      summary.bits += r.bits;
      layer_psnr += r.y_psnr_db;
    }
    summary.mean_y_psnr_db = layer_psnr / frame_count;
    cumulative_bits += summary.bits;
    summary.cumulative_kbps =
        static_cast<double>(cumulative_bits) / duration_s / 1000.0;
    stats.layer_summaries.push_back(summary);
  }

  return stats;
}

}  // namespace svcenc
