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

#include <iosfwd>
#include <string>
#include <vector>

namespace svcenc {

struct FrameRecord {
  int layer = 0;
  int display = 0;
  double y_psnr_db = 0.0;
  long long bits = 0;
  long long evaluations = 0;
};

struct LayerSummary {
  int layer = 0;
  int qp = 0;
  double mean_y_psnr_db = 0.0;
  long long bits = 0;
  double cumulative_kbps = 0.0;  // rate of this layer plus everything below
};

// Per-run aggregates for one policy over one sequence.
struct RunStats {
  std::string policy;    // "full" or "fast"
  std::string sequence;
  int width = 0;
  int height = 0;
  int frames = 0;
  int gop_size = 0;
  std::vector<int> layer_qp;
  int search_range = 0;
  double fps = 30.0;

  long long total_rdc_evaluations = 0;
  double wall_time_s = 0.0;
  double mean_y_psnr_db = 0.0;   // mean of per-frame luma PSNR over all layers
  double bitrate_kbps = 0.0;     // total estimated bits / duration
  std::vector<FrameRecord> frame_records;
  std::vector<LayerSummary> layer_summaries;
};

// Time saving in percent, positive when the proposed run is faster:
// (baseline - proposed) / baseline * 100. Baseline must be positive.
double delta_time(double baseline_s, double proposed_s);

// proposed - baseline, in dB.
double delta_psnr(double baseline_db, double proposed_db);

// Bit saving in percent, positive when the proposed run spends fewer bits:
// (baseline - proposed) / baseline * 100. Baseline must be positive.
double delta_bitrate(double baseline_kbps, double proposed_kbps);

// Same positive-is-saving convention for RDC evaluation counts.
double delta_evaluations(long long baseline, long long proposed);

struct DeltaReport {
  double delta_time_pct = 0.0;
  double delta_psnr_db = 0.0;
  double delta_bitrate_pct = 0.0;
  double delta_evaluations_pct = 0.0;
};

// Both runs must describe the same sequence and configuration.
DeltaReport make_delta_report(const RunStats& baseline,
                              const RunStats& proposed);

// One CSV row per sequence comparing the full-search baseline against the
// fast policy: absolute columns plus the deltas recomputable from them.
void write_comparison_csv(std::ostream& out, const RunStats& baseline,
                          const RunStats& proposed);

// Rate/quality pairs per quantizer for RD-curve plotting.
void write_rd_curve_csv(std::ostream& out,
                        const std::vector<const RunStats*>& runs);

}  // namespace svcenc
