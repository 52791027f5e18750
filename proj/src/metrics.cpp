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
#include "svcenc/metrics.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace svcenc {

namespace {

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

void check_comparable(const RunStats& a, const RunStats& b) {
  if (a.sequence != b.sequence || a.width != b.width || a.height != b.height ||
      a.frames != b.frames || a.gop_size != b.gop_size ||
      a.layer_qp != b.layer_qp || a.search_range != b.search_range ||
      a.fps != b.fps) {
    throw std::invalid_argument(
        "runs compare different sequences or configurations");
  }
}

}  // namespace

double delta_time(double baseline_s, double proposed_s) {
  if (baseline_s <= 0.0) {
    throw std::invalid_argument("delta_time: baseline must be positive");
  }
  return (baseline_s - proposed_s) / baseline_s * 100.0;
}

double delta_psnr(double baseline_db, double proposed_db) {
  return proposed_db - baseline_db;
}

double delta_bitrate(double baseline_kbps, double proposed_kbps) {
  if (baseline_kbps <= 0.0) {
    throw std::invalid_argument("delta_bitrate: baseline must be positive");
  }
  return (baseline_kbps - proposed_kbps) / baseline_kbps * 100.0;
}

double delta_evaluations(long long baseline, long long proposed) {
  if (baseline <= 0) {
    throw std::invalid_argument("delta_evaluations: baseline must be positive");
  }
  return static_cast<double>(baseline - proposed) /
         static_cast<double>(baseline) * 100.0;
}

DeltaReport make_delta_report(const RunStats& baseline,
                              const RunStats& proposed) {
  check_comparable(baseline, proposed);
  DeltaReport d;
  d.delta_time_pct = delta_time(baseline.wall_time_s, proposed.wall_time_s);
  d.delta_psnr_db =
      delta_psnr(baseline.mean_y_psnr_db, proposed.mean_y_psnr_db);
  d.delta_bitrate_pct =
      delta_bitrate(baseline.bitrate_kbps, proposed.bitrate_kbps);
  d.delta_evaluations_pct = delta_evaluations(baseline.total_rdc_evaluations,
                                              proposed.total_rdc_evaluations);
  return d;
}

void write_comparison_csv(std::ostream& out, const RunStats& baseline,
                          const RunStats& proposed) {
  const DeltaReport d = make_delta_report(baseline, proposed);
  out << "# positive dtime_pct, devals_pct and dbitrate_pct mean the fast "
         "policy saved time/evaluations/bits vs the full-search baseline; "
         "dpsnr_db = fast - full\n";
  out << "sequence,time_full_s,time_fast_s,dtime_pct,evals_full,evals_fast,"
         "devals_pct,psnr_full_db,psnr_fast_db,dpsnr_db,kbps_full,kbps_fast,"
         "dbitrate_pct\n";
  out << baseline.sequence << ',' << fixed3(baseline.wall_time_s) << ','
      << fixed3(proposed.wall_time_s) << ',' << fixed2(d.delta_time_pct) << ','
      << baseline.total_rdc_evaluations << ','
      << proposed.total_rdc_evaluations << ','
      << fixed2(d.delta_evaluations_pct) << ','
      << fixed2(baseline.mean_y_psnr_db) << ','
      << fixed2(proposed.mean_y_psnr_db) << ',' << fixed2(d.delta_psnr_db)
      << ',' << fixed2(baseline.bitrate_kbps) << ','
      << fixed2(proposed.bitrate_kbps) << ',' << fixed2(d.delta_bitrate_pct)
      << '\n';
}

void write_rd_curve_csv(std::ostream& out,
                        const std::vector<const RunStats*>& runs) {
  out << "qp,kbps,psnr_db,policy\n";
  for (const RunStats* run : runs) {
    for (const LayerSummary& layer : run->layer_summaries) {
      out << layer.qp << ',' << fixed2(layer.cumulative_kbps) << ','
          << fixed2(layer.mean_y_psnr_db) << ',' << run->policy << '\n';
    }
  }
}

}  // namespace svcenc
