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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "svcenc/common.hpp"
#include "svcenc/encoder.hpp"
#include "svcenc/metrics.hpp"
#include "svcenc/synthetic.hpp"
#include "svcenc/yuv.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;

struct CliOptions {
  std::string input;
  std::string synthetic;
  int width = 0;
  int height = 0;
  int frames = 0;
  int gop = 8;
  int layers = 0;
  std::vector<int> qp;
  int range = 8;
  std::string policy = "both";
  double fps = 30.0;
  std::string out = "out";
  int threads = 1;
  uint64_t seed = 1;
};

std::string sequence_label(const CliOptions& opt) {
  if (!opt.synthetic.empty()) return opt.synthetic;
  return std::filesystem::path(opt.input).stem().string();
}

svcenc::EncoderConfig build_config(const CliOptions& opt) {
  if (opt.input.empty() == opt.synthetic.empty()) {
    throw svcenc::ConfigError("pass exactly one of --input or --synthetic");
  }
  if (opt.width <= 0 || opt.height <= 0) {
    throw svcenc::ConfigError("--width and --height are required");
  }
  if (opt.frames < 1) {
    throw svcenc::ConfigError("--frames must be >= 1");
  }

  svcenc::EncoderConfig cfg;
  cfg.width = opt.width;
  cfg.height = opt.height;
  cfg.gop_size = opt.gop;
  cfg.search_range = opt.range;
  cfg.fps = opt.fps;
  cfg.threads = opt.threads;
  cfg.sequence_name = sequence_label(opt);

  static const std::vector<int> kDefaultQp = {40, 34, 28, 22};
  if (!opt.qp.empty()) {
    cfg.layer_qp = opt.qp;
    if (opt.layers > 0 &&
        static_cast<size_t>(opt.layers) != cfg.layer_qp.size()) {
      throw svcenc::ConfigError("--layers disagrees with the number of --qp");
    }
  } else {
    const int n = opt.layers > 0 ? opt.layers : 3;
    if (n > static_cast<int>(kDefaultQp.size())) {
      throw svcenc::ConfigError("at most 4 layers are supported");
    }
    cfg.layer_qp.assign(kDefaultQp.begin(), kDefaultQp.begin() + n);
  }
  return cfg;
}

std::vector<svcenc::Frame> load_frames(const CliOptions& opt) {
  if (!opt.synthetic.empty()) {
    return svcenc::generate_synthetic(
        svcenc::parse_synthetic_kind(opt.synthetic), opt.width, opt.height,
        opt.frames, opt.seed);
  }
  return svcenc::read_sequence(opt.input, opt.width, opt.height, opt.frames);
}

void print_run(const svcenc::RunStats& s) {
  std::printf("policy=%s time=%.3fs evals=%lld psnr=%.2fdB rate=%.2fkbps\n",
              s.policy.c_str(), s.wall_time_s, s.total_rdc_evaluations,
              s.mean_y_psnr_db, s.bitrate_kbps);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw svcenc::IoError("cannot write " + path.string());
  }
  return f;
}

int run(const CliOptions& opt) {
  const svcenc::EncoderConfig cfg = build_config(opt);
  if (opt.policy != "full" && opt.policy != "fast" && opt.policy != "both") {
    throw svcenc::ConfigError("--policy must be full, fast or both");
  }

  std::vector<svcenc::Frame> frames;
  try {
    frames = load_frames(opt);
  } catch (const svcenc::ConfigError&) {
    throw;
  } catch (const svcenc::IoError&) {
    throw;
  }

  std::optional<svcenc::RunStats> full, fast;
  if (opt.policy == "full" || opt.policy == "both") {
    full = svcenc::encode_sequence(frames, cfg, svcenc::Policy::kFull);
    print_run(*full);
  }
  if (opt.policy == "fast" || opt.policy == "both") {
    fast = svcenc::encode_sequence(frames, cfg, svcenc::Policy::kFast);
    print_run(*fast);
  }

  const std::filesystem::path out_dir(opt.out);
  std::filesystem::create_directories(out_dir);

  std::vector<const svcenc::RunStats*> runs;
  if (full) runs.push_back(&*full);
  if (fast) runs.push_back(&*fast);
  const auto rd_path = out_dir / ("rd_" + cfg.sequence_name + ".csv");
  {
    auto f = open_out(rd_path);
    svcenc::write_rd_curve_csv(f, runs);
  }
  std::printf("wrote %s\n", rd_path.string().c_str());

  if (full && fast) {
    const auto report_path = out_dir / "report.csv";
    auto f = open_out(report_path);
    svcenc::write_comparison_csv(f, *full, *fast);
    const svcenc::DeltaReport d = svcenc::make_delta_report(*full, *fast);
    std::printf(
        "dtime=%.2f%% devals=%.2f%% dpsnr=%.2fdB dbitrate=%.2f%%\n",
        d.delta_time_pct, d.delta_evaluations_pct, d.delta_psnr_db,
        d.delta_bitrate_pct);
    std::printf("wrote %s\n", report_path.string().c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Scalable-video mode-decision harness: full-search baseline vs fast "
      "mode decision"};
  CliOptions opt;
  app.add_option("--input", opt.input, "raw I420 input file (headerless)");
  app.add_option("--synthetic", opt.synthetic,
                 "synthetic clip: flat|translate|noise|mixed");
  app.add_option("--width", opt.width, "luma width, multiple of 16");
  app.add_option("--height", opt.height, "luma height, multiple of 16");
  app.add_option("--frames", opt.frames, "frames to encode");
  app.add_option("--gop", opt.gop, "GOP size: 1, 2, 4, 8 or 16");
  app.add_option("--layers", opt.layers, "quality layers (1..4)");
  app.add_option("--qp", opt.qp,
                 "per-layer QP, base first, strictly decreasing (repeatable)")
      ->expected(-1);
  app.add_option("--range", opt.range, "motion search range in pixels");
  app.add_option("--policy", opt.policy, "full | fast | both");
  app.add_option("--fps", opt.fps, "frame rate for bitrate estimates");
  app.add_option("--out", opt.out, "output directory for reports");
  app.add_option("--threads", opt.threads,
                 "worker threads for the pixel kernels (1 = serial)");
  app.add_option("--seed", opt.seed, "seed for synthetic noise");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "svcenc: config: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    return run(opt);
  } catch (const svcenc::ConfigError& e) {
    std::cerr << "svcenc: config: " << e.what() << "\n";
    return kExitConfig;
  } catch (const svcenc::IoError& e) {
    std::cerr << "svcenc: io: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "svcenc: internal: " << e.what() << "\n";
    return kExitInternal;
  }
}
