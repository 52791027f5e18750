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

// Compares the serial reference kernels against their OpenMP variants and
// reports throughput plus the speedup. Results are checked for equality on
// every call, so this doubles as a quick sanity run.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "svcenc/kernels.hpp"
#include "svcenc/synthetic.hpp"

using namespace svcenc;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void bench_search(const Plane& ref, const Plane& cur, int range, int reps) {
  const int mb_cols = cur.width / 16, mb_rows = cur.height / 16;
  long long sink_serial = 0, sink_omp = 0;

  auto run = [&](bool parallel, long long& sink) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int rep = 0; rep < reps; ++rep) {
      for (int my = 0; my < mb_rows; ++my) {
        for (int mx = 0; mx < mb_cols; ++mx) {
          const auto m = kernels::full_search(
              ref, cur.row(my * 16) + mx * 16, cur.width, 16, 16, mx * 16,
              my * 16, {0, 0}, range, parallel);
          sink += m.sad + m.mv.dx + m.mv.dy;
        }
      }
    }
    return seconds_since(t0);
  };

  const double t_serial = run(false, sink_serial);
  const double t_omp = run(true, sink_omp);
  if (sink_serial != sink_omp) {
    std::fprintf(stderr, "FATAL: serial and OpenMP search results differ\n");
    std::exit(1);
  }
  const long calls = static_cast<long>(reps) * mb_rows * mb_cols;
  std::printf(
      "full_search  %4dx%-4d r=%-3d  serial %8.1f us/call   omp %8.1f "
      "us/call   speedup %.2fx\n",
      cur.width, cur.height, range, t_serial / calls * 1e6,
      t_omp / calls * 1e6, t_serial / t_omp);
}

void bench_ssd(const Plane& a, const Plane& b, int reps) {
  long long sink_serial = 0, sink_omp = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int rep = 0; rep < reps; ++rep) sink_serial += kernels::plane_ssd_serial(a, b);
  const double t_serial = seconds_since(t0);
  const auto t1 = std::chrono::steady_clock::now();
  for (int rep = 0; rep < reps; ++rep) sink_omp += kernels::plane_ssd_omp(a, b);
  const double t_omp = seconds_since(t1);
  if (sink_serial != sink_omp) {
    std::fprintf(stderr, "FATAL: serial and OpenMP SSD results differ\n");
    std::exit(1);
  }
  const double bytes = 2.0 * a.samples.size() * reps;
  std::printf(
      "plane_ssd    %4dx%-4d        serial %8.2f GB/s      omp %8.2f GB/s     "
      " speedup %.2fx\n",
      a.width, a.height, bytes / t_serial / 1e9, bytes / t_omp / 1e9,
      t_serial / t_omp);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel benchmark"};
  int threads = 0;
  int reps = 0;
  bool quick = false;
  app.add_option("--threads", threads, "OpenMP thread count (0 = default)");
  app.add_option("--reps", reps, "repetitions per measurement (0 = auto)");
  app.add_flag("--quick", quick, "small sizes for smoke testing");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; omp variants run serially\n");
#endif

  struct Case {
    int w, h, range;
  };
  std::vector<Case> cases;
  if (quick) {
    cases = {{64, 64, 8}};
    if (reps == 0) reps = 2;
  } else {
    cases = {{352, 288, 8}, {352, 288, 16}, {704, 576, 16}, {704, 576, 24}};
    if (reps == 0) reps = 3;
  }

  for (const Case& c : cases) {
    const auto clip =
        generate_synthetic(SyntheticKind::kNoise, c.w, c.h, 2, 7);
    bench_search(clip[0].y, clip[1].y, c.range, reps);
  }
  const auto big = quick ? generate_synthetic(SyntheticKind::kNoise, 64, 64, 2, 9)
                         : generate_synthetic(SyntheticKind::kNoise, 704, 576, 2, 9);
  bench_ssd(big[0].y, big[1].y, reps * 200);
  return 0;
}
