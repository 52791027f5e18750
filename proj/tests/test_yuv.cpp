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
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include <doctest.h>

#include "svcenc/common.hpp"
#include "svcenc/yuv.hpp"
#include "test_util.hpp"

using namespace svcenc;

namespace {

// Independent high-precision PSNR for cross-checking.
double psnr_oracle(const Plane& a, const Plane& b) {
  long double sse = 0.0L;
  for (size_t i = 0; i < a.samples.size(); ++i) {
    const long double d =
        static_cast<long double>(a.samples[i]) - b.samples[i];
    sse += d * d;
  }
  if (sse == 0.0L) return 99.0;
  const long double mse = sse / static_cast<long double>(a.samples.size());
  return static_cast<double>(10.0L * std::log10(255.0L * 255.0L / mse));
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("psnr trivial values") {
  Plane a = make_plane(16, 16, 40);
  Plane b = a;
  CHECK(psnr(a, b) == kPsnrCap);

  Plane zeros = make_plane(16, 16, 0);
  Plane full = make_plane(16, 16, 255);
  CHECK(psnr(zeros, full) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("psnr matches the high-precision oracle on random planes") {
  test::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Plane a = test::random_plane(16, 16, rng);
    Plane b = test::random_plane(16, 16, rng);
    CHECK(std::abs(psnr(a, b) - psnr_oracle(a, b)) < 1e-9);
  }
}

TEST_CASE("psnr is symmetric for differing planes and capped on identity") {
  test::Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    Plane a = test::random_plane(32, 16, rng);
    Plane b = test::random_plane(32, 16, rng);
    if (a.samples != b.samples) {
      CHECK(psnr(a, b) == psnr(b, a));
    }
    CHECK(psnr(a, a) == kPsnrCap);
  }
}

TEST_CASE("psnr rejects dimension mismatch") {
  Plane a = make_plane(16, 16);
  Plane b = make_plane(32, 16);
  CHECK_THROWS_AS(psnr(a, b), std::invalid_argument);
}

TEST_CASE("read_sequence: exactly one 16x16 frame in 384 bytes") {
  const auto path = temp_file("svcenc_one_frame.yuv");
  {
    std::ofstream f(path, std::ios::binary);
    std::vector<char> bytes(384, 7);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
  const auto frames = read_sequence(path.string(), 16, 16, 5);
  CHECK(frames.size() == 1);
  CHECK(frames[0].y.samples.size() == 256);
  std::filesystem::remove(path);
}

TEST_CASE("read_sequence: empty file is a truncation error") {
  const auto path = temp_file("svcenc_empty.yuv");
  { std::ofstream f(path, std::ios::binary); }
  CHECK_THROWS_AS(read_sequence(path.string(), 16, 16, 1), IoError);
  std::filesystem::remove(path);
}

TEST_CASE("read_sequence: missing file is an input error") {
  CHECK_THROWS_AS(read_sequence("/no/such/file.yuv", 16, 16, 1), IoError);
}

TEST_CASE("write-then-read round-trips whole frames bit-exact") {
  test::Rng rng(13);
  std::vector<Frame> frames;
  for (int k = 0; k < 10; ++k) {
    Frame f = make_frame(32, 32);
    f.display_index = k;
    for (auto& s : f.y.samples) s = rng.byte();
    for (auto& s : f.cb.samples) s = rng.byte();
    for (auto& s : f.cr.samples) s = rng.byte();
    frames.push_back(std::move(f));
  }
  const auto path = temp_file("svcenc_roundtrip.yuv");
  write_sequence(path.string(), frames);
  const auto back = read_sequence(path.string(), 32, 32, 0);
  REQUIRE(back.size() == frames.size());
  for (size_t i = 0; i < frames.size(); ++i) {
    CHECK(back[i].y.samples == frames[i].y.samples);
    CHECK(back[i].cb.samples == frames[i].cb.samples);
    CHECK(back[i].cr.samples == frames[i].cr.samples);
  }

  // A trailing partial frame is silently dropped.
  {
    std::ofstream f(path, std::ios::binary | std::ios::app);
    std::vector<char> partial(100, 1);
    f.write(partial.data(), 100);
  }
  CHECK(read_sequence(path.string(), 32, 32, 0).size() == frames.size());
  std::filesystem::remove(path);
}
