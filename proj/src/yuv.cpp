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
#include "svcenc/yuv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "svcenc/common.hpp"

namespace svcenc {

Plane make_plane(int width, int height, uint8_t fill) {
  Plane p;
  p.width = width;
  p.height = height;
  p.samples.assign(static_cast<size_t>(width) * height, fill);
  return p;
}

const char* picture_type_name(PictureType t) {
  switch (t) {
    case PictureType::kI: return "I";
    case PictureType::kP: return "P";
    case PictureType::kB: return "B";
  }
  return "?";
}

Frame make_frame(int width, int height, uint8_t luma, uint8_t chroma) {
  if (width <= 0 || height <= 0 || width % 16 != 0 || height % 16 != 0) {
    throw ConfigError("frame dimensions must be positive multiples of 16");
  }
  Frame f;
  f.y = make_plane(width, height, luma);
  f.cb = make_plane(width / 2, height / 2, chroma);
  f.cr = make_plane(width / 2, height / 2, chroma);
  return f;
}

std::vector<Frame> read_sequence(const std::string& path, int width, int height,
                                 int max_frames) {
  if (width <= 0 || height <= 0 || width % 16 != 0 || height % 16 != 0) {
    throw ConfigError("sequence dimensions must be positive multiples of 16");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open input file: " + path);
  }
  const size_t luma_bytes = static_cast<size_t>(width) * height;
  const size_t chroma_bytes = luma_bytes / 4;
  const size_t frame_bytes = luma_bytes + 2 * chroma_bytes;

  in.seekg(0, std::ios::end);
  const auto file_size = static_cast<size_t>(in.tellg());
  in.seekg(0, std::ios::beg);

  const size_t available = file_size / frame_bytes;
  if (available == 0) {
    throw IoError("truncated input: " + path + " holds less than one frame");
  }
  size_t count = available;
  if (max_frames > 0 && static_cast<size_t>(max_frames) < count) {
    count = static_cast<size_t>(max_frames);
  }

  std::vector<Frame> frames;
  frames.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    Frame f = make_frame(width, height);
    f.display_index = static_cast<int>(i);
    in.read(reinterpret_cast<char*>(f.y.samples.data()),
            static_cast<std::streamsize>(luma_bytes));
    in.read(reinterpret_cast<char*>(f.cb.samples.data()),
            static_cast<std::streamsize>(chroma_bytes));
    in.read(reinterpret_cast<char*>(f.cr.samples.data()),
            static_cast<std::streamsize>(chroma_bytes));
    if (!in) {
      throw IoError("short read in " + path);
    }
    frames.push_back(std::move(f));
  }
  return frames;
}

void write_sequence(const std::string& path, const std::vector<Frame>& frames) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open output file: " + path);
  }
  for (const Frame& f : frames) {
    out.write(reinterpret_cast<const char*>(f.y.samples.data()),
              static_cast<std::streamsize>(f.y.samples.size()));
    out.write(reinterpret_cast<const char*>(f.cb.samples.data()),
              static_cast<std::streamsize>(f.cb.samples.size()));
    out.write(reinterpret_cast<const char*>(f.cr.samples.data()),
              static_cast<std::streamsize>(f.cr.samples.size()));
  }
  if (!out) {
    throw IoError("short write to " + path);
  }
}

double psnr(const Plane& reference, const Plane& test) {
  if (reference.width != test.width || reference.height != test.height) {
    throw std::invalid_argument("psnr: plane dimensions differ");
  }
  unsigned long long sse = 0;
  const size_t n = reference.samples.size();
  for (size_t i = 0; i < n; ++i) {
    const int d = static_cast<int>(reference.samples[i]) -
                  static_cast<int>(test.samples[i]);
    sse += static_cast<unsigned long long>(d) * d;
  }
  if (sse == 0) {
    return kPsnrCap;
  }
  const double mse = static_cast<double>(sse) / static_cast<double>(n);
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace svcenc
