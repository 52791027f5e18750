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
#include <algorithm>
#include <set>
#include <vector>

#include <doctest.h>

#include "svcenc/common.hpp"
#include "svcenc/gop.hpp"
#include "svcenc/layers.hpp"

using namespace svcenc;

namespace {

// Independent enumeration of the dyadic decomposition: an explicit worklist
// instead of recursion, levels derived from the span width.
struct OraclePlan {
  std::vector<int> order;
  std::vector<int> level;
};

OraclePlan oracle_gop(int frame_count, int gop_size) {
  OraclePlan plan;
  plan.level.assign(frame_count, 0);
  plan.order.push_back(0);
  int prev_key = 0;
  for (int key = gop_size; key < frame_count; key += gop_size) {
    plan.order.push_back(key);
    // depth-first over spans, midpoint first
    std::vector<std::pair<int, int>> stack{{prev_key, key}};
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      if (b - a < 2) continue;
      const int mid = (a + b) / 2;
      int lvl = 0;
      for (int span = gop_size; span > b - a; span /= 2) ++lvl;
      plan.level[mid] = lvl + 1;
      plan.order.push_back(mid);
      stack.push_back({mid, b});  // pushed second so the left span pops first
      stack.push_back({a, mid});
    }
    prev_key = key;
  }
  for (int t = prev_key + 1; t < frame_count; ++t) plan.order.push_back(t);
  return plan;
}

}  // namespace

TEST_CASE("build_gop: 5 frames, gop 4 gives the documented plan") {
  const GopPlan plan = build_gop(5, 4);
  CHECK(plan.coding_order == std::vector<int>{0, 4, 2, 1, 3});
  const std::vector<int> want_levels = {0, 2, 1, 2, 0};
  for (int i = 0; i < 5; ++i) {
    CHECK(plan.pictures[i].temporal_level == want_levels[i]);
  }
  CHECK(plan.pictures[0].type == PictureType::kI);
  CHECK(plan.pictures[4].type == PictureType::kP);
  CHECK(plan.pictures[2].type == PictureType::kB);
  CHECK(plan.pictures[2].ref0 == 0);
  CHECK(plan.pictures[2].ref1 == 4);
  CHECK(plan.pictures[3].ref0 == 2);
  CHECK(plan.pictures[3].ref1 == 4);
}

TEST_CASE("build_gop: gop 1 is display order, all key pictures") {
  const GopPlan plan = build_gop(6, 1);
  CHECK(plan.coding_order == std::vector<int>{0, 1, 2, 3, 4, 5});
  for (const PictureInfo& pic : plan.pictures) {
    CHECK(pic.temporal_level == 0);
    CHECK(pic.type != PictureType::kB);
  }
}

TEST_CASE("build_gop: single frame is a lone I picture") {
  const GopPlan plan = build_gop(1, 8);
  CHECK(plan.coding_order == std::vector<int>{0});
  CHECK(plan.pictures[0].type == PictureType::kI);
  CHECK(plan.pictures[0].ref0 == -1);
}

TEST_CASE("build_gop rejects invalid gop sizes") {
  CHECK_THROWS_AS(build_gop(10, 3), ConfigError);
  CHECK_THROWS_AS(build_gop(10, 0), ConfigError);
  CHECK_THROWS_AS(build_gop(10, 32), ConfigError);
  CHECK_THROWS_AS(build_gop(0, 4), ConfigError);
}

TEST_CASE("build_gop matches the independent bisection oracle") {
  for (int gop : {1, 2, 4, 8, 16}) {
    for (int fc = 1; fc <= 64; ++fc) {
      const GopPlan plan = build_gop(fc, gop);
      const OraclePlan want = oracle_gop(fc, gop);
      REQUIRE(plan.coding_order == want.order);
      for (int i = 0; i < fc; ++i) {
        CHECK(plan.pictures[i].temporal_level == want.level[i]);
      }
    }
  }
}

TEST_CASE("coding order never references a picture that is not yet coded") {
  for (int gop : {1, 2, 4, 8, 16}) {
    for (int fc = 1; fc <= 64; ++fc) {
      const GopPlan plan = build_gop(fc, gop);
      std::set<int> coded;
      REQUIRE(static_cast<int>(plan.coding_order.size()) == fc);
      for (int display : plan.coding_order) {
        const PictureInfo& pic = plan.pictures[display];
        if (pic.ref0 >= 0) CHECK(coded.count(pic.ref0) == 1);
        if (pic.ref1 >= 0) CHECK(coded.count(pic.ref1) == 1);
        if (pic.type == PictureType::kB) {
          CHECK(pic.temporal_level >= 1);
          CHECK(pic.ref1 >= 0);
        }
        coded.insert(display);
      }
    }
  }
}

TEST_CASE("temporal level count is log2(gop)+1 once a GOP completes") {
  for (int gop : {1, 2, 4, 8, 16}) {
    const GopPlan plan = build_gop(2 * gop + 1, gop);
    std::set<int> levels;
    for (const PictureInfo& pic : plan.pictures) {
      levels.insert(pic.temporal_level);
    }
    int expect = 1, g = gop;
    while (g > 1) {
      g /= 2;
      ++expect;
    }
    CHECK(static_cast<int>(levels.size()) == expect);
  }
}

TEST_CASE("key pictures sit every gop_size frames") {
  const GopPlan plan = build_gop(33, 8);
  for (int i = 0; i < 33; ++i) {
    const bool is_key = plan.pictures[i].temporal_level == 0;
    CHECK(is_key == (i % 8 == 0));
  }
}

TEST_CASE("colocated_decision: base layer has no lower layer") {
  CHECK(colocated_decision(nullptr, 0, 0, 0) == nullptr);
}

TEST_CASE("colocated_decision returns the lower layer's decision") {
  LayerContext lower = make_layer(0, 40, 2, 64, 64);
  MBDecision d;
  d.mode = Mode::kInter16x16;
  d.evaluated_count = 1;
  lower.decisions[0].put(2, 3, d);
  lower.frame_done[0] = 1;
  const MBDecision* got = colocated_decision(&lower, 0, 2, 3);
  REQUIRE(got != nullptr);
  CHECK(got->mode == Mode::kInter16x16);
}

TEST_CASE("colocated_decision before the lower layer coded is a sequencing error") {
  LayerContext lower = make_layer(0, 40, 2, 64, 64);
  CHECK_THROWS_AS(colocated_decision(&lower, 1, 0, 0), SequencingError);
}

TEST_CASE("reference_decisions by picture type") {
  const GopPlan plan = build_gop(5, 4);
  LayerContext layer = make_layer(0, 40, 5, 32, 32);
  MBDecision skip;
  skip.mode = Mode::kSkip;
  skip.evaluated_count = 1;
  for (int f : {0, 4}) {
    for (int y = 0; y < 2; ++y) {
      for (int x = 0; x < 2; ++x) layer.decisions[f].put(x, y, skip);
    }
    layer.frame_done[f] = 1;
  }

  SUBCASE("I picture has no references") {
    auto [d0, d1] = reference_decisions(plan, layer, 0, 0, 0);
    CHECK(d0 == nullptr);
    CHECK(d1 == nullptr);
  }
  SUBCASE("P key picture sees only the previous key") {
    auto [d0, d1] = reference_decisions(plan, layer, 4, 1, 1);
    REQUIRE(d0 != nullptr);
    CHECK(d0->mode == Mode::kSkip);
    CHECK(d1 == nullptr);
  }
  SUBCASE("mid-GOP B picture sees both references") {
    auto [d0, d1] = reference_decisions(plan, layer, 2, 1, 0);
    REQUIRE(d0 != nullptr);
    REQUIRE(d1 != nullptr);
  }
}

TEST_CASE("layer gamma assignment and limits") {
  CHECK(make_layer(1, 34, 1, 16, 16).gamma == 0.6);
  CHECK(make_layer(2, 28, 1, 16, 16).gamma == 0.9);
  CHECK(make_layer(3, 22, 1, 16, 16).gamma == 1.2);
  CHECK(make_layer(0, 40, 1, 16, 16).gamma == 0.0);
  CHECK_THROWS_AS(make_layer(4, 16, 1, 16, 16), ConfigError);
  CHECK_THROWS_AS(gamma_for_layer(0), ConfigError);
  CHECK_THROWS_AS(gamma_for_layer(4), ConfigError);
}
