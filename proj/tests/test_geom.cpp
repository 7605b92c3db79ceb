// Copyright 2026 The mfsquad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mfsquad/geom.hpp"
#include "mfsquad/lab.hpp"

using namespace mfsquad;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("orient basic examples") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient({0, 0}, {1, 0}, {2, 0}) == 0);
  CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orient antisymmetry on random non-degenerate triples") {
  std::mt19937_64 rng(7);
  auto u = [&] { return (rng() >> 11) * 0x1.0p-53 * 10.0 - 5.0; };
  int checked = 0;
  for (int it = 0; it < 500; ++it) {
    const Point a{u(), u()}, b{u(), u()}, c{u(), u()};
    const int o = orient(a, b, c);
    if (o == 0) continue;
    ++checked;
    CHECK(orient(b, a, c) == -o);
    CHECK(orient(a, c, b) == -o);
    CHECK(orient(c, b, a) == -o);
  }
  CHECK(checked > 400);
}

TEST_CASE("dist_point_segment examples") {
  CHECK(dist_point_segment({0, 1}, {{-1, 0}, {1, 0}}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(dist_point_segment({2, 1}, {{-1, 0}, {1, 0}}) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("octagon vertex-to-edge distance floor (brute force)") {
  const Polygon oct = gen_regular_ngon(8);
  // Minimum over all (vertex, non-incident edge) pairs must be exactly the
  // side length 1, and every individual pair at least that.
  double overall = 1e300;
  for (int v = 0; v < 8; ++v) {
    for (int e = 0; e < 8; ++e) {
      if (e == v || oct.wrap(e + 1) == v) continue;
      const double d = dist_point_segment(oct.vertex(v), oct.edge(e));
      CHECK(d >= 1.0 - 1e-12);
      overall = std::min(overall, d);
    }
  }
  CHECK(overall == doctest::Approx(1.0).epsilon(1e-12));
  const double d03 = dist_point_segment(oct.vertex(0), oct.edge(2));
  CHECK(d03 >= 1.0);
}

TEST_CASE("dist_point_segment bounds") {
  std::mt19937_64 rng(11);
  auto u = [&] { return (rng() >> 11) * 0x1.0p-53 * 4.0 - 2.0; };
  for (int it = 0; it < 200; ++it) {
    const Point p{u(), u()};
    const Segment s{{u(), u()}, {u(), u()}};
    if (s.length() < 1e-9) continue;
    const double d = dist_point_segment(p, s);
    CHECK(d <= std::min(dist(p, s.a), dist(p, s.b)) + 1e-12);
    const double line_d = std::abs(cross(s.delta(), p - s.a)) / s.length();
    CHECK(d >= line_d - 1e-12);
  }
}

TEST_CASE("segment_intersection examples") {
  const auto r1 = segment_intersection({{0, 0}, {2, 0}}, {{1, -1}, {1, 1}});
  REQUIRE(r1.kind == SegmentIntersection::Kind::Point);
  CHECK(r1.p.x == doctest::Approx(1.0));
  CHECK(r1.p.y == doctest::Approx(0.0));

  const auto r2 = segment_intersection({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}});
  CHECK(r2.kind == SegmentIntersection::Kind::None);

  const auto r3 = segment_intersection({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}});
  REQUIRE(r3.kind == SegmentIntersection::Kind::Overlap);
  CHECK(r3.p.x == doctest::Approx(1.0));
  CHECK(r3.q.x == doctest::Approx(2.0));
}

TEST_CASE("segment_intersection shared endpoint reports touching point") {
  const auto r = segment_intersection({{0, 0}, {1, 0}}, {{1, 0}, {1, 1}});
  REQUIRE(r.kind == SegmentIntersection::Kind::Point);
  CHECK(r.touching);
  CHECK(r.p.x == doctest::Approx(1.0));
}

TEST_CASE("segment_intersection is symmetric") {
  std::mt19937_64 rng(3);
  auto u = [&] { return (rng() >> 11) * 0x1.0p-53; };
  for (int it = 0; it < 300; ++it) {
    const Segment s{{u(), u()}, {u(), u()}};
    const Segment t{{u(), u()}, {u(), u()}};
    const auto a = segment_intersection(s, t);
    const auto b = segment_intersection(t, s);
    CHECK(a.kind == b.kind);
    if (a.kind == SegmentIntersection::Kind::Point) {
      CHECK(dist(a.p, b.p) < 1e-9);
    }
  }
}

TEST_CASE("arc_sample quarter circle") {
  const Arc quarter{{0, 0}, 1.0, 0.0, kPi / 2, ArcDir::CCW};
  const auto two = arc_sample(quarter, 1);
  REQUIRE(two.size() == 2);
  CHECK(dist(two[0], {1, 0}) < 1e-15);
  CHECK(dist(two[1], {0, 1}) < 1e-15);

  const auto three = arc_sample(quarter, 2);
  REQUIRE(three.size() == 3);
  CHECK(dist(three[1], {std::sqrt(2.0) / 2, std::sqrt(2.0) / 2}) < 1e-15);
}

TEST_CASE("arc_sample points stay on the circle") {
  std::mt19937_64 rng(19);
  auto u = [&] { return (rng() >> 11) * 0x1.0p-53; };
  for (int it = 0; it < 50; ++it) {
    Arc arc;
    arc.center = {u() * 4 - 2, u() * 4 - 2};
    arc.radius = 0.1 + u();
    arc.start_angle = u() * 2 * kPi;
    arc.end_angle = u() * 2 * kPi;
    arc.dir = it % 2 ? ArcDir::CCW : ArcDir::CW;
    for (const Point& p : arc_sample(arc, 7)) {
      CHECK(std::abs(dist(p, arc.center) - arc.radius) <= 1e-9);
    }
  }
}

TEST_CASE("normalize_angle and sweep") {
  CHECK(normalize_angle(0.0) == 0.0);
  CHECK(normalize_angle(2 * kPi) == doctest::Approx(0.0));
  CHECK(normalize_angle(-kPi / 2) == doctest::Approx(3 * kPi / 2));
  const Arc a{{0, 0}, 1.0, kPi, 3 * kPi / 2, ArcDir::CCW};
  CHECK(a.sweep() == doctest::Approx(kPi / 2));
  const Arc b{{0, 0}, 1.0, kPi, kPi / 2, ArcDir::CW};
  CHECK(b.sweep() == doctest::Approx(kPi / 2));
  const Arc degenerate{{0, 0}, 1.0, 1.0, 1.0, ArcDir::CCW};
  CHECK(degenerate.sweep() == 0.0);
}
