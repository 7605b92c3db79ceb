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

#include "mfsquad/lab.hpp"
#include "mfsquad/metrics.hpp"
#include "mfsquad/tube.hpp"

using namespace mfsquad;

namespace {

constexpr double kPi = std::numbers::pi;

Polygon unit_square() {
  Polygon p;
  p.pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  return p;
}

Polygon l_shape() {
  Polygon p;
  p.pts = {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
  return p;
}

int arc_count(const OffsetLoop& loop) {
  int k = 0;
  for (const auto& piece : loop.pieces)
    if (piece.kind == OffsetPiece::Kind::Arc) ++k;
  return k;
}

}  // namespace

TEST_CASE("normalize divides by the mfs and returns the scale") {
  Polygon big;
  big.pts = {{0, 0}, {7, 0}, {7, 7}, {0, 7}};
  const auto [unit, scale] = normalize(big);
  CHECK(scale == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(unit.vertex(2).x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(min_feature_size(polygon_drawing(unit)).value == doctest::Approx(1.0).epsilon(1e-12));

  const auto [oct, oct_scale] = normalize(gen_regular_ngon(8));
  CHECK(oct_scale == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(dist(oct.vertex(0), gen_regular_ngon(8).vertex(0)) <= 1e-9);

  const Polygon comb = gen_comb(4, 3);
  const auto [comb_n, comb_scale] = normalize(comb);
  CHECK(comb_scale ==
        doctest::Approx(min_feature_size(polygon_drawing(comb)).value).epsilon(1e-15));
  CHECK(min_feature_size(polygon_drawing(comb_n)).value ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("normalize rejects degenerate input") {
  Polygon sliver;
  sliver.pts = {{0, 0}, {1, 0}, {2, 1e-13}, {1, 1e-13}};
  CHECK_THROWS_AS(normalize(sliver), DegeneratePolygon);
}

TEST_CASE("inward offset of the unit square at 2/5 is a 1/5 square, no arcs") {
  const OffsetLoop p2 = inward_offset(unit_square(), 0.4);
  CHECK(arc_count(p2) == 0);
  REQUIRE(p2.pieces.size() == 4);
  for (const auto& piece : p2.pieces) {
    CHECK(piece.seg.length() == doctest::Approx(0.2).epsilon(1e-12));
    const Point mid = piece.seg.at(0.5);
    CHECK(dist(mid, {0.5, 0.5}) == doctest::Approx(0.1).epsilon(1e-12));
  }
  CHECK(offset_distance_error(p2, unit_square(), 200) <= 1e-12);
}

TEST_CASE("inward offset of the unit hexagon shrinks the apothem by t") {
  const Polygon hex = gen_regular_ngon(6);
  const double t = 0.4;
  const OffsetLoop loop = inward_offset(hex, t);
  CHECK(arc_count(loop) == 0);
  const double apothem = std::sqrt(3.0) / 2.0;
  for (const auto& piece : loop.pieces) {
    const Point mid = piece.seg.at(0.5);
    CHECK(norm(mid) == doctest::Approx(apothem - t).epsilon(1e-12));
  }
  CHECK(offset_distance_error(loop, hex, 500) <= 1e-9);
}

TEST_CASE("inward offset of the L-shape has exactly one arc, at the reflex vertex") {
  const OffsetLoop loop = inward_offset(l_shape(), 0.4);
  CHECK(arc_count(loop) == 1);
  for (const auto& piece : loop.pieces) {
    if (piece.kind != OffsetPiece::Kind::Arc) continue;
    CHECK(piece.arc.radius == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(dist(piece.arc.center, {1, 1}) <= 1e-15);
    CHECK(piece.arc.dir == ArcDir::CW);
  }
  CHECK(offset_distance_error(loop, l_shape(), 1000) <= 1e-7);
}

TEST_CASE("offset preconditions") {
  CHECK_THROWS_AS(inward_offset(unit_square(), 0.5), OffsetTooLarge);
  CHECK_THROWS_AS(inward_offset(unit_square(), 0.0), OffsetTooLarge);
}

TEST_CASE("outward offset of the square's inner wall rounds four corners") {
  const OffsetLoop p2 = inward_offset(unit_square(), 0.4);
  const OffsetLoop p1 = outward_offset(p2, 0.2);
  CHECK(arc_count(p1) == 4);
  for (const auto& piece : p1.pieces) {
    if (piece.kind != OffsetPiece::Kind::Arc) continue;
    CHECK(piece.arc.radius == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(piece.arc.sweep() == doctest::Approx(kPi / 2).epsilon(1e-12));
  }
}

TEST_CASE("outward offset shrinks reflex arcs concentrically") {
  const OffsetLoop p2 = inward_offset(l_shape(), 0.4);
  const OffsetLoop p1 = outward_offset(p2, 0.2);
  bool found = false;
  for (const auto& piece : p1.pieces) {
    if (piece.kind != OffsetPiece::Kind::Arc) continue;
    if (dist(piece.arc.center, {1, 1}) <= 1e-12) {
      found = true;
      CHECK(piece.arc.radius == doctest::Approx(0.2).epsilon(1e-12));
    }
  }
  CHECK(found);
}

TEST_CASE("outer wall is contained in the offset region at depth 1/5") {
  // The outer wall's straight stretches are exactly 1/5 deep; its corner
  // rounding arcs lie deeper, so only containment holds there.
  for (const Polygon& p : {unit_square(), l_shape()}) {
    const OffsetLoop p2 = inward_offset(p, 0.4);
    const OffsetLoop p1 = outward_offset(p2, 0.2);
    for (const auto& piece : p1.pieces) {
      if (piece.kind == OffsetPiece::Kind::Segment) {
        for (double t : {0.0, 0.25, 0.5, 0.75, 1.0})
          CHECK(p.boundary_distance(piece.seg.at(t)) == doctest::Approx(0.2).epsilon(1e-9));
      } else {
        for (const Point& q : arc_sample(piece.arc, 16)) {
          CHECK(p.boundary_distance(q) >= 0.2 - 1e-9);
          CHECK(p.boundary_distance(q) <= 0.4 + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("square tube: four convex bends with degenerate minor arcs") {
  const TubeResult tube = build_tube(unit_square());
  REQUIRE(tube.bends.size() == 4);
  for (const Bend& b : tube.bends) {
    CHECK(!b.reflex);
    CHECK(b.sweep_angle == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(b.r_greater == doctest::Approx(0.2));
    CHECK(!b.minor_arc().has_value());
  }
  CHECK(dist(tube.bends[0].center, {0.4, 0.4}) <= 1e-12);
}

TEST_CASE("L-shape tube: five convex bends and one reflex bend") {
  const TubeResult tube = build_tube(l_shape());
  REQUIRE(tube.bends.size() == 6);
  int reflex = 0;
  for (const Bend& b : tube.bends) {
    if (!b.reflex) continue;
    ++reflex;
    CHECK(b.r_greater == doctest::Approx(0.4));
    CHECK(b.r_minor == doctest::Approx(0.2));
    CHECK(dist(b.center, {1, 1}) <= 1e-12);
    REQUIRE(b.minor_arc().has_value());
  }
  CHECK(reflex == 1);
}

TEST_CASE("bend width and door lengths are exact") {
  for (const Polygon& p : {unit_square(), l_shape()}) {
    for (const Bend& b : build_tube(p).bends) {
      CHECK(b.r_greater - b.r_minor == doctest::Approx(0.2).epsilon(1e-15));
      const auto [din, dout] = b.doors();
      CHECK(din.length() == doctest::Approx(0.2).epsilon(1e-12));
      CHECK(dout.length() == doctest::Approx(0.2).epsilon(1e-12));
    }
  }
}

TEST_CASE("bend sweeps equal the exterior turn") {
  const Polygon hex = gen_regular_ngon(6);
  for (const Bend& b : build_tube(hex).bends)
    CHECK(b.sweep_angle == doctest::Approx(2 * kPi / 6).epsilon(1e-12));
  const TubeResult lt = build_tube(l_shape());
  for (const Bend& b : lt.bends) {
    if (b.reflex)
      CHECK(b.sweep_angle == doctest::Approx(kPi / 2).epsilon(1e-12));  // interior 3pi/2
    else
      CHECK(b.sweep_angle == doctest::Approx(kPi / 2).epsilon(1e-12));
  }
}

TEST_CASE("greater arcs of a square tube bend sample at exactly 1/5 from the corner") {
  const TubeResult tube = build_tube(unit_square());
  const Arc greater = tube.bends[0].greater_arc();
  const auto pts = arc_sample(greater, 4);
  REQUIRE(pts.size() == 5);
  for (const Point& q : pts)
    CHECK(dist(q, tube.bends[0].center) == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("tube points lie between 1/5 and 2/5 from the boundary") {
  for (const Polygon& p : {unit_square(), l_shape()}) {
    const TubeResult tube = build_tube(p);
    for (const Bend& b : tube.bends) {
      for (const Point& q : arc_sample(b.greater_arc(), 16)) {
        CHECK(p.boundary_distance(q) >= 0.2 - 1e-9);
        CHECK(p.boundary_distance(q) <= 0.4 + 1e-9);
      }
    }
    CHECK(offset_distance_error(tube.inner_wall, p, 1000) <= 1e-7);
  }
}

TEST_CASE("square track: four arcs of radius 7/40 plus four straights") {
  const TubeResult tube = build_tube(unit_square());
  const Track track = build_track(tube);
  int arcs = 0, segs = 0;
  for (const TrackPiece& tp : track.pieces) {
    if (tp.geom.kind == OffsetPiece::Kind::Arc) {
      ++arcs;
      CHECK(tp.geom.arc.radius == doctest::Approx(7.0 / 40.0).epsilon(1e-15));
      CHECK(tp.geom.length() == doctest::Approx((kPi / 2) * (7.0 / 40.0)).epsilon(1e-12));
      CHECK(tp.bend >= 0);
    } else {
      ++segs;
      CHECK(tp.bend == -1);
      CHECK(tp.geom.length() == doctest::Approx(0.2).epsilon(1e-12));
    }
  }
  CHECK(arcs == 4);
  CHECK(segs == 4);
}

TEST_CASE("track points keep the per-case distance floors") {
  // Convex bends carry the greater arc on the outer wall: track at least
  // 1/5 from the boundary. Reflex bends carry it on the inner wall: track at
  // exactly 2/5 - 1/40 around the reflex vertex.
  const Polygon lp = l_shape();
  const TubeResult tube = build_tube(lp);
  const Track track = build_track(tube);
  for (const TrackPiece& tp : track.pieces) {
    if (tp.geom.kind != OffsetPiece::Kind::Arc) continue;
    const bool reflex = tube.bends[static_cast<size_t>(tp.bend)].reflex;
    for (const Point& q : arc_sample(tp.geom.arc, 12)) {
      if (reflex)
        CHECK(lp.boundary_distance(q) == doctest::Approx(0.4 - 1.0 / 40).epsilon(1e-9));
      else
        CHECK(lp.boundary_distance(q) >= 0.2 - 1e-9);
    }
  }
}

TEST_CASE("track arclength bookkeeping is consistent") {
  const Track track = build_track(build_tube(gen_regular_ngon(8)));
  double sum = 0.0;
  for (const TrackPiece& tp : track.pieces) {
    CHECK(tp.s0 == doctest::Approx(sum).epsilon(1e-12));
    sum += tp.geom.length();
  }
  CHECK(track.total_length == doctest::Approx(sum).epsilon(1e-12));
  // point_at at piece starts reproduces the piece geometry
  for (const TrackPiece& tp : track.pieces) {
    CHECK(dist(track.point_at(tp.s0), tp.geom.start()) <= 1e-9);
  }
  CHECK(dist(track.point_at(0.0), track.point_at(track.total_length)) <= 1e-9);
}

TEST_CASE("offsets of the random corpus stay simple and equidistant") {
  for (unsigned long long seed = 1; seed <= 12; ++seed) {
    const Polygon p = gen_random_simple(14, seed);
    const auto [pn, scale] = normalize(p);
    const OffsetLoop inner = inward_offset(pn, 0.4);
    CHECK(offset_distance_error(inner, pn, 400) <= 1e-7);
    const OffsetLoop outer = outward_offset(inner, 0.2);
    CHECK(outer.offset_distance == doctest::Approx(0.2).epsilon(1e-12));
    const Track track = build_track(build_tube(pn));
    CHECK(track.total_length > 0.0);
  }
}

TEST_CASE("exactly straight vertices get zero-sweep bends, never elided") {
  const Polygon comb = gen_comb(4, 3);
  const auto [pn, scale] = normalize(comb);
  const TubeResult tube = build_tube(pn);
  CHECK(static_cast<int>(tube.bends.size()) == comb.size());
  int degenerate = 0;
  for (const Bend& b : tube.bends)
    if (b.sweep_angle <= 1e-12) ++degenerate;
  CHECK(degenerate == 4);  // the four top-edge subdivision vertices
}
