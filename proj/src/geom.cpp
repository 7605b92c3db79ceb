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

#include "mfsquad/geom.hpp"

#include <numbers>

namespace mfsquad {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod can return exactly kTwoPi after the correction when a is a tiny
  // negative number; fold it back.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double Arc::sweep() const {
  double d = dir == ArcDir::CCW ? end_angle - start_angle : start_angle - end_angle;
  if (d == 0.0) return 0.0;
  return normalize_angle(d);
}

int orient(Point a, Point b, Point c, const Tolerance& tol) {
  const Point u = b - a;
  const Point v = c - a;
  const double cr = cross(u, v);
  const double m = std::max(std::max(std::abs(u.x), std::abs(u.y)),
                            std::max(std::abs(v.x), std::abs(v.y)));
  if (std::abs(cr) <= tol.eps_abs * m * m) return 0;
  return cr > 0.0 ? 1 : -1;
}

double dist_point_segment(Point p, const Segment& s) {
  const Point d = s.b - s.a;
  const double len2 = norm2(d);
  if (len2 == 0.0) return dist(p, s.a);
  double t = dot(p - s.a, d) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return dist(p, s.a + t * d);
}

namespace {

bool within_box(const Segment& s, Point p, double eps) {
  return p.x >= std::min(s.a.x, s.b.x) - eps && p.x <= std::max(s.a.x, s.b.x) + eps &&
         p.y >= std::min(s.a.y, s.b.y) - eps && p.y <= std::max(s.a.y, s.b.y) + eps;
}

bool near_endpoint(const Segment& s, Point p, double eps) {
  return dist(s.a, p) <= eps || dist(s.b, p) <= eps;
}

}  // namespace

SegmentIntersection segment_intersection(const Segment& s, const Segment& t,
                                         const Tolerance& tol) {
  SegmentIntersection out;
  const int o1 = orient(s.a, s.b, t.a, tol);
  const int o2 = orient(s.a, s.b, t.b, tol);
  const int o3 = orient(t.a, t.b, s.a, tol);
  const int o4 = orient(t.a, t.b, s.b, tol);

  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // Collinear: parameterize t's endpoints along s.
    const Point d = s.delta();
    const double len2 = norm2(d);
    if (len2 == 0.0) return out;
    const double ta = dot(t.a - s.a, d) / len2;
    const double tb = dot(t.b - s.a, d) / len2;
    const double lo = std::max(0.0, std::min(ta, tb));
    const double hi = std::min(1.0, std::max(ta, tb));
    const double eps_t = tol.eps_abs / std::sqrt(len2);
    if (hi < lo - eps_t) return out;
    if (hi - lo <= eps_t) {
      out.kind = SegmentIntersection::Kind::Point;
      out.p = s.at(0.5 * (lo + hi));
      out.touching = true;
      return out;
    }
    out.kind = SegmentIntersection::Kind::Overlap;
    out.p = s.at(lo);
    out.q = s.at(hi);
    out.touching = true;
    return out;
  }

  // Endpoint-on-segment contacts.
  const double eps = tol.eps_abs;
  if (o1 == 0 && within_box(s, t.a, eps)) {
    out.kind = SegmentIntersection::Kind::Point;
    out.p = t.a;
    out.touching = true;
    return out;
  }
  if (o2 == 0 && within_box(s, t.b, eps)) {
    out.kind = SegmentIntersection::Kind::Point;
    out.p = t.b;
    out.touching = true;
    return out;
  }
  if (o3 == 0 && within_box(t, s.a, eps)) {
    out.kind = SegmentIntersection::Kind::Point;
    out.p = s.a;
    out.touching = true;
    return out;
  }
  if (o4 == 0 && within_box(t, s.b, eps)) {
    out.kind = SegmentIntersection::Kind::Point;
    out.p = s.b;
    out.touching = true;
    return out;
  }

  if (o1 != o2 && o3 != o4) {
    const double denom = cross(s.delta(), t.delta());
    if (denom == 0.0) return out;
    const double u = cross(t.a - s.a, t.delta()) / denom;
    out.kind = SegmentIntersection::Kind::Point;
    out.p = s.at(u);
    out.touching = near_endpoint(s, out.p, eps) || near_endpoint(t, out.p, eps);
    return out;
  }
  return out;
}

std::vector<Point> arc_sample(const Arc& arc, int k) {
  if (k < 1) throw InternalError("arc_sample: k must be >= 1");
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(k) + 1);
  const double sw = arc.sweep();
  const double step = (arc.dir == ArcDir::CCW ? sw : -sw) / k;
  for (int i = 0; i <= k; ++i) {
    pts.push_back(arc.point_at_angle(arc.start_angle + step * i));
  }
  return pts;
}

}  // namespace mfsquad
