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

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "mfsquad/errors.hpp"

namespace mfsquad {

/// Absolute/relative tolerances used by the scale-relative predicates.
/// Coordinates are plain doubles throughout; the pipeline keeps all critical
/// clearances well above accumulated rounding, so no exact arithmetic is used.
struct Tolerance {
  double eps_abs = 1e-9;
  double eps_rel = 1e-12;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Point a, Point b) { return !(a == b); }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point p) { return std::sqrt(norm2(p)); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline double dist2(Point a, Point b) { return norm2(a - b); }
inline Point perp_left(Point p) { return {-p.y, p.x}; }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline Point normalized(Point p) {
  double n = norm(p);
  if (n == 0.0) throw InternalError("normalized: zero vector");
  return {p.x / n, p.y / n};
}

struct Segment {
  Point a, b;
  double length() const { return dist(a, b); }
  Point delta() const { return b - a; }
  Point at(double t) const { return a + t * (b - a); }
};

enum class ArcDir { CCW, CW };

/// Circular arc stored as (center, radius, angles). Endpoints are derived,
/// never stored. Sweep is measured along `dir` from start_angle to end_angle
/// and normalized into [0, 2*pi). A zero sweep denotes a degenerate arc
/// (single point), which the tube module produces at exactly-straight
/// polygon vertices.
struct Arc {
  Point center;
  double radius = 0.0;
  double start_angle = 0.0;
  double end_angle = 0.0;
  ArcDir dir = ArcDir::CCW;

  double sweep() const;
  Point point_at_angle(double ang) const {
    return {center.x + radius * std::cos(ang), center.y + radius * std::sin(ang)};
  }
  Point start() const { return point_at_angle(start_angle); }
  Point end() const { return point_at_angle(end_angle); }
  double length() const { return radius * sweep(); }
  /// Angle at arclength s from the start, following `dir`.
  double angle_at(double s) const {
    double da = radius > 0.0 ? s / radius : 0.0;
    return dir == ArcDir::CCW ? start_angle + da : start_angle - da;
  }
};

/// Normalizes an angle into [0, 2*pi).
double normalize_angle(double a);

/// Sign of twice the signed area of triangle abc. Returns 0 when the cross
/// product is below eps_abs scaled by the squared magnitude of the larger
/// difference vector (translation-invariant collinearity test).
int orient(Point a, Point b, Point c, const Tolerance& tol = {});

/// Euclidean distance from p to the closed segment s (endpoints included).
double dist_point_segment(Point p, const Segment& s);

struct SegmentIntersection {
  enum class Kind { None, Point, Overlap };
  Kind kind = Kind::None;
  Point p{};            // intersection point (Kind::Point) or overlap start
  Point q{};            // overlap end (Kind::Overlap)
  bool touching = false;  // contact at an endpoint of either segment
};

SegmentIntersection segment_intersection(const Segment& s, const Segment& t,
                                         const Tolerance& tol = {});

/// k+1 points at equal angular steps from the arc start to its end.
std::vector<Point> arc_sample(const Arc& arc, int k);

}  // namespace mfsquad
