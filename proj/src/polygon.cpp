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

#include "mfsquad/polygon.hpp"

#include <limits>
#include <string>

#include "mfsquad/segment_tree.hpp"

namespace mfsquad {

double Polygon::signed_area() const {
  double s = 0.0;
  const int n = size();
  for (int i = 0; i < n; ++i) {
    const Point& a = pts[static_cast<size_t>(i)];
    const Point& b = pts[static_cast<size_t>(wrap(i + 1))];
    s += cross(a, b);
  }
  return 0.5 * s;
}

double Polygon::boundary_distance(Point p) const {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i) best = std::min(best, dist_point_segment(p, edge(i)));
  return best;
}

bool Polygon::contains(Point p, const Tolerance& tol) const {
  // Boundary counts as inside.
  if (boundary_distance(p) <= tol.eps_abs) return true;
  // Crossing number with the half-open rule on edge y-spans.
  bool inside = false;
  const int n = size();
  for (int i = 0; i < n; ++i) {
    const Point a = pts[static_cast<size_t>(i)];
    const Point b = pts[static_cast<size_t>(wrap(i + 1))];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (xint > p.x) inside = !inside;
    }
  }
  return inside;
}

Polygon make_polygon(std::vector<Point> pts, const Tolerance& tol) {
  if (pts.size() < 3) throw DegeneratePolygon("polygon needs at least 3 vertices");
  for (const Point& p : pts) {
    if (!is_finite(p)) throw DegeneratePolygon("polygon has non-finite coordinates");
  }
  const size_t n = pts.size();
  for (size_t i = 0; i < n; ++i) {
    if (dist(pts[i], pts[(i + 1) % n]) <= tol.eps_abs)
      throw DegeneratePolygon("equal consecutive vertices at index " + std::to_string(i));
  }
  Polygon poly;
  poly.pts = std::move(pts);
  return poly;
}

namespace {

// Adjacent edges must meet only at the shared vertex; in particular a fold
// back along the previous edge (collinear overlap) is not simple.
bool adjacent_pair_ok(const Segment& e, const Segment& f, Point shared,
                      const Tolerance& tol) {
  auto r = segment_intersection(e, f, tol);
  if (r.kind == SegmentIntersection::Kind::None) return false;  // must touch
  if (r.kind == SegmentIntersection::Kind::Overlap) return false;
  return dist(r.p, shared) <= tol.eps_abs;
}

}  // namespace

bool polygon_is_simple(const Polygon& p, const Tolerance& tol,
                       std::pair<int, int>* offending) {
  const int n = p.size();
  auto check_pair = [&](int i, int j) {
    if (i == j) return true;
    const Segment e = p.edge(i);
    const Segment f = p.edge(j);
    const bool adj_next = p.wrap(i + 1) == j;
    const bool adj_prev = p.wrap(j + 1) == i;
    if (adj_next || adj_prev) {
      const Point shared = adj_next ? p.vertex(j) : p.vertex(i);
      if (!adjacent_pair_ok(e, f, shared, tol)) {
        if (offending) *offending = {i, j};
        return false;
      }
      return true;
    }
    if (segment_intersection(e, f, tol).kind != SegmentIntersection::Kind::None) {
      if (offending) *offending = {i, j};
      return false;
    }
    return true;
  };

  if (n <= 256) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!check_pair(i, j)) return false;
    return true;
  }

  std::vector<Segment> segs;
  segs.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) segs.push_back(p.edge(i));
  SegmentTree tree(std::move(segs));
  std::vector<int> hits;
  for (int i = 0; i < n; ++i) {
    const Segment e = p.edge(i);
    hits.clear();
    tree.query_box(std::min(e.a.x, e.b.x), std::min(e.a.y, e.b.y),
                   std::max(e.a.x, e.b.x), std::max(e.a.y, e.b.y), tol.eps_abs, hits);
    for (int j : hits) {
      if (j <= i) continue;
      if (!check_pair(i, j)) return false;
    }
  }
  return true;
}

}  // namespace mfsquad
