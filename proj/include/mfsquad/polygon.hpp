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

#include <utility>
#include <vector>

#include "mfsquad/geom.hpp"

namespace mfsquad {

/// Ordered simple closed chain of points. Vertices are stored once; the edge
/// i runs from vertex i to vertex (i+1) mod n.
struct Polygon {
  std::vector<Point> pts;

  int size() const { return static_cast<int>(pts.size()); }
  const Point& vertex(int i) const { return pts[static_cast<size_t>(wrap(i))]; }
  Segment edge(int i) const { return {vertex(i), vertex(i + 1)}; }
  int wrap(int i) const {
    const int n = size();
    i %= n;
    return i < 0 ? i + n : i;
  }

  double signed_area() const;
  bool is_ccw() const { return signed_area() > 0.0; }
  void reverse() { std::reverse(pts.begin(), pts.end()); }

  /// Minimum distance from p to the boundary.
  double boundary_distance(Point p) const;

  /// Even-odd point-in-polygon test; boundary points count as inside.
  bool contains(Point p, const Tolerance& tol = {}) const;
};

/// Validates basic shape (>= 3 vertices, finite coordinates, no equal
/// consecutive vertices) and returns the polygon. Throws DegeneratePolygon.
Polygon make_polygon(std::vector<Point> pts, const Tolerance& tol = {});

/// True when no two non-adjacent edges intersect and adjacent edges touch
/// only at the shared vertex. On failure, `offending` receives an edge pair.
bool polygon_is_simple(const Polygon& p, const Tolerance& tol = {},
                       std::pair<int, int>* offending = nullptr);

}  // namespace mfsquad
