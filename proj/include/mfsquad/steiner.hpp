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

#include <vector>

#include "mfsquad/tube.hpp"

namespace mfsquad {

/// Candidate Steiner circle on the track (diameter circle_diam).
struct CircleSlot {
  Point center{};
  double s = 0.0;   // arclength position along the track
  int bend = -1;    // owning bend
  bool anchor = false;  // forced slot at a bend's track-arc midpoint
};

/// Inner polygon vertex: a grid point of the grid_step lattice chosen inside
/// its source circle. Lattice indices are kept exact for the trapezoidation.
struct InnerVertex {
  long ix = 0, iy = 0;  // lattice indices; position is (ix, iy) * grid_step
  Point p{};
  int slot = -1;
  int bend = -1;
};

struct InnerPolygon {
  std::vector<InnerVertex> v;
  int size() const { return static_cast<int>(v.size()); }
  Point pos(int i) const { return v[static_cast<size_t>(wrap(i))].p; }
  int wrap(int i) const {
    const int n = size();
    i %= n;
    return i < 0 ? i + n : i;
  }
  Polygon polygon() const;
};

/// Fills the track with circles: one anchor at each bend's track-arc
/// midpoint, even spacing between consecutive anchors with boundary gaps in
/// [spacing_min, spacing_max], then deletion of every circle whose disk does
/// not intersect a bend region. Surviving slots are tagged with their bend.
std::vector<CircleSlot> place_circles(const Track& track, const std::vector<Bend>& bends,
                                      const Tolerance& tol = {});

/// Same, but returns the full pre-deletion sequence (for spacing audits).
std::vector<CircleSlot> place_circles_all(const Track& track,
                                          const std::vector<Bend>& bends,
                                          const Tolerance& tol = {});

/// Snaps each slot to the nearest lattice point (ties broken lexicographically:
/// lowest x, then lowest y) and joins them in track order. Validates that each
/// grid point lies inside its circle and that the result is simple.
InnerPolygon snap_to_grid(const std::vector<CircleSlot>& slots, const Tolerance& tol = {});

struct SeparationReport {
  double min_boundary = 0.0;    // min over inner vertices of dist to polygon boundary
  int boundary_vertex = -1;
  double min_pairwise = 0.0;    // min pairwise inner-vertex distance
  int pair_a = -1, pair_b = -1;
  double min_cross_bend = 0.0;  // min pairwise distance across different bends
  int cross_a = -1, cross_b = -1;
};

/// Distance certificates between the (normalized) polygon and the inner
/// polygon; consumed by the acceptance suite.
SeparationReport separation_certificate(const Polygon& p, const InnerPolygon& inner);

}  // namespace mfsquad
