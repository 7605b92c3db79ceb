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

#include <optional>
#include <utility>
#include <vector>

#include "mfsquad/geom.hpp"
#include "mfsquad/polygon.hpp"

namespace mfsquad {

/// All pipeline constants, as fixed fractions of the normalized unit
/// (the input is rescaled so its minimum feature size is 1).
struct PipelineConstants {
  static constexpr double t_inner = 2.0 / 5.0;     // inward offset to the inner wall
  static constexpr double t_back = 1.0 / 5.0;      // outward offset back; tube width
  static constexpr double track_gap = 1.0 / 40.0;  // track distance from the greater arc
  static constexpr double circle_diam = 1.0 / 20.0;
  static constexpr double circle_radius = 1.0 / 40.0;
  static constexpr double grid_step = 1.0 / 40.0;
  static constexpr double spacing_min = 1.0 / 20.0;  // min gap between circle boundaries
  static constexpr double spacing_max = 3.0 / 20.0;  // max gap between circle boundaries
};

/// One piece of a closed offset curve: a segment or a circular arc.
struct OffsetPiece {
  enum class Kind { Segment, Arc };
  Kind kind = Kind::Segment;
  Segment seg{};
  Arc arc{};
  int source = -1;  // source edge index (segments) or vertex index (arcs)

  Point start() const { return kind == Kind::Segment ? seg.a : arc.start(); }
  Point end() const { return kind == Kind::Segment ? seg.b : arc.end(); }
  double length() const { return kind == Kind::Segment ? seg.length() : arc.length(); }
};

/// Closed curve of alternating segments and arcs at constant distance from
/// the source polygon boundary.
struct OffsetLoop {
  std::vector<OffsetPiece> pieces;
  double offset_distance = 0.0;
};

/// Per-vertex turning piece of the tube. The greater and minor arcs are
/// concentric and co-angular at radial separation exactly t_back; the doors
/// join corresponding arc endpoints at right angles. Convex vertices carry
/// the greater arc on the outer wall (radius t_back about the inner-wall
/// miter corner) with a degenerate minor arc; reflex vertices carry it on
/// the inner wall (radius t_inner about the polygon vertex).
struct Bend {
  int vertex_index = -1;
  bool reflex = false;
  Point center{};
  double r_greater = 0.0;
  double r_minor = 0.0;
  double angle_in = 0.0;   // door angle on the incoming-edge side
  double angle_out = 0.0;  // door angle on the outgoing-edge side
  double sweep_angle = 0.0;  // always in [0, pi]
  ArcDir dir = ArcDir::CCW;  // CCW for convex bends, CW for reflex

  Arc greater_arc() const {
    return {center, r_greater, angle_in, angle_out, dir};
  }
  std::optional<Arc> minor_arc() const {
    if (r_minor <= 0.0) return std::nullopt;
    return Arc{center, r_minor, angle_in, angle_out, dir};
  }
  std::pair<Segment, Segment> doors() const;
  /// Distance from q to the closed bend region (greater arc, doors, minor
  /// arc/point).
  double region_distance(Point q) const;
};

struct TubeResult {
  Polygon polygon;  // the (normalized) source polygon
  OffsetLoop inner_wall;  // G_P(t_inner)
  OffsetLoop outer_wall;  // outward offset of the inner wall by t_back
  std::vector<Bend> bends;  // one per polygon vertex, in order
};

/// Piece of the closed center curve carrying the Steiner circles.
struct TrackPiece {
  OffsetPiece geom;
  int bend = -1;  // owning bend for arc pieces, -1 for straight connectors
  double s0 = 0.0;  // arclength of the piece start along the track
};

struct Track {
  std::vector<TrackPiece> pieces;
  double total_length = 0.0;
  /// Arclength interval [s0, s1] of each bend's track arc (s0 == s1 for
  /// degenerate zero-sweep bends).
  std::vector<std::pair<double, double>> bend_span;

  Point point_at(double s) const;
};

/// Rescales so mfs(P) = 1; returns the polygon and the scale factor that
/// restores the original units.
std::pair<Polygon, double> normalize(const Polygon& p, const Tolerance& tol = {});

/// Inward offset of a polygon with mfs 1 at distance 0 < t < 1/2: edges
/// translated inward, miter joins at convex vertices, arcs of radius t at
/// reflex vertices.
OffsetLoop inward_offset(const Polygon& p, double t, const Tolerance& tol = {});

/// Outward expansion of an inward-offset loop: segments translate outward,
/// arcs shrink concentrically, and convex loop corners are rounded with
/// arcs of radius t.
OffsetLoop outward_offset(const OffsetLoop& loop, double t, const Tolerance& tol = {});

/// Builds both walls and the per-vertex bends for a normalized polygon.
TubeResult build_tube(const Polygon& p, const Tolerance& tol = {});

/// Center curve: co-circular with each greater arc at distance track_gap
/// toward the tube interior, straight between bends.
Track build_track(const TubeResult& tube, const Tolerance& tol = {});

/// Sampled distance check: every point of the loop at the nominal distance
/// from the polygon boundary. Returns the maximum |distance - nominal|.
double offset_distance_error(const OffsetLoop& loop, const Polygon& p, int samples);

}  // namespace mfsquad
