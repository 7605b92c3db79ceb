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

#include <string>
#include <utility>
#include <vector>

#include "mfsquad/geom.hpp"
#include "mfsquad/polygon.hpp"

namespace mfsquad {

enum class VertexRole { Original, SteinerInner, SteinerTrap };
enum class EdgeRole { BoundaryP, InnerP, Chord, Trapezoid, DoorFree };

/// Planar straight-line drawing: indexed vertices, non-crossing edges,
/// per-vertex adjacency sorted by angle. Construction is append-only;
/// validation is an explicit final pass, not implicit on every mutation.
class Drawing {
 public:
  struct Vertex {
    Point p;
    VertexRole role = VertexRole::Original;
  };
  struct Edge {
    int a = -1, b = -1;
    EdgeRole role = EdgeRole::BoundaryP;
  };

  int add_vertex(Point p, VertexRole role = VertexRole::Original);
  /// Rejects self-loops; duplicate edges are merged during finalize.
  void add_edge(int a, int b, EdgeRole role = EdgeRole::BoundaryP);

  /// Merges duplicate edges and builds the angularly sorted adjacency.
  void finalize();

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Vertex& vertex(int i) const { return vertices_[static_cast<size_t>(i)]; }
  const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
  Point pos(int i) const { return vertices_[static_cast<size_t>(i)].p; }
  Segment seg(int e) const {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    return {pos(ed.a), pos(ed.b)};
  }
  void set_pos(int i, Point p) { vertices_[static_cast<size_t>(i)].p = p; }
  bool finalized() const { return finalized_; }

  /// Edge ids incident to vertex v, sorted CCW by direction angle.
  const std::vector<int>& incident(int v) const { return adjacency_[static_cast<size_t>(v)]; }
  int other_end(int e, int v) const {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    return ed.a == v ? ed.b : ed.a;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  bool finalized_ = false;
};

struct Face {
  std::vector<int> vertices;  // boundary walk, one entry per directed edge
  std::vector<int> edges;     // edge ids along the walk
  int corner_count = 0;       // boundary vertices with non-collinear incident edges
  bool is_outer = false;
  double signed_area = 0.0;
};

struct ValidationFinding {
  enum class Kind { Crossing, DuplicateVertex, DanglingEdge, EulerMismatch, Disconnected };
  Kind kind;
  int a = -1, b = -1;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationFinding> findings;
  bool empty() const { return findings.empty(); }
  bool has(ValidationFinding::Kind k) const;
  std::string summary() const;
};

/// Convenience constructor from raw points and index pairs. With
/// validate=true, crossing edges and duplicate vertices raise instead of
/// being silently accepted.
Drawing build_drawing(const std::vector<Point>& pts,
                      const std::vector<std::pair<int, int>>& edges,
                      bool validate = true, const Tolerance& tol = {});

/// Drawing consisting of the polygon boundary.
Drawing polygon_drawing(const Polygon& p);

/// Faces via next-edge-in-rotation traversal. Outer faces are the walks with
/// negative signed area (one per connected component).
std::vector<Face> extract_faces(const Drawing& d, const Tolerance& tol = {});

/// Structural validation: crossings (sweep over an AABB tree), duplicate
/// vertices, dangling edges, per-component Euler check. Empty report means
/// structurally sound.
ValidationReport validate(const Drawing& d, const Tolerance& tol = {});

}  // namespace mfsquad
