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

#include "mfsquad/drawing.hpp"
#include "mfsquad/steiner.hpp"
#include "mfsquad/tube.hpp"

namespace mfsquad {

/// Endpoint reference used by the trapezoidation before global vertex ids
/// exist: either an inner-polygon vertex or a newly created vertex on an
/// inner edge.
struct TrapEndpoint {
  bool is_new = false;
  int idx = -1;  // inner vertex index, or index into TrapResult::new_vertices
};

struct TrapNewVertex {
  int edge = -1;   // inner-polygon edge (from vertex `edge` to `edge`+1)
  double x = 0.0;  // crossing abscissa
  long row = 0;    // lattice row; y = row * grid_step
};

struct TrapChord {
  TrapEndpoint a, b;  // a is the source vertex side
  long row = 0;
  int source_vertex = -1;  // inner vertex whose ray produced the chord
};

struct TrapResult {
  std::vector<TrapNewVertex> new_vertices;
  std::vector<TrapChord> chords;
};

/// Horizontal trapezoidal decomposition of the inner polygon: from each
/// vertex, rays in the locally interior horizontal directions, clipped at the
/// first boundary contact. Rays along horizontal edges are suppressed;
/// zero-length chords are never emitted. Exact on the lattice.
TrapResult trapezoidate(const InnerPolygon& inner);

/// Chord edges of the zone: (polygon vertex, inner vertex) pairs for every
/// inner vertex in the polygon vertex's bend, plus collinear split links when
/// a chord passes through another Steiner vertex of the same bend after
/// snapping.
struct ChordSet {
  std::vector<std::pair<int, int>> apex;   // (polygon vertex, inner vertex)
  std::vector<std::pair<int, int>> links;  // (inner vertex, inner vertex)
};

ChordSet bend_chords(const Polygon& p, const InnerPolygon& inner, const Tolerance& tol = {});

/// The assembled output mesh, in the input polygon's original units.
struct Mesh {
  Drawing drawing;
  std::vector<Face> faces;          // all faces of the drawing
  std::vector<int> zone_faces;      // bounded faces touching the polygon or a chord
  std::vector<int> trap_faces;      // remaining bounded faces
  double scale = 1.0;               // normalization scale (mfs of the input)
  int input_size = 0;
  int steiner_inner = 0;
  int steiner_trap = 0;
  int steiner_count() const { return steiner_inner + steiner_trap; }
};

/// Full pipeline products, kept for certificates, tests and rendering.
struct PipelineTrace {
  Polygon input;
  Polygon normalized;
  double scale = 1.0;
  TubeResult tube;
  Track track;
  std::vector<CircleSlot> slots;
  InnerPolygon inner;
  ChordSet chords;
  TrapResult trap;
  Mesh mesh;
};

/// Top-level pipeline: normalize, build tube and track, place and snap
/// circles, add bend chords, trapezoidate the inner polygon, assemble and
/// validate the drawing, rescale to original units.
Mesh quadrangulate(const Polygon& p, const Tolerance& tol = {});
PipelineTrace quadrangulate_traced(const Polygon& p, const Tolerance& tol = {});

}  // namespace mfsquad
